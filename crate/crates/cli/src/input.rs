use std::fs;
use std::path::Path;
use std::str::FromStr;

use burau_core::diagram::MoveSpec;
use burau_core::{parse_braid, parse_singular_tangle, parse_tangle, Sign, SingularStringLink, StringLinkDiagram};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::args::{Input, Other};
use crate::CliError;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn source<'a>(braid: &'a Option<String>, n: Option<usize>, file: &'a Option<std::path::PathBuf>) -> Result<Source<'a>, CliError> {
    match (braid, file) {
        (Some(w), None) => {
            let n = n.ok_or_else(|| CliError::Input("--braid needs -n".into()))?;
            Ok(Source::Braid(w, n))
        }
        (None, Some(p)) => {
            if n.is_some() {
                return Err(CliError::Input("-n only applies to --braid".into()));
            }
            Ok(Source::File(p))
        }
        (Some(_), Some(_)) => Err(CliError::Input("give either a braid or a file, not both".into())),
        (None, None) => Err(CliError::Input("no input: use --braid with -n, or --file".into())),
    }
}

enum Source<'a> {
    Braid(&'a str, usize),
    File(&'a Path),
}

pub fn diagram(input: &Input) -> Result<StringLinkDiagram, CliError> {
    match source(&input.braid, input.n, &input.file)? {
        Source::Braid(w, n) => Ok(parse_braid(w, n)?),
        Source::File(p) => Ok(parse_tangle(&read_file(p)?)?),
    }
}

/// The stacked diagram has the input's strand count.
pub fn other(o: &Other, n: usize) -> Result<StringLinkDiagram, CliError> {
    match source(&o.with_braid, o.with_braid.as_ref().map(|_| n), &o.with_file)? {
        Source::Braid(w, n) => Ok(parse_braid(w, n)?),
        Source::File(p) => Ok(parse_tangle(&read_file(p)?)?),
    }
}

/// File input may carry `double` flags; `--double` marks further crossings.
pub fn singular(input: &Input, double: &[usize]) -> Result<SingularStringLink, CliError> {
    let s = match source(&input.braid, input.n, &input.file)? {
        Source::Braid(w, n) => parse_braid(w, n)?.make_singular(&Default::default())?,
        Source::File(p) => parse_singular_tangle(&read_file(p)?)?,
    };
    if double.is_empty() {
        return Ok(s);
    }
    let mut ids = s.double_points().clone();
    for &c in double {
        if c == 0 {
            return Err(CliError::Input("crossing numbers start at 1".into()));
        }
        ids.insert(c - 1);
    }
    Ok(s.base().make_singular(&ids)?)
}

/// `3/4`, `0.75` or `1`.
pub fn rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Input(format!("not a rational number: {text:?}"));
    let s = text.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num = BigInt::from_str(&digits).map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    let r = BigRational::from_str(s).map_err(|_| bad())?;
    Ok(r)
}

pub fn t_value(text: &str) -> Result<BigRational, CliError> {
    let t = rational(text)?;
    if t <= BigRational::zero() || t > BigRational::one() {
        return Err(CliError::Input(format!("--t must lie in (0, 1], got {text}")));
    }
    Ok(t)
}

/// Move grammar, strands and crossings 1-based, positions 0-based:
/// `r1:STRAND:POS:SIGN:ou|uo`, `r1del:C`, `r2:OSTRAND:OPOS:USTRAND:UPOS:SIGN[:rev]`,
/// `r2del:C1:C2`, `r3:C1:C2:C3`. SIGN is `+` or `-`.
pub fn move_spec(text: &str) -> Result<MoveSpec, CliError> {
    let bad = |why: &str| CliError::Input(format!("bad move {text:?}: {why}"));
    let parts: Vec<&str> = text.trim().split(':').collect();
    let one_based = |s: &str| -> Result<usize, CliError> {
        match s.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(bad(&format!("{s:?} is not a positive integer"))),
        }
    };
    let index = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("{s:?} is not a position")));
    let sign = |s: &str| match s {
        "+" => Ok(Sign::Positive),
        "-" => Ok(Sign::Negative),
        _ => Err(bad("sign must be + or -")),
    };
    match (parts[0], parts.len()) {
        ("r1", 5) => Ok(MoveSpec::R1Insert {
            strand: one_based(parts[1])?,
            position: index(parts[2])?,
            sign: sign(parts[3])?,
            over_first: match parts[4] {
                "ou" => true,
                "uo" => false,
                _ => return Err(bad("order must be ou or uo")),
            },
        }),
        ("r1del", 2) => Ok(MoveSpec::R1Delete { crossing: one_based(parts[1])? }),
        ("r2", 6 | 7) => Ok(MoveSpec::R2Insert {
            over_strand: one_based(parts[1])?,
            over_position: index(parts[2])?,
            under_strand: one_based(parts[3])?,
            under_position: index(parts[4])?,
            first_sign: sign(parts[5])?,
            under_reversed: match parts.get(6) {
                None => false,
                Some(&"rev") => true,
                Some(_) => return Err(bad("trailing field must be rev")),
            },
        }),
        ("r2del", 3) => Ok(MoveSpec::R2Delete {
            first: one_based(parts[1])?,
            second: one_based(parts[2])?,
        }),
        ("r3", 4) => Ok(MoveSpec::R3 {
            crossings: [one_based(parts[1])?, one_based(parts[2])?, one_based(parts[3])?],
        }),
        ("r1" | "r1del" | "r2" | "r2del" | "r3", _) => Err(bad("wrong number of fields")),
        _ => Err(bad("unknown move kind")),
    }
}

/// Inverse of [`move_spec`] for the moves `available_moves` lists.
pub fn render_move(m: &MoveSpec) -> String {
    match m {
        MoveSpec::R1Delete { crossing } => format!("r1del:{}", crossing + 1),
        MoveSpec::R2Delete { first, second } => format!("r2del:{}:{}", first + 1, second + 1),
        MoveSpec::R3 { crossings: [a, b, c] } => format!("r3:{}:{}:{}", a + 1, b + 1, c + 1),
        MoveSpec::R1Insert { strand, position, sign, over_first } => format!(
            "r1:{}:{position}:{}:{}",
            strand + 1,
            sign.symbol(),
            if *over_first { "ou" } else { "uo" }
        ),
        MoveSpec::R2Insert {
            over_strand,
            over_position,
            under_strand,
            under_position,
            first_sign,
            under_reversed,
        } => format!(
            "r2:{}:{over_position}:{}:{under_position}:{}{}",
            over_strand + 1,
            under_strand + 1,
            first_sign.symbol(),
            if *under_reversed { ":rev" } else { "" }
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(rational("1/2").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(rational("0.75").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(rational("1").unwrap(), BigRational::one());
        assert!(rational("x").is_err());
        assert!(t_value("0").is_err());
        assert!(t_value("1.5").is_err());
    }

    #[test]
    fn moves_round_trip() {
        for s in ["r1:1:0:+:ou", "r1:2:3:-:uo", "r1del:4", "r2:1:0:2:1:-", "r2:1:0:1:0:+:rev", "r2del:1:2", "r3:1:2:3"] {
            assert_eq!(render_move(&move_spec(s).unwrap()), s);
        }
        assert!(move_spec("r3:1:2").is_err());
        assert!(move_spec("r4:1").is_err());
        assert!(move_spec("r1del:0").is_err());
    }
}
