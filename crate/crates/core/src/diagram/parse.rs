//! Text readers: whitespace-separated braid words and the line-oriented
//! tangle file format.
//!
//! ```text
//! # comment
//! strands 2
//! crossing c1 +
//! strand 1 from 1 to 2: Oc1
//! strand 2 from 2 to 1: Uc1
//! ```

use std::collections::{BTreeSet, HashMap};

use super::{Crossing, Encounter, Role, Sign, SingularStringLink, Strand, StringLinkDiagram};
use crate::error::{Error, ParseError, Result};

/// One braid generator `s<i>` (or its inverse), with `i` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    pub generator: usize,
    pub inverse: bool,
}

/// Splits a line into tokens with their 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (idx, ch)) in line.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((c0, i0)) = start.take() {
                out.push((c0, &line[i0..idx]));
            }
        } else if start.is_none() {
            start = Some((col + 1, idx));
        }
    }
    if let Some((c0, i0)) = start {
        out.push((c0, &line[i0..]));
    }
    out
}

/// Parses a braid word into letters, checking `1 <= i <= n-1`.
pub fn parse_braid_tokens(word: &str, n: usize) -> Result<Vec<BraidLetter>> {
    let mut letters = Vec::new();
    for (col, tok) in tokens(word) {
        let bad = |msg: String| Error::Parse(ParseError::new(1, col, msg));
        let body = tok
            .strip_prefix('s')
            .ok_or_else(|| bad(format!("malformed braid token `{tok}`")))?;
        let (digits, inverse) = match body.strip_suffix("^-1") {
            Some(d) => (d, true),
            None => (body, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(format!("malformed braid token `{tok}`")));
        }
        let generator: usize = digits
            .parse()
            .map_err(|_| bad(format!("malformed braid token `{tok}`")))?;
        if generator == 0 || generator >= n {
            return Err(bad(format!(
                "generator s{generator} out of range for {n} strands"
            )));
        }
        letters.push(BraidLetter { generator, inverse });
    }
    Ok(letters)
}

/// Builds the diagram of a braid word on `n` strands.
///
/// For `s_i` the strand entering at position `i` passes over and leaves at
/// `i + 1` (positive crossing); for `s_i^-1` the strand entering at `i + 1`
/// passes over and leaves at `i` (negative crossing).
pub fn parse_braid(word: &str, n: usize) -> Result<StringLinkDiagram> {
    if n == 0 {
        return Err(Error::InvalidArgument("strand count must be positive".into()));
    }
    let letters = parse_braid_tokens(word, n)?;
    let mut strands: Vec<Strand> = (0..n)
        .map(|i| Strand {
            source: i,
            sink: i,
            encounters: Vec::new(),
        })
        .collect();
    // at[p] = strand currently occupying position p
    let mut at: Vec<usize> = (0..n).collect();
    let mut crossings = Vec::with_capacity(letters.len());
    for (c, letter) in letters.iter().enumerate() {
        let left = at[letter.generator - 1];
        let right = at[letter.generator];
        let (over, under, sign) = if letter.inverse {
            (right, left, Sign::Negative)
        } else {
            (left, right, Sign::Positive)
        };
        strands[over].encounters.push(Encounter::over(c));
        strands[under].encounters.push(Encounter::under(c));
        crossings.push(Crossing { sign });
        at.swap(letter.generator - 1, letter.generator);
    }
    for (p, &s) in at.iter().enumerate() {
        strands[s].sink = p;
    }
    StringLinkDiagram::new(n, strands, crossings)
}

/// Reads a tangle file. Crossing lines may not carry the `double` flag.
pub fn parse_tangle(text: &str) -> Result<StringLinkDiagram> {
    let (d, double, line) = parse_any(text)?;
    if let Some((_, name)) = double.first() {
        return Err(Error::Parse(ParseError::new(
            line.get(name).copied().unwrap_or(1),
            1,
            format!("crossing {name} is a double point; not allowed in a plain string link"),
        )));
    }
    Ok(d)
}

/// Reads a tangle file whose crossing lines may carry a `double` flag.
pub fn parse_singular_tangle(text: &str) -> Result<SingularStringLink> {
    let (d, double, _) = parse_any(text)?;
    SingularStringLink::new(d, double.into_iter().map(|(c, _)| c).collect())
}

struct CrossingDecl {
    name: String,
    sign: Sign,
    double: bool,
    line: usize,
}

struct StrandDecl {
    label: usize,
    source: usize,
    sink: usize,
    encounters: Vec<(String, Role, usize, usize)>,
    line: usize,
}

/// Returns the validated diagram, the double points as `(index, name)` in the
/// canonical numbering, and the declaration line of each crossing name.
#[allow(clippy::type_complexity)]
fn parse_any(text: &str) -> Result<(StringLinkDiagram, Vec<(usize, String)>, HashMap<String, usize>)> {
    let mut n: Option<usize> = None;
    let mut crossings: Vec<CrossingDecl> = Vec::new();
    let mut strands: Vec<StrandDecl> = Vec::new();
    let err = |line: usize, col: usize, msg: String| Error::Parse(ParseError::new(line, col, msg));

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col0, head)) = toks.first() else {
            continue;
        };
        match head {
            "strands" => {
                if n.is_some() {
                    return Err(err(line_no, col0, "duplicate `strands` line".into()));
                }
                if toks.len() != 2 {
                    return Err(err(line_no, col0, "expected `strands <n>`".into()));
                }
                let (c, v) = toks[1];
                let v: usize = v
                    .parse()
                    .map_err(|_| err(line_no, c, format!("invalid strand count `{v}`")))?;
                if v == 0 {
                    return Err(err(line_no, c, "strand count must be positive".into()));
                }
                n = Some(v);
            }
            "crossing" => {
                if toks.len() < 3 || toks.len() > 4 {
                    return Err(err(line_no, col0, "expected `crossing <id> <+|-> [double]`".into()));
                }
                let (cid, name) = toks[1];
                check_ident(name).map_err(|m| err(line_no, cid, m))?;
                if crossings.iter().any(|c| c.name == name) {
                    return Err(err(line_no, cid, format!("crossing {name} declared twice")));
                }
                let (cs, s) = toks[2];
                let sign = match s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    _ => return Err(err(line_no, cs, format!("invalid sign `{s}`"))),
                };
                let double = match toks.get(3) {
                    None => false,
                    Some(&(_, "double")) => true,
                    Some(&(cd, other)) => {
                        return Err(err(line_no, cd, format!("unexpected token `{other}`")))
                    }
                };
                crossings.push(CrossingDecl {
                    name: name.to_string(),
                    sign,
                    double,
                    line: line_no,
                });
            }
            "strand" => strands.push(parse_strand_line(content, line_no)?),
            other => return Err(err(line_no, col0, format!("unknown directive `{other}`"))),
        }
    }

    let n = n.ok_or_else(|| err(1, 1, "missing `strands <n>` line".into()))?;
    let index: HashMap<&str, usize> = crossings
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.as_str(), i))
        .collect();

    let mut counts = vec![(0usize, 0usize); crossings.len()];
    let mut labels = BTreeSet::new();
    let mut built = Vec::with_capacity(strands.len());
    for s in &strands {
        if s.label == 0 || s.label > n || !labels.insert(s.label) {
            return Err(err(s.line, 1, format!("strand label {} is invalid or repeated", s.label)));
        }
        if s.source == 0 || s.source > n || s.sink == 0 || s.sink > n {
            return Err(err(s.line, 1, format!("positions must lie in 1..{n}")));
        }
        let mut encounters = Vec::with_capacity(s.encounters.len());
        for (name, role, line, col) in &s.encounters {
            let &c = index
                .get(name.as_str())
                .ok_or_else(|| err(*line, *col, format!("undeclared crossing {name}")))?;
            match role {
                Role::Over => counts[c].0 += 1,
                Role::Under => counts[c].1 += 1,
            }
            encounters.push(Encounter {
                crossing: c,
                role: *role,
            });
        }
        built.push(Strand {
            source: s.source - 1,
            sink: s.sink - 1,
            encounters,
        });
    }
    if strands.len() != n {
        return Err(err(1, 1, format!("expected {n} strand lines, found {}", strands.len())));
    }
    for (decl, (o, u)) in crossings.iter().zip(&counts) {
        let total = o + u;
        if total != 2 {
            return Err(err(
                decl.line,
                1,
                format!(
                    "crossing {} has {} encounter{}",
                    decl.name,
                    total,
                    if total == 1 { "" } else { "s" }
                ),
            ));
        }
        if *o != 1 {
            let role = if *o == 2 { "Over" } else { "Under" };
            return Err(err(
                decl.line,
                1,
                format!("crossing {} has two {role} encounters", decl.name),
            ));
        }
    }

    // The canonical relabeling permutes crossing indices, so carry the
    // double flags through as a marker encoded in the original order.
    let decl_signs: Vec<Crossing> = crossings.iter().map(|c| Crossing { sign: c.sign }).collect();
    let first_seen = first_appearance(n, &built, crossings.len());
    let d = StringLinkDiagram::new(n, built, decl_signs).map_err(|e| match e {
        Error::Validation(m) => err(1, 1, m),
        other => other,
    })?;
    let double = crossings
        .iter()
        .enumerate()
        .filter(|(_, c)| c.double)
        .map(|(i, c)| (first_seen[i], c.name.clone()))
        .collect();
    let lines = crossings.iter().map(|c| (c.name.clone(), c.line)).collect();
    Ok((d, double, lines))
}

/// Mirrors the relabeling done by canonicalization: original crossing index
/// to canonical index.
fn first_appearance(n: usize, strands: &[Strand], m: usize) -> Vec<usize> {
    let mut order: Vec<&Strand> = strands.iter().collect();
    order.sort_by_key(|s| s.source);
    let mut relabel = vec![usize::MAX; m];
    let mut next = 0;
    for s in order.into_iter().take(n) {
        for e in &s.encounters {
            if relabel[e.crossing] == usize::MAX {
                relabel[e.crossing] = next;
                next += 1;
            }
        }
    }
    relabel
}

fn check_ident(name: &str) -> std::result::Result<(), String> {
    if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        Ok(())
    } else {
        Err(format!("invalid crossing id `{name}`"))
    }
}

fn parse_strand_line(content: &str, line: usize) -> Result<StrandDecl> {
    let err = |col: usize, msg: String| Error::Parse(ParseError::new(line, col, msg));
    let colon = content
        .find(':')
        .ok_or_else(|| err(1, "expected `strand <k> from <i> to <j>: <encounters>`".into()))?;
    let colon_col = content[..colon].chars().count() + 1;
    let head = tokens(&content[..colon]);
    let shape_ok = head.len() == 6 && head[0].1 == "strand" && head[2].1 == "from" && head[4].1 == "to";
    if !shape_ok {
        let col = head.first().map_or(1, |t| t.0);
        return Err(err(col, "expected `strand <k> from <i> to <j>: <encounters>`".into()));
    }
    let num = |(c, s): (usize, &str)| {
        s.parse::<usize>()
            .map_err(|_| err(c, format!("expected a position, found `{s}`")))
    };
    let label = num(head[1])?;
    let source = num(head[3])?;
    let sink = num(head[5])?;
    let mut encounters = Vec::new();
    for (c, tok) in tokens(&content[colon + 1..]) {
        let col = colon_col + c;
        let role = match tok.chars().next() {
            Some('O') => Role::Over,
            Some('U') => Role::Under,
            _ => return Err(err(col, format!("malformed encounter `{tok}`; expected O<id> or U<id>"))),
        };
        let name = &tok[1..];
        check_ident(name).map_err(|m| err(col, m))?;
        encounters.push((name.to_string(), role, line, col));
    }
    Ok(StrandDecl {
        label,
        source,
        sink,
        encounters,
        line,
    })
}
