mod args;
mod input;
mod report;

use std::fmt::Write as _;
use std::process::ExitCode;

use burau_core::finitetype::{bk_coefficient, vassiliev_value, Mode, VassilievMatrix};
use burau_core::markov::{
    entropy_rate, evaluate_stochastic, limit_at_zero, persistence_check, persistence_exponent, simulate_walks,
    stationary, StationaryDistribution,
};
use burau_core::{burau_matrix, parse_singular_tangle, parse_tangle, series_burau, Error, StringLinkDiagram};
use clap::error::ErrorKind;
use clap::Parser;
use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use args::{Cli, Command};
use report::{fmt_g, float_grid, float_row, markov_json, pretty, rational_grid, rational_json, series_json};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or unreadable input: exit status 2.
    Input(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn status(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Core(e) if e.is_input_error() => 2,
            CliError::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

type Out = Result<String, CliError>;

fn diagram_out(d: &StringLinkDiagram, json: bool) -> String {
    if json {
        pretty(&json!({ "strands": d.n(), "crossings": d.crossing_count(), "diagram": d.render() }))
    } else {
        d.render()
    }
}

fn stationary_if_regular(
    d: &StringLinkDiagram,
    t0: &BigRational,
    tol: f64,
) -> Result<(Option<usize>, Option<StationaryDistribution>), CliError> {
    let n = persistence_exponent(d);
    let st = match n {
        Some(_) if !t0.is_one() => Some(stationary(d, t0, tol)?),
        _ => None,
    };
    Ok((n, st))
}

fn optional(x: Option<usize>) -> String {
    x.map_or_else(|| "none".into(), |v| v.to_string())
}

fn run(cli: Cli) -> Out {
    let json = cli.json;
    match cli.command {
        Command::Burau { input, eval } => {
            let b = burau_matrix(&input::diagram(&input)?)?;
            match eval {
                None if json => Ok(pretty(&serde_json::to_value(b.to_json()).expect("serializable"))),
                None => Ok(b.to_text()),
                Some(t) => {
                    let t0 = input::rational(&t)?;
                    let m = b.eval_exact(&t0)?;
                    let f: Vec<Vec<f64>> = m
                        .iter()
                        .map(|r| r.iter().map(|x| num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)).collect())
                        .collect();
                    if json {
                        Ok(pretty(&json!({ "t": t0.to_string(), "matrix": f, "exact": rational_json(&m) })))
                    } else {
                        Ok(float_grid(&f))
                    }
                }
            }
        }
        Command::Series { input, k } => {
            let s = series_burau(&input::diagram(&input)?, k);
            Ok(if json { pretty(&series_json(&s)) } else { s.to_text() })
        }
        Command::Compose { input, other } => {
            let d = input::diagram(&input)?;
            let top = input::other(&other, d.n())?;
            Ok(diagram_out(&d.compose(&top)?, json))
        }
        Command::Power { input, times } => Ok(diagram_out(&input::diagram(&input)?.power(times)?, json)),
        Command::Mirror { input } => Ok(diagram_out(&input::diagram(&input)?.mirror_vertical(), json)),
        Command::Move { input, spec, list } => {
            let d = input::diagram(&input)?;
            match (spec, list) {
                (None, true) => {
                    let moves: Vec<String> = d.available_moves().iter().map(input::render_move).collect();
                    Ok(if json {
                        pretty(&json!({ "moves": moves }))
                    } else {
                        moves.iter().map(|m| format!("{m}\n")).collect()
                    })
                }
                (Some(s), false) => Ok(diagram_out(&d.apply_move(&input::move_spec(&s)?)?, json)),
                _ => Err(CliError::Input("give exactly one of --move or --list".into())),
            }
        }
        Command::Vassiliev { input, double, k } => {
            let s = input::singular(&input, &double)?;
            let mode = k.map_or(Mode::Exact, |k| Mode::Series { max_jumps: k });
            let v = vassiliev_value(&s, mode)?;
            Ok(match (&v.matrix, json) {
                (VassilievMatrix::Exact(m), false) => m.to_text(),
                (VassilievMatrix::Series(m), false) => m.to_text(),
                (VassilievMatrix::Exact(m), true) => pretty(&json!({
                    "double_points": v.double_point_count,
                    "exact": serde_json::to_value(m.to_json()).expect("serializable"),
                })),
                (VassilievMatrix::Series(m), true) => pretty(&json!({
                    "double_points": v.double_point_count,
                    "series": series_json(m),
                })),
            })
        }
        Command::Bk { input, double, k } => {
            let s = input::singular(&input, &double)?;
            let b = bk_coefficient(&s, k);
            Ok(if json {
                pretty(&json!({ "k": k, "double_points": s.double_points().len(), "matrix": rational_json(&b) }))
            } else {
                rational_grid(&b)
            })
        }
        Command::Markov { input, t } => {
            let d = input::diagram(&input)?;
            let t0 = input::t_value(&t.t)?;
            let p = evaluate_stochastic(&d, &t0)?;
            let sums: Vec<f64> = p.p.iter().map(|r| r.iter().sum()).collect();
            let max_err = sums.iter().map(|s| (s - 1.0).abs()).fold(0.0, f64::max);
            let (n, st) = stationary_if_regular(&d, &t0, 1e-14)?;
            let entropy = if st.is_some() || t0.is_one() { Some(entropy_rate(&d, &t0)?) } else { None };
            if json {
                let limit: Vec<Vec<Option<String>>> = limit_at_zero(&d)?
                    .into_iter()
                    .map(|r| r.into_iter().map(|x| x.map(|v| v.to_string())).collect())
                    .collect();
                let diagnostics = json!({
                    "t": p.t_value,
                    "provenance": format!("{:016x}", p.provenance),
                    "row_sums": sums,
                    "max_row_sum_error": max_err,
                    "stationary_residual": st.as_ref().map(|s| s.residual),
                    "row_limit_gap": st.as_ref().map(|s| s.row_limit_gap),
                    "limit_at_zero": limit,
                });
                return Ok(pretty(&markov_json(&p.p, st.as_ref().map(|s| &s.u[..]), entropy, n, diagnostics)));
            }
            let mut out = format!("t = {}\n{}", p.t_value, float_grid(&p.p));
            let verdict = if max_err <= 1e-12 { "ok" } else { "FAILED" };
            writeln!(out, "row sums: {} ({verdict})", float_row(&sums)).unwrap();
            writeln!(out, "N = {}", optional(n)).unwrap();
            if let Some(st) = &st {
                writeln!(out, "u = {}", float_row(&st.u)).unwrap();
            }
            match entropy {
                Some(h) => writeln!(out, "entropy = {} bits", fmt_g(h)).unwrap(),
                None => writeln!(out, "entropy = undefined (chain is not regular)").unwrap(),
            }
            Ok(out)
        }
        Command::Simulate { input, t, trials, seed } => {
            let d = input::diagram(&input)?;
            let t0 = input::t_value(&t.t)?;
            let est = simulate_walks(&d, &t0, trials, seed)?;
            let exact = evaluate_stochastic(&d, &t0)?.p;
            let freq = est.frequencies();
            let worst = freq
                .iter()
                .flatten()
                .zip(exact.iter().flatten())
                .map(|(f, p)| {
                    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
                    if sigma > 0.0 {
                        (f - p).abs() / sigma
                    } else if f == p {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                })
                .fold(0.0, f64::max);
            if json {
                let diagnostics = json!({
                    "t": est.t_value,
                    "trials": trials,
                    "seed": seed,
                    "counts": est.counts,
                    "exact": exact,
                    "max_sigma": worst,
                });
                return Ok(pretty(&markov_json(&freq, None, None, None, diagnostics)));
            }
            let mut out = format!("t = {}, trials = {trials}, seed = {seed}\ncounts:\n", est.t_value);
            for r in &est.counts {
                writeln!(out, "[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")).unwrap();
            }
            write!(out, "frequencies:\n{}", float_grid(&freq)).unwrap();
            writeln!(out, "max deviation = {} sigma", fmt_g(worst)).unwrap();
            Ok(out)
        }
        Command::Stationary { input, t, tol } => {
            let d = input::diagram(&input)?;
            let t0 = input::t_value(&t.t)?;
            let st = stationary(&d, &t0, tol)?;
            let n = persistence_exponent(&d);
            if json {
                let p = evaluate_stochastic(&d, &t0)?.p;
                let diagnostics = json!({
                    "t": t0.to_string(),
                    "iterations": st.iterations,
                    "residual": st.residual,
                    "row_limit_gap": st.row_limit_gap,
                    "row_limit_power": st.row_limit_power,
                });
                return Ok(pretty(&markov_json(&p, Some(&st.u), None, n, diagnostics)));
            }
            Ok(format!(
                "u = {}\niterations = {}\nresidual = {}\nrow limit gap = {} (P^{})\n",
                float_row(&st.u),
                st.iterations,
                fmt_g(st.residual),
                fmt_g(st.row_limit_gap),
                st.row_limit_power
            ))
        }
        Command::Entropy { input, t } => {
            let d = input::diagram(&input)?;
            let t0 = input::t_value(&t.t)?;
            let h = entropy_rate(&d, &t0)?;
            if json {
                let p = evaluate_stochastic(&d, &t0)?.p;
                let (n, st) = stationary_if_regular(&d, &t0, 1e-14)?;
                let diagnostics = json!({ "t": t0.to_string(), "units": "bits" });
                return Ok(pretty(&markov_json(&p, st.as_ref().map(|s| &s.u[..]), Some(h), n, diagnostics)));
            }
            Ok(format!("{}\n", fmt_g(h)))
        }
        Command::Persistence { input, t, nmax } => {
            let d = input::diagram(&input)?;
            let t0 = input::t_value(&t.t)?;
            let rep = persistence_check(&d, &t0, nmax)?;
            let n = persistence_exponent(&d);
            if json {
                let diagnostics = json!({
                    "t": t0.to_string(),
                    "n_max": rep.n_max,
                    "partial_sums": rep.partial_sums,
                    "slopes": rep.slopes,
                    "all_persistent": rep.all_persistent,
                });
                return Ok(pretty(&markov_json(&rep.limit, rep.stationary.as_deref(), None, n, diagnostics)));
            }
            let mut out = format!("N = {}\nP^{nmax}:\n{}", optional(n), float_grid(&rep.limit));
            write!(out, "slopes:\n{}", float_grid(&rep.slopes)).unwrap();
            if let Some(u) = &rep.stationary {
                writeln!(out, "u = {}", float_row(u)).unwrap();
            }
            writeln!(out, "all states persistent: {}", if rep.all_persistent { "yes" } else { "no" }).unwrap();
            Ok(out)
        }
        Command::Validate { file, singular } => {
            let text = input::read_file(&file)?;
            let (n, c, dp) = if singular {
                let s = parse_singular_tangle(&text)?;
                (s.base().n(), s.base().crossing_count(), s.double_points().len())
            } else {
                let d = parse_tangle(&text)?;
                (d.n(), d.crossing_count(), 0)
            };
            Ok(if json {
                pretty(&json!({ "valid": true, "strands": n, "crossings": c, "double_points": dp }))
            } else if singular {
                format!("ok: strands={n} crossings={c} double_points={dp}\n")
            } else {
                format!("ok: strands={n} crossings={c}\n")
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status())
        }
    }
}
