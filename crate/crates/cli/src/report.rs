//! Deterministic text and JSON rendering.

use burau_core::matrix::SeriesMatrix;
use num_rational::BigRational;
use serde_json::{json, Value};

/// `%.12g`: 12 significant digits, trailing zeros trimmed, scientific
/// notation outside `[1e-5, 1e12)`.
pub fn fmt_g(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let m = trim_zeros(mantissa);
        return format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn float_row(row: &[f64]) -> String {
    format!("[{}]", row.iter().map(|&x| fmt_g(x)).collect::<Vec<_>>().join(", "))
}

pub fn float_grid(m: &[Vec<f64>]) -> String {
    m.iter().map(|r| float_row(r) + "\n").collect()
}

pub fn rational_grid(m: &[Vec<BigRational>]) -> String {
    m.iter()
        .map(|r| format!("[{}]\n", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect()
}

pub fn rational_json(m: &[Vec<BigRational>]) -> Value {
    json!(m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// Entry `(i, j)` becomes the list of its `h`-coefficients as fraction strings.
pub fn series_json(s: &SeriesMatrix) -> Value {
    let entries: Vec<Vec<Vec<String>>> = s
        .rows()
        .map(|r| r.iter().map(|e| e.coeffs().iter().map(|c| c.to_string()).collect()).collect())
        .collect();
    json!({ "n": s.n(), "order": s.order(), "entries": entries })
}

/// The Markov report shared by `markov`, `simulate`, `stationary`, `entropy`
/// and `persistence`.
pub fn markov_json(
    matrix: &[Vec<f64>],
    u: Option<&[f64]>,
    entropy: Option<f64>,
    n: Option<usize>,
    diagnostics: Value,
) -> Value {
    json!({
        "matrix": matrix,
        "u": u,
        "entropy": entropy,
        "N": n,
        "diagnostics": diagnostics,
    })
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}
