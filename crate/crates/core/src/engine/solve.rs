//! Fraction-free (Bareiss) elimination over `Z[t]`.
//!
//! Relations at negative crossings are multiplied by `t` so every coefficient
//! is an ordinary polynomial. Elimination keeps all entries in `Z[t]` using
//! exact division by the previous pivot, and back-substitution produces
//! `det · x` as polynomials; the only rational-function step is the final
//! division by the determinant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LinearSystem, Target};
use crate::error::{Error, Result};
use crate::ratfun::dense::{self, Dense};
use crate::ratfun::{LaurentPoly, RatFun};

fn int(c: i64) -> BigInt {
    BigInt::from(c)
}

/// `c0 + c1 t`.
fn lin(c0: i64, c1: i64) -> Dense {
    let mut p = vec![int(c0), int(c1)];
    dense::trim(&mut p);
    p
}

fn add_into(slot: &mut Dense, p: &Dense) {
    *slot = dense::add(slot, p);
}

/// Solves `(I - M) A = c` and returns `A_v` for every variable `v`.
pub fn solve_exact(sys: &LinearSystem) -> Result<Vec<Vec<RatFun>>> {
    let m = sys.variables().len();
    let n = sys.n();
    if m == 0 {
        return Ok(Vec::new());
    }
    let width = m + n;
    let mut a: Vec<Vec<Dense>> = vec![vec![Vec::new(); width]; m];
    for (v, row) in a.iter_mut().enumerate() {
        // Positive: A_v - t A_s - (1-t) A_j = 0.
        // Negative, times t: t A_v - A_s - (t-1) A_j = 0.
        let (diag, stay, jump) = match sys.variables()[v].sign.exponent() {
            1 => (lin(1, 0), lin(0, 1), lin(1, -1)),
            _ => (lin(0, 1), lin(1, 0), lin(-1, 1)),
        };
        add_into(&mut row[v], &diag);
        for (target, coef) in [(sys.stay_successor(v), stay), (sys.jump_successor(v), jump)] {
            match target {
                Target::Var(u) => add_into(&mut row[u], &dense::scale(&coef, &int(-1))),
                Target::Sink(j) => add_into(&mut row[m + j], &coef),
            }
        }
    }

    let mut prev: Dense = vec![int(1)];
    for k in 0..m {
        let p = (k..m)
            .find(|&r| !a[r][k].is_empty())
            .ok_or_else(|| Error::Internal("walk system is structurally singular".into()))?;
        a.swap(k, p);
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..width {
                let keep = dense::mul(pivot, &row[j]);
                let cross = if factor.is_empty() || pivot_row[j].is_empty() {
                    Vec::new()
                } else {
                    dense::mul(&factor, &pivot_row[j])
                };
                let num = dense::sub(&keep, &cross);
                row[j] = dense::div_exact(&num, &prev).ok_or_else(|| {
                    Error::Internal("fraction-free elimination lost exactness".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }

    // Back substitution for N_k = det * x_k, all in Z[t].
    let det = prev;
    let mut scaled: Vec<Vec<Dense>> = vec![Vec::new(); m];
    for k in (0..m).rev() {
        let mut rhs: Vec<Dense> = (0..n).map(|c| dense::mul(&det, &a[k][m + c])).collect();
        for j in k + 1..m {
            if a[k][j].is_empty() {
                continue;
            }
            for (c, r) in rhs.iter_mut().enumerate() {
                *r = dense::sub(r, &dense::mul(&a[k][j], &scaled[j][c]));
            }
        }
        scaled[k] = rhs
            .iter()
            .map(|r| {
                dense::div_exact(r, &a[k][k]).ok_or_else(|| {
                    Error::Internal("back substitution lost exactness".into())
                })
            })
            .collect::<Result<_>>()?;
    }

    let det_poly = LaurentPoly::from_dense(0, &det);
    scaled
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|num| {
                    if num.iter().all(Zero::is_zero) {
                        Ok(RatFun::zero())
                    } else {
                        RatFun::new(LaurentPoly::from_dense(0, &num), det_poly.clone())
                    }
                })
                .collect()
        })
        .collect()
}
