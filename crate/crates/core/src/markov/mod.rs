//! Positive string links as Markov chains on strand positions.
//!
//! For a positive diagram and `t` in `(0, 1]` every Burau entry is a
//! probability: the chance that a ball bowled at source `i`, dropping to the
//! lower lane with probability `1 - t` at each over-crossing, arrives at
//! sink `j`.

mod sim;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::diagram::StringLinkDiagram;
use crate::engine::{burau_matrix, primitivity_index, reachability};
use crate::error::{Error, Result};

pub use sim::{simulate_walks, WalkEstimate, CHUNK_TRIALS};

/// Row-stochastic matrix of a positive diagram at a fixed `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StochasticMatrix {
    pub p: Vec<Vec<f64>>,
    pub t_value: String,
    /// FNV-1a hash of the diagram's canonical tangle text.
    pub provenance: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StationaryDistribution {
    pub u: Vec<f64>,
    pub iterations: usize,
    /// `max_j |(uP - u)_j|` at termination.
    pub residual: f64,
    /// `max_ij |P^n[i][j] - u_j|` for the power `n` used in the row-limit check.
    pub row_limit_gap: f64,
    pub row_limit_power: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PersistenceReport {
    pub n_max: usize,
    /// `sum_{n=1}^{n_max} P^n`.
    pub partial_sums: Vec<Vec<f64>>,
    /// `P^{n_max}`.
    pub limit: Vec<Vec<f64>>,
    /// Growth rate of the partial sums over the second half of the range.
    pub slopes: Vec<Vec<f64>>,
    /// Present when the chain is regular.
    pub stationary: Option<Vec<f64>>,
    /// Every state visited infinitely often from every other: regular chain
    /// with all limit entries strictly positive.
    pub all_persistent: bool,
}

pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(*b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn require_positive(d: &StringLinkDiagram) -> Result<()> {
    match d.first_negative() {
        Some(c) => Err(Error::NotPositive((c + 1).to_string())),
        None => Ok(()),
    }
}

fn require_t(t0: &BigRational, allow_one: bool) -> Result<()> {
    let ok = t0 > &BigRational::zero() && (t0 < &BigRational::one() || allow_one && t0.is_one());
    if ok {
        Ok(())
    } else {
        Err(Error::TOutOfRange(
            t0.to_string(),
            if allow_one { "(0, 1]" } else { "(0, 1)" },
        ))
    }
}

/// Exact evaluation of `B(d)` at `t0`, rounded to `f64` once.
pub fn evaluate_stochastic(d: &StringLinkDiagram, t0: &BigRational) -> Result<StochasticMatrix> {
    require_positive(d)?;
    require_t(t0, true)?;
    let exact = burau_matrix(d)?.eval_exact(t0)?;
    for (i, row) in exact.iter().enumerate() {
        let sum: BigRational = row.iter().fold(BigRational::zero(), |a, x| a + x);
        if !sum.is_one() || row.iter().any(|x| x < &BigRational::zero()) {
            return Err(Error::Internal(format!("row {} is not stochastic", i + 1)));
        }
    }
    let p = exact
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    Ok(StochasticMatrix {
        p,
        t_value: t0.to_string(),
        provenance: fnv1a(d.render().as_bytes()),
    })
}

/// Entrywise limit of `B(d)` as `t -> 0+`; `None` entries diverge.
/// Diagnostic only.
pub fn limit_at_zero(d: &StringLinkDiagram) -> Result<Vec<Vec<Option<BigRational>>>> {
    let b = burau_matrix(d)?;
    Ok(b.rows().map(|r| r.iter().map(|e| e.limit_at_zero()).collect()).collect())
}

/// Least `N` such that every source reaches every sink on `d^N`.
pub fn persistence_exponent(d: &StringLinkDiagram) -> Option<usize> {
    primitivity_index(&reachability(d))
}

pub fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mat_pow(p: &[Vec<f64>], mut k: u64) -> Vec<Vec<f64>> {
    let n = p.len();
    let mut acc: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut base = p.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        k >>= 1;
    }
    acc
}

fn left_apply(u: &[f64], p: &[Vec<f64>]) -> Vec<f64> {
    let n = u.len();
    (0..n).map(|j| (0..n).map(|i| u[i] * p[i][j]).sum()).collect()
}

const MAX_ITERATIONS: usize = 10_000_000;

/// Power iteration `u <- uP` from the uniform vector, plus the independent
/// row-limit route: rows of `P^n` for `n = 2^k` until they stop moving.
pub fn stationary_of_matrix(p: &[Vec<f64>], tol: f64) -> Result<StationaryDistribution> {
    let n = p.len();
    let mut u = vec![1.0 / n as f64; n];
    let mut iterations = 0;
    let residual = loop {
        let next = left_apply(&u, p);
        let r = next.iter().zip(&u).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let total: f64 = next.iter().sum();
        u = next.into_iter().map(|x| x / total).collect();
        iterations += 1;
        if r <= tol {
            break r;
        }
        if iterations >= MAX_ITERATIONS {
            return Err(Error::Internal("power iteration did not converge".into()));
        }
    };
    let mut power = 1u64;
    let mut pk = p.to_vec();
    loop {
        let next = mat_mul(&pk, &pk);
        power *= 2;
        let moved = next
            .iter()
            .flatten()
            .zip(pk.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        pk = next;
        if moved <= f64::EPSILON * 4.0 || power >= 1 << 40 {
            break;
        }
    }
    let row_limit_gap = pk
        .iter()
        .flat_map(|row| row.iter().zip(&u).map(|(a, b)| (a - b).abs()))
        .fold(0.0, f64::max);
    Ok(StationaryDistribution {
        u,
        iterations,
        residual,
        row_limit_gap,
        row_limit_power: power,
    })
}

pub fn stationary(d: &StringLinkDiagram, t0: &BigRational, tol: f64) -> Result<StationaryDistribution> {
    require_t(t0, false)?;
    let p = evaluate_stochastic(d, t0)?;
    if persistence_exponent(d).is_none() {
        return Err(Error::NotRegular);
    }
    stationary_of_matrix(&p.p, tol)
}

fn row_entropies(p: &[Vec<f64>]) -> Vec<f64> {
    p.iter()
        .map(|row| {
            -row.iter()
                .filter(|&&x| x > 0.0)
                .map(|&x| x * x.log2())
                .sum::<f64>()
        })
        .collect()
}

/// `H = -sum_i u_i sum_j p_ij log2 p_ij`, in bits. Chains whose rows are all
/// deterministic have rate 0 whatever the initial distribution.
pub fn entropy_rate(d: &StringLinkDiagram, t0: &BigRational) -> Result<f64> {
    let p = evaluate_stochastic(d, t0)?;
    let rows = row_entropies(&p.p);
    if rows.iter().all(|&h| h == 0.0) {
        return Ok(0.0);
    }
    let st = stationary(d, t0, 1e-14)?;
    Ok(st.u.iter().zip(&rows).map(|(u, h)| u * h).sum::<f64>().max(0.0))
}

pub fn persistence_check(d: &StringLinkDiagram, t0: &BigRational, n_max: usize) -> Result<PersistenceReport> {
    require_t(t0, false)?;
    if n_max < 2 {
        return Err(Error::InvalidArgument("n_max must be at least 2".into()));
    }
    let p = evaluate_stochastic(d, t0)?.p;
    let n = p.len();
    let half = n_max / 2;
    let mut pk = p.clone();
    let mut sums = vec![vec![0.0; n]; n];
    let mut at_half = sums.clone();
    for k in 1..=n_max {
        if k > 1 {
            pk = mat_mul(&pk, &p);
        }
        for i in 0..n {
            for j in 0..n {
                sums[i][j] += pk[i][j];
            }
        }
        if k == half {
            at_half = sums.clone();
        }
    }
    let span = (n_max - half) as f64;
    let slopes = (0..n)
        .map(|i| (0..n).map(|j| (sums[i][j] - at_half[i][j]) / span).collect())
        .collect();
    let stationary = match persistence_exponent(d) {
        Some(_) => Some(stationary_of_matrix(&p, 1e-15)?.u),
        None => None,
    };
    let all_persistent = stationary.is_some() && pk.iter().flatten().all(|&x| x > 0.0);
    Ok(PersistenceReport {
        n_max,
        partial_sums: sums,
        limit: pk,
        slopes,
        stationary,
        all_persistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_tangle};

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn sigma1_at_half() {
        let m = evaluate_stochastic(&parse_braid("s1", 2).unwrap(), &half()).unwrap();
        assert_eq!(m.p, vec![vec![0.5, 0.5], vec![1.0, 0.0]]);
    }

    #[test]
    fn t_one_gives_permutation() {
        let d = parse_braid("s1 s2 s1 s1", 3).unwrap();
        let m = evaluate_stochastic(&d, &BigRational::one()).unwrap();
        for (i, row) in m.p.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if d.permutation()[i] == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn rejects_negative_and_bad_t() {
        let kink = parse_tangle("strands 1\ncrossing 1 -\nstrand 1 from 1 to 1: U1 O1\n").unwrap();
        let err = evaluate_stochastic(&kink, &half()).unwrap_err();
        assert!(err.to_string().contains("requires positive string links"));
        let d = parse_braid("s1", 2).unwrap();
        assert!(matches!(
            evaluate_stochastic(&d, &BigRational::zero()),
            Err(Error::TOutOfRange(..))
        ));
        assert!(matches!(stationary(&d, &BigRational::one(), 1e-12), Err(Error::TOutOfRange(..))));
    }

    #[test]
    fn sigma1_stationary_and_entropy() {
        let d = parse_braid("s1", 2).unwrap();
        let st = stationary(&d, &half(), 1e-15).unwrap();
        assert!((st.u[0] - 2.0 / 3.0).abs() < 1e-12);
        assert!((st.u[1] - 1.0 / 3.0).abs() < 1e-12);
        let p50 = mat_pow(&[vec![0.5, 0.5], vec![1.0, 0.0]], 50);
        for row in &p50 {
            assert!((row[0] - st.u[0]).abs() < 1e-9 && (row[1] - st.u[1]).abs() < 1e-9);
        }
        let h = entropy_rate(&d, &half()).unwrap();
        assert!((h - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn deterministic_chains_have_zero_entropy() {
        let id = StringLinkDiagram::identity(3);
        assert_eq!(entropy_rate(&id, &half()).unwrap(), 0.0);
        let d = parse_braid("s1 s2", 3).unwrap();
        assert_eq!(entropy_rate(&d, &BigRational::one()).unwrap(), 0.0);
    }

    #[test]
    fn doubly_stochastic_gives_uniform() {
        let p = vec![vec![0.2, 0.8], vec![0.8, 0.2]];
        let st = stationary_of_matrix(&p, 1e-15).unwrap();
        assert!(st.u.iter().all(|&x| (x - 0.5).abs() < 1e-12));
    }

    #[test]
    fn split_diagram_is_not_regular() {
        let a = parse_braid("s1", 2).unwrap();
        let d = a.juxtapose(&a);
        assert_eq!(persistence_exponent(&d), None);
        assert!(matches!(stationary(&d, &half(), 1e-12), Err(Error::NotRegular)));
        let rep = persistence_check(&d, &half(), 50).unwrap();
        assert!(!rep.all_persistent);
        for i in 0..2 {
            for j in 2..4 {
                assert_eq!(rep.partial_sums[i][j], 0.0);
                assert_eq!(rep.partial_sums[j][i], 0.0);
            }
        }
    }

    #[test]
    fn sigma1_persistence() {
        let d = parse_braid("s1", 2).unwrap();
        assert_eq!(persistence_exponent(&d), Some(2));
        let rep = persistence_check(&d, &half(), 100).unwrap();
        assert!(rep.all_persistent);
        assert!(rep.limit.iter().flatten().all(|&x| x >= 1.0 / 3.0 - 1e-9));
        let u = rep.stationary.unwrap();
        for row in &rep.slopes {
            for (s, uj) in row.iter().zip(&u) {
                assert!((s - uj).abs() < 1e-6);
            }
        }
    }
}
