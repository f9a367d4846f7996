//! Monte Carlo walks on a positive diagram.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{require_positive, require_t};
use crate::diagram::StringLinkDiagram;
use crate::engine::{build_system, LinearSystem, Target};
use crate::error::{Error, Result};

/// Trials per RNG stream. Fixed so results do not depend on thread count.
pub const CHUNK_TRIALS: u64 = 10_000;

const MAX_STEPS: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WalkEstimate {
    /// `counts[i][j]`: walks from source `i` that exited at sink `j`.
    pub counts: Vec<Vec<u64>>,
    pub trials: u64,
    pub seed: u64,
    pub t_value: String,
}

impl WalkEstimate {
    pub fn frequencies(&self) -> Vec<Vec<f64>> {
        self.counts
            .iter()
            .map(|r| r.iter().map(|&c| c as f64 / self.trials as f64).collect())
            .collect()
    }
}

fn one_walk(sys: &LinearSystem, source: usize, jump_p: f64, rng: &mut ChaCha8Rng) -> Result<usize> {
    let mut at = sys.entry(source);
    for _ in 0..MAX_STEPS {
        match at {
            Target::Sink(j) => return Ok(j),
            Target::Var(v) => {
                at = if rng.gen::<f64>() < jump_p {
                    sys.jump_successor(v)
                } else {
                    sys.stay_successor(v)
                };
            }
        }
    }
    Err(Error::Internal("walk did not exit".into()))
}

/// Runs `trials` walks from every source. Stream `(source << 32) | chunk` of a
/// ChaCha8 generator seeded with `seed` drives chunk `chunk` of source `source`.
pub fn simulate_walks(d: &StringLinkDiagram, t0: &BigRational, trials: u64, seed: u64) -> Result<WalkEstimate> {
    require_positive(d)?;
    require_t(t0, false)?;
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be positive".into()));
    }
    let sys = build_system(d);
    let n = d.n();
    let jump_p = 1.0 - t0.to_f64().unwrap_or(f64::NAN);
    let chunks = trials.div_ceil(CHUNK_TRIALS);
    let counts = (0..n)
        .map(|source| {
            let parts = (0..chunks)
                .into_par_iter()
                .map(|chunk| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(((source as u64) << 32) | chunk);
                    let todo = CHUNK_TRIALS.min(trials - chunk * CHUNK_TRIALS);
                    let mut row = vec![0u64; n];
                    for _ in 0..todo {
                        row[one_walk(&sys, source, jump_p, &mut rng)?] += 1;
                    }
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(parts.iter().fold(vec![0u64; n], |mut acc, r| {
                acc.iter_mut().zip(r).for_each(|(a, b)| *a += b);
                acc
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WalkEstimate {
        counts,
        trials,
        seed,
        t_value: t0.to_string(),
    })
}
