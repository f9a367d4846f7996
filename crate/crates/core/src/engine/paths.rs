//! Truncated path sums: the power-series side of the engine.
//!
//! Every jump weight (`1 - t` or `1 - t^-1`) is divisible by `h = 1 - t`,
//! and every loop contains a jump, so walks with more than `K` jumps
//! contribute nothing modulo `h^(K+1)`. Bounding jumps makes the path set
//! finite and the truncated sum exact.

use crate::diagram::StringLinkDiagram;
use crate::matrix::SeriesMatrix;
use crate::ratfun::HSeries;

use super::{build_system, LinearSystem, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    Stay,
    Jump,
}

/// One walk from a source to a sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRecord {
    pub source: usize,
    pub sink: usize,
    pub jump_count: usize,
    /// Product of states, modulo `h^(K+1)`.
    pub weight: HSeries,
    /// Decision points visited, by variable index, with the choice made.
    pub trace: Vec<(usize, Choice)>,
}

struct StateWeights {
    stay: [HSeries; 2],
    jump: [HSeries; 2],
}

impl StateWeights {
    fn new(order: usize) -> Self {
        let one = HSeries::one(order);
        let t = HSeries::t(order);
        let tb = HSeries::t_inv(order);
        Self {
            jump: [&one - &t, &one - &tb],
            stay: [t, tb],
        }
    }

    fn idx(sys: &LinearSystem, v: usize) -> usize {
        usize::from(sys.variables()[v].sign.exponent() < 0)
    }
}

/// All walks from `source` with at most `max_jumps` jumps, weights modulo
/// `h^(max_jumps + 1)`.
pub fn enumerate_paths_mod_h(
    d: &StringLinkDiagram,
    source: usize,
    max_jumps: usize,
) -> Vec<PathRecord> {
    let sys = build_system(d);
    let order = max_jumps + 1;
    let w = StateWeights::new(order);
    let mut out = Vec::new();
    let mut trace = Vec::new();
    walk(
        &sys,
        &w,
        sys.entry(source),
        source,
        max_jumps,
        0,
        HSeries::one(order),
        &mut trace,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    sys: &LinearSystem,
    w: &StateWeights,
    at: Target,
    source: usize,
    budget: usize,
    jumps: usize,
    weight: HSeries,
    trace: &mut Vec<(usize, Choice)>,
    out: &mut Vec<PathRecord>,
) {
    match at {
        Target::Sink(j) => out.push(PathRecord {
            source,
            sink: j,
            jump_count: jumps,
            weight,
            trace: trace.clone(),
        }),
        Target::Var(v) => {
            let s = StateWeights::idx(sys, v);
            trace.push((v, Choice::Stay));
            walk(
                sys,
                w,
                sys.stay_successor(v),
                source,
                budget,
                jumps,
                &weight * &w.stay[s],
                trace,
                out,
            );
            trace.pop();
            if budget > 0 {
                trace.push((v, Choice::Jump));
                walk(
                    sys,
                    w,
                    sys.jump_successor(v),
                    source,
                    budget - 1,
                    jumps + 1,
                    &weight * &w.jump[s],
                    trace,
                    out,
                );
                trace.pop();
            }
        }
    }
}

/// Entry `(i, j)` is the sum of weights of all walks from source `i` to sink
/// `j` with at most `max_jumps` jumps, modulo `h^(max_jumps + 1)`.
///
/// Sums over the same walks as [`enumerate_paths_mod_h`], factored by the
/// last decision point and remaining jump budget so shared suffixes are
/// summed once.
pub fn series_burau(d: &StringLinkDiagram, max_jumps: usize) -> SeriesMatrix {
    let sys = build_system(d);
    let n = d.n();
    let order = max_jumps + 1;
    let w = StateWeights::new(order);
    let m = sys.variables().len();

    // value[b][v] = row vector of path sums from v with jump budget b.
    let mut value: Vec<Vec<Vec<HSeries>>> = Vec::with_capacity(order);
    let unit = |j: usize| {
        let mut r = vec![HSeries::zero(order); n];
        r[j] = HSeries::one(order);
        r
    };
    // Stay successors lie later on the same strand, so visiting each strand's
    // decision points back to front resolves them first.
    let mut by_strand_rev: Vec<usize> = (0..m).collect();
    by_strand_rev.sort_by_key(|&v| {
        let dp = sys.variables()[v];
        (dp.strand, std::cmp::Reverse(dp.ordinal))
    });
    for b in 0..order {
        let mut cur: Vec<Option<Vec<HSeries>>> = vec![None; m];
        for &v in &by_strand_rev {
            let s = StateWeights::idx(&sys, v);
            let stay_val = match sys.stay_successor(v) {
                Target::Sink(j) => unit(j),
                Target::Var(u) => cur[u].clone().expect("stay successor resolved"),
            };
            let mut row: Vec<HSeries> = stay_val.iter().map(|x| x * &w.stay[s]).collect();
            if b > 0 {
                let jump_val = match sys.jump_successor(v) {
                    Target::Sink(j) => unit(j),
                    Target::Var(u) => value[b - 1][u].clone(),
                };
                for (r, x) in row.iter_mut().zip(&jump_val) {
                    *r = &*r + &(x * &w.jump[s]);
                }
            }
            cur[v] = Some(row);
        }
        value.push(cur.into_iter().map(|r| r.expect("all resolved")).collect());
    }

    let rows = (0..n)
        .map(|i| match sys.entry(i) {
            Target::Sink(j) => unit(j),
            Target::Var(v) => value[max_jumps][v].clone(),
        })
        .collect();
    SeriesMatrix::from_rows(rows)
}
