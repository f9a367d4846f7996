//! The walk linear system and its solution.
//!
//! Every over-encounter is a decision point. A walker arriving there either
//! stays on its strand (weight `t^ε`) or drops to the under strand of the
//! same crossing and continues past the under-encounter (weight `1 - t^ε`).
//! Writing `A_v` for the row vector of total weights from decision point `v`
//! to each sink gives one relation per decision point:
//!
//! ```text
//! A_v = t^ε A_stay(v) + (1 - t^ε) A_jump(v)
//! ```
//!
//! where a successor that is a sink contributes the corresponding unit vector.

mod classical;
mod paths;
mod reach;
mod solve;

use crate::diagram::{Role, Sign, StringLinkDiagram};
use crate::error::Result;
use crate::matrix::BurauMatrix;
use crate::ratfun::RatFun;

pub use classical::{classical_burau, generator_matrix};
pub use paths::{enumerate_paths_mod_h, series_burau, Choice, PathRecord};
pub use reach::{boolean_power, primitivity_index, reachability, BoolMatrix};
pub use solve::solve_exact;

/// An over-encounter: the `ordinal`-th over-encounter on `strand`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DecisionPoint {
    pub strand: usize,
    pub ordinal: usize,
    pub crossing: usize,
    pub sign: Sign,
}

/// Where a walker goes next: another decision point or a sink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Var(usize),
    Sink(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    n: usize,
    variables: Vec<DecisionPoint>,
    stay: Vec<Target>,
    jump: Vec<Target>,
    entry: Vec<Target>,
}

impl LinearSystem {
    /// Number of sinks, i.e. the length of each solution vector.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variables(&self) -> &[DecisionPoint] {
        &self.variables
    }

    pub fn stay_successor(&self, v: usize) -> Target {
        self.stay[v]
    }

    pub fn jump_successor(&self, v: usize) -> Target {
        self.jump[v]
    }

    /// Where a walker starting at `source` first arrives.
    pub fn entry(&self, source: usize) -> Target {
        self.entry[source]
    }

    /// `(stay, jump)` coefficients of variable `v`: `t^ε` and `1 - t^ε`.
    pub fn coefficients(&self, v: usize) -> (RatFun, RatFun) {
        let stay = RatFun::t_pow(self.variables[v].sign.exponent());
        let jump = &RatFun::one() - &stay;
        (stay, jump)
    }
}

pub fn build_system(d: &StringLinkDiagram) -> LinearSystem {
    let strands = d.strands();
    let mut variables = Vec::new();
    // var_at[s][k] = variable index of encounter k on strand s, if Over
    let mut var_at: Vec<Vec<Option<usize>>> = Vec::with_capacity(strands.len());
    for (s, strand) in strands.iter().enumerate() {
        let mut row = Vec::with_capacity(strand.encounters.len());
        let mut ordinal = 0;
        for e in &strand.encounters {
            if e.role == Role::Over {
                row.push(Some(variables.len()));
                variables.push(DecisionPoint {
                    strand: s,
                    ordinal,
                    crossing: e.crossing,
                    sign: d.crossings()[e.crossing].sign,
                });
                ordinal += 1;
            } else {
                row.push(None);
            }
        }
        var_at.push(row);
    }
    let next_from = |s: usize, from: usize| -> Target {
        var_at[s][from..]
            .iter()
            .find_map(|v| v.map(Target::Var))
            .unwrap_or(Target::Sink(strands[s].sink))
    };
    let sites = d.sites();
    let mut stay = Vec::with_capacity(variables.len());
    let mut jump = Vec::with_capacity(variables.len());
    for dp in &variables {
        let site = sites[dp.crossing];
        stay.push(next_from(site.over.0, site.over.1 + 1));
        jump.push(next_from(site.under.0, site.under.1 + 1));
    }
    let entry = (0..d.n()).map(|s| next_from(s, 0)).collect();
    LinearSystem {
        n: d.n(),
        variables,
        stay,
        jump,
        entry,
    }
}

/// Rows are the solved vectors at each source's first decision point; a
/// source with no decision point contributes the unit vector at its sink.
pub fn burau_matrix(d: &StringLinkDiagram) -> Result<BurauMatrix> {
    let sys = build_system(d);
    let solution = solve_exact(&sys)?;
    let n = d.n();
    let rows = (0..n)
        .map(|i| match sys.entry(i) {
            Target::Var(v) => solution[v].clone(),
            Target::Sink(j) => unit(n, j),
        })
        .collect();
    Ok(BurauMatrix::from_rows(rows))
}

fn unit(n: usize, j: usize) -> Vec<RatFun> {
    let mut v = vec![RatFun::zero(); n];
    v[j] = RatFun::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_tangle};

    #[test]
    fn sigma1_system() {
        let sys = build_system(&parse_braid("s1", 2).unwrap());
        assert_eq!(sys.variables().len(), 1);
        assert_eq!(sys.stay_successor(0), Target::Sink(1));
        assert_eq!(sys.jump_successor(0), Target::Sink(0));
        let (s, j) = sys.coefficients(0);
        assert_eq!(s, RatFun::t());
        assert_eq!(j, &RatFun::one() - &RatFun::t());
    }

    #[test]
    fn trivial_system_is_empty() {
        let sys = build_system(&StringLinkDiagram::identity(3));
        assert!(sys.variables().is_empty());
        assert_eq!(sys.entry(2), Target::Sink(2));
    }

    #[test]
    fn negative_kink_loops_back() {
        let d = parse_tangle("strands 1\ncrossing 1 -\nstrand 1 from 1 to 1: U1 O1\n").unwrap();
        let sys = build_system(&d);
        assert_eq!(sys.stay_successor(0), Target::Sink(0));
        assert_eq!(sys.jump_successor(0), Target::Var(0));
        assert_eq!(sys.coefficients(0).0, RatFun::t_inv());
        assert_eq!(burau_matrix(&d).unwrap(), BurauMatrix::identity(1));
    }
}
