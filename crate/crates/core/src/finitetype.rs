//! Extension of the Burau matrix to singular string links by the skein
//! alternating sum, and the coefficients `b_k` of its `h`-expansion.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::diagram::{Crossing, Encounter, Sign, SingularStringLink, Strand, StringLinkDiagram};
use crate::engine::{burau_matrix, series_burau};
use crate::error::{Error, Result};
use crate::matrix::{BurauMatrix, SeriesMatrix};

/// How to evaluate each resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// Path sums with at most this many jumps, exact modulo `h^(max_jumps+1)`.
    Series { max_jumps: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VassilievMatrix {
    Exact(BurauMatrix),
    Series(SeriesMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VassilievValue {
    pub matrix: VassilievMatrix,
    pub double_point_count: usize,
}

/// `+` keeps the base crossing; `-` swaps over/under and flips the sign.
pub fn resolve(s: &SingularStringLink, choice: &BTreeMap<usize, Sign>) -> Result<StringLinkDiagram> {
    let dp = s.double_points();
    if let Some(extra) = choice.keys().find(|c| !dp.contains(c)) {
        return Err(Error::ResolutionChoice(format!(
            "crossing {} is not a double point",
            extra + 1
        )));
    }
    if let Some(missing) = dp.iter().find(|c| !choice.contains_key(c)) {
        return Err(Error::ResolutionChoice(format!(
            "no choice given for double point {}",
            missing + 1
        )));
    }
    let base = s.base();
    let switched = |c: usize| choice.get(&c) == Some(&Sign::Negative);
    let strands = base
        .strands()
        .iter()
        .map(|st| Strand {
            source: st.source,
            sink: st.sink,
            encounters: st
                .encounters
                .iter()
                .map(|e| Encounter {
                    crossing: e.crossing,
                    role: if switched(e.crossing) { e.role.swap() } else { e.role },
                })
                .collect(),
        })
        .collect();
    let crossings = base
        .crossings()
        .iter()
        .enumerate()
        .map(|(i, c)| Crossing {
            sign: if switched(i) { c.sign.flip() } else { c.sign },
        })
        .collect();
    StringLinkDiagram::new(base.n(), strands, crossings)
}

/// All `2^|D|` resolutions with the sign `(-1)^(number of - choices)`.
pub fn resolutions(s: &SingularStringLink) -> Vec<(bool, StringLinkDiagram)> {
    let dp: Vec<usize> = s.double_points().iter().copied().collect();
    (0..1usize << dp.len())
        .map(|mask| {
            let choice: BTreeMap<usize, Sign> = dp
                .iter()
                .enumerate()
                .map(|(bit, &c)| {
                    let sign = if mask >> bit & 1 == 1 { Sign::Negative } else { Sign::Positive };
                    (c, sign)
                })
                .collect();
            let negative = mask.count_ones() % 2 == 1;
            (negative, resolve(s, &choice).expect("choice covers every double point"))
        })
        .collect()
}

pub fn vassiliev_value(s: &SingularStringLink, mode: Mode) -> Result<VassilievValue> {
    let res = resolutions(s);
    let n = s.base().n();
    let matrix = match mode {
        Mode::Exact => {
            let terms = res
                .par_iter()
                .map(|(neg, d)| Ok((*neg, burau_matrix(d)?)))
                .collect::<Result<Vec<_>>>()?;
            VassilievMatrix::Exact(terms.iter().fold(BurauMatrix::zero(n), |acc, (neg, m)| {
                if *neg {
                    &acc - m
                } else {
                    &acc + m
                }
            }))
        }
        Mode::Series { max_jumps } => {
            let terms: Vec<_> = res
                .par_iter()
                .map(|(neg, d)| (*neg, series_burau(d, max_jumps)))
                .collect();
            VassilievMatrix::Series(terms.iter().fold(
                SeriesMatrix::zero(n, max_jumps + 1),
                |acc, (neg, m)| if *neg { &acc - m } else { &acc + m },
            ))
        }
    };
    Ok(VassilievValue {
        matrix,
        double_point_count: s.double_points().len(),
    })
}

/// The matrix multiplying `h^k` in the expansion of the (singular-extended)
/// Burau matrix.
pub fn bk_coefficient(s: &SingularStringLink, k: usize) -> Vec<Vec<BigRational>> {
    match vassiliev_value(s, Mode::Series { max_jumps: k })
        .expect("series mode cannot fail")
        .matrix
    {
        VassilievMatrix::Series(m) => m.coefficient(k),
        VassilievMatrix::Exact(_) => unreachable!(),
    }
}

/// `b_k` of a nonsingular diagram.
pub fn bk_coefficient_of(d: &StringLinkDiagram, k: usize) -> Vec<Vec<BigRational>> {
    let s = SingularStringLink::new(d.clone(), Default::default()).expect("no double points");
    bk_coefficient(&s, k)
}

pub fn is_zero_matrix(m: &[Vec<BigRational>]) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}

pub fn is_permutation_matrix(m: &[Vec<BigRational>], perm: &[usize]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| {
            if perm[i] == j {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    })
}
