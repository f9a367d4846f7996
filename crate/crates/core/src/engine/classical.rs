//! The classical (non-reduced) Burau matrices, multiplied out directly.

use crate::diagram::parse_braid_tokens;
use crate::error::Result;
use crate::matrix::BurauMatrix;
use crate::ratfun::RatFun;

/// `β_i` (or its inverse) on `n` strands, `i` 1-based: identity except for the
/// 2x2 block `[[1-t, t], [1, 0]]` (inverse `[[0, 1], [t^-1, 1-t^-1]]`) at
/// rows/columns `i, i+1`.
pub fn generator_matrix(i: usize, inverse: bool, n: usize) -> BurauMatrix {
    assert!(i >= 1 && i < n, "generator index out of range");
    let mut m = BurauMatrix::identity(n);
    let (a, b) = (i - 1, i);
    let one = RatFun::one();
    let block = if inverse {
        let tb = RatFun::t_inv();
        [RatFun::zero(), one.clone(), tb.clone(), &one - &tb]
    } else {
        let t = RatFun::t();
        [&one - &t, t, one.clone(), RatFun::zero()]
    };
    let [x00, x01, x10, x11] = block;
    m.set(a, a, x00);
    m.set(a, b, x01);
    m.set(b, a, x10);
    m.set(b, b, x11);
    m
}

pub fn classical_burau(word: &str, n: usize) -> Result<BurauMatrix> {
    let letters = parse_braid_tokens(word, n)?;
    Ok(letters.iter().fold(BurauMatrix::identity(n), |acc, l| {
        &acc * &generator_matrix(l.generator, l.inverse, n)
    }))
}
