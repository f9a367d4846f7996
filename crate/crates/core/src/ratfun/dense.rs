//! Dense univariate polynomials over `BigInt`, stored with ascending
//! coefficients and no trailing zeros. The zero polynomial is the empty vec.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigInt>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], k: &BigInt) -> Dense {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Dense {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let db = degree(b).expect("pseudo_rem by zero polynomial");
    let mut r: Dense = a.to_vec();
    let lb = &b[db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd in Z[t]; positive leading coefficient, empty only if both inputs are zero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x
}

/// Exact division over Z. Returns `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Dense> {
    let db = degree(b).expect("division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    let da = degree(a).unwrap();
    if da < db {
        return None;
    }
    let mut r: Dense = a.to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    let lb = &b[db];
    for k in (0..=da - db).rev() {
        let (qk, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if qk.is_zero() {
            continue;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + k] -= &qk * c;
        }
        q[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Dense {
        let mut v: Dense = c.iter().map(|&x| BigInt::from(x)).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1 + t)(2 - t) and (1 + t)(3 + t^2)
        let a = mul(&p(&[1, 1]), &p(&[2, -1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 0, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&p(&[2, -1]), &p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&p(&[1, -2, 1]), &p(&[3, 4]));
        assert_eq!(div_exact(&a, &p(&[3, 4])), Some(p(&[1, -2, 1])));
        assert_eq!(div_exact(&p(&[1, 1]), &p(&[2, 1])), None);
    }
}
