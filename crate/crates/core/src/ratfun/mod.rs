//! Exact rational functions of one variable `t` over the integers, and their
//! expansions around `t = 1` in powers of `h = 1 - t`.

pub(crate) mod dense;
mod poly;
mod series;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use poly::LaurentPoly;
pub use series::HSeries;

/// Element of `Q(t)` in canonical form.
///
/// Canonical form: `den` is an ordinary polynomial with nonzero, positive
/// constant term; all powers of `t` (including negative ones) live in `num`;
/// `num` and `den` are coprime and their joint integer content is 1. Zero is
/// `0 / 1`. Structural equality is therefore mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (sn, p) = num.to_dense();
        let (sd, d) = den.to_dense();
        let g = dense::gcd(&p, &d);
        let (mut p, mut d) = if dense::is_one(&g) {
            (p, d)
        } else {
            (
                dense::div_exact(&p, &g).expect("gcd divides numerator"),
                dense::div_exact(&d, &g).expect("gcd divides denominator"),
            )
        };
        let c = num_integer::Integer::gcd(&dense::content(&p), &dense::content(&d));
        let c = if d[0].is_negative() { -c } else { c };
        if !c.is_one() {
            p = p.iter().map(|x| x / &c).collect();
            d = d.iter().map(|x| x / &c).collect();
        }
        Ok(Self {
            num: LaurentPoly::from_dense(sn - sd, &p),
            den: LaurentPoly::from_dense(0, &d),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `t`.
    pub fn t() -> Self {
        Self::from_poly(LaurentPoly::t())
    }

    /// `t^-1`.
    pub fn t_inv() -> Self {
        Self::from_poly(LaurentPoly::t_inv())
    }

    /// `t^e` for `e = ±1`, the stay weight at a crossing of that sign.
    pub fn t_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(1, e))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn arith(a: &Self, b: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => Ok(a + b),
            ArithOp::Sub => Ok(a - b),
            ArithOp::Mul => Ok(a * b),
            ArithOp::Div => a.checked_div(b),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        Self::new(self.num.invert_variable(), self.den.invert_variable())
            .expect("nonzero denominator stays nonzero")
    }

    /// Whether the denominator is nonzero at `t = 1`.
    pub fn is_regular_at_one(&self) -> bool {
        self.den.eval_exact(&BigRational::one()).is_some_and(|v| !v.is_zero())
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, t0: &BigRational) -> Result<BigRational> {
        let pole = || Error::Pole(t0.to_string());
        let n = self.num.eval_exact(t0).ok_or_else(pole)?;
        let d = self.den.eval_exact(t0).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        Ok(n / d)
    }

    pub fn eval_f64(&self, t0: f64) -> Result<f64> {
        let d = self.den.eval_f64(t0);
        let negative_power_at_zero = t0 == 0.0 && self.num.min_exp().is_some_and(|e| e < 0);
        if d == 0.0 || negative_power_at_zero {
            return Err(Error::Pole(t0.to_string()));
        }
        Ok(self.num.eval_f64(t0) / d)
    }

    /// Limit as `t -> 0+`, if finite.
    pub fn limit_at_zero(&self) -> Option<BigRational> {
        let lo = match self.num.min_exp() {
            None => return Some(BigRational::zero()),
            Some(lo) => lo,
        };
        let d0 = BigRational::from_integer(self.den.coeff(0));
        match lo.cmp(&0) {
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Greater => Some(BigRational::zero()),
            std::cmp::Ordering::Equal => Some(BigRational::from_integer(self.num.coeff(0)) / d0),
        }
    }

    /// Closed form `1 / (1 - r)` of the geometric sum `sum_k r^k`.
    ///
    /// The sum converges near `t = 1` only when `r` vanishes there.
    pub fn kleene_star(&self) -> Result<Self> {
        if !self.is_regular_at_one() {
            return Err(Error::Pole("1".into()));
        }
        let at_one = self.eval_exact(&BigRational::one())?;
        if !at_one.is_zero() {
            return Err(Error::NotVanishingAtOne(at_one.to_string()));
        }
        (&Self::one() - self).recip()
    }

    /// Taylor expansion in `h = 1 - t`, truncated to `order` terms.
    pub fn expand_h(&self, order: usize) -> Result<HSeries> {
        if order == 0 {
            return Err(Error::InvalidArgument("truncation order must be positive".into()));
        }
        let (shift, p) = self.num.to_dense();
        let (_, d) = self.den.to_dense();
        let t = HSeries::t(order);
        let horner = |coeffs: &[BigInt]| {
            coeffs.iter().rev().fold(HSeries::zero(order), |acc, c| {
                &(&acc * &t) + &HSeries::constant(BigRational::from_integer(c.clone()), order)
            })
        };
        let pn = horner(&p);
        let dn = horner(&d);
        let dinv = dn.inverse().ok_or_else(|| Error::Pole("1".into()))?;
        let monomial = if shift >= 0 {
            t.pow(shift as u32)
        } else {
            HSeries::t_inv(order).pow(shift.unsigned_abs() as u32)
        };
        Ok(&(&monomial * &pn) * &dinv)
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero den")
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

/// Panics on division by zero; use [`RatFun::checked_div`] for a `Result`.
impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self.checked_div(rhs).expect("division by zero RatFun")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}
