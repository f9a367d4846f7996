use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Truncated power series in `h = 1 - t` with exact rational coefficients.
///
/// Index `k` holds the coefficient of `h^k`; arithmetic is modulo `h^len`.
/// Binary operations require equal truncation orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HSeries {
    coeffs: Vec<BigRational>,
}

impl HSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        Self {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series of `h` itself.
    pub fn h(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// `t = 1 - h`.
    pub fn t(order: usize) -> Self {
        &Self::one(order) - &Self::h(order)
    }

    /// `t^-1 = 1 + h + h^2 + ...`.
    pub fn t_inv(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::one(); order],
        }
    }

    /// Pads or truncates to `order` terms.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        coeffs.resize(order, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the lowest nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let n = self.order();
        let mut inv = vec![BigRational::zero(); n];
        inv[0] = c0.recip();
        for k in 1..n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -(acc / c0);
        }
        Some(Self { coeffs: inv })
    }

    /// Evaluates the truncated polynomial at a numeric `h`.
    pub fn eval_f64(&self, h: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * h + c.to_f64().unwrap_or(f64::NAN))
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation orders differ"
        );
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h^{k}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(h^{})", self.order())
    }
}

impl<'a> Add<&'a HSeries> for &'a HSeries {
    type Output = HSeries;
    fn add(self, rhs: &HSeries) -> HSeries {
        self.check_order(rhs);
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a HSeries> for &'a HSeries {
    type Output = HSeries;
    fn sub(self, rhs: &HSeries) -> HSeries {
        self.check_order(rhs);
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a HSeries> for &'a HSeries {
    type Output = HSeries;
    fn mul(self, rhs: &HSeries) -> HSeries {
        self.check_order(rhs);
        let n = self.order();
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HSeries { coeffs: out }
    }
}

impl Neg for &HSeries {
    type Output = HSeries;
    fn neg(self) -> HSeries {
        HSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
