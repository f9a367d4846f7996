//! Square matrices over `RatFun` and over truncated `h`-series.
//!
//! Rows are sources and columns are sinks, so composition of string links
//! corresponds to the ordinary product `B(a·b) = B(a) B(b)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfun::{HSeries, LaurentPoly, RatFun};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    n: usize,
    entries: Vec<RatFun>,
}

impl BurauMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![RatFun::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = RatFun::one();
        }
        m
    }

    /// `P[i][perm[i]] = 1`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zero(n);
        for (i, &j) in perm.iter().enumerate() {
            m.entries[i * n + j] = RatFun::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFun) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFun] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RatFun]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn row_sums(&self) -> Vec<RatFun> {
        self.rows()
            .map(|r| r.iter().fold(RatFun::zero(), |acc, x| &acc + x))
            .collect()
    }

    pub fn scale(&self, k: &RatFun) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// Entrywise `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(RatFun::invert_variable).collect(),
        }
    }

    /// `J M J` with `J` the index-reversal permutation.
    pub fn reverse_indices(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(n - 1 - i, n - 1 - j).clone());
            }
        }
        m
    }

    pub fn eval_exact(&self, t0: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        self.rows()
            .map(|r| r.iter().map(|e| e.eval_exact(t0)).collect())
            .collect()
    }

    pub fn eval_f64(&self, t0: f64) -> Result<Vec<Vec<f64>>> {
        self.rows()
            .map(|r| r.iter().map(|e| e.eval_f64(t0)).collect())
            .collect()
    }

    /// Entrywise expansion in `h = 1 - t` to `order` terms.
    pub fn expand_h(&self, order: usize) -> Result<SeriesMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.expand_h(order))
            .collect::<Result<_>>()?;
        Ok(SeriesMatrix {
            n: self.n,
            order,
            entries,
        })
    }

    /// One row per line: `[a, b, ...]`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in self.rows() {
            s.push('[');
            for (j, e) in r.iter().enumerate() {
                if j > 0 {
                    s.push_str(", ");
                }
                s.push_str(&e.to_string());
            }
            s.push_str("]\n");
        }
        s
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            n: self.n,
            entries: self
                .rows()
                .map(|r| r.iter().map(EntryJson::from_ratfun).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        if j.entries.len() != j.n || j.entries.iter().any(|r| r.len() != j.n) {
            return Err(Error::InvalidArgument("matrix JSON is not n x n".into()));
        }
        let rows = j
            .entries
            .iter()
            .map(|r| r.iter().map(EntryJson::to_ratfun).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows(rows))
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Mul<&'a BurauMatrix> for &'a BurauMatrix {
    type Output = BurauMatrix;
    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = BurauMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a BurauMatrix> for &'a BurauMatrix {
    type Output = BurauMatrix;
    fn add(self, rhs: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        BurauMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a BurauMatrix> for &'a BurauMatrix {
    type Output = BurauMatrix;
    fn sub(self, rhs: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        BurauMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

/// JSON form of a matrix: each entry is a numerator and denominator given as
/// sparse `[exponent, "coefficient"]` lists in ascending exponent order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<EntryJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub num: Vec<(i64, String)>,
    pub den: Vec<(i64, String)>,
}

impl EntryJson {
    fn from_ratfun(r: &RatFun) -> Self {
        let terms = |p: &LaurentPoly| p.terms().map(|(e, c)| (e, c.to_string())).collect();
        Self {
            num: terms(r.num()),
            den: terms(r.den()),
        }
    }

    fn to_ratfun(&self) -> Result<RatFun> {
        let poly = |ts: &[(i64, String)]| -> Result<LaurentPoly> {
            let mut terms = Vec::with_capacity(ts.len());
            for (e, c) in ts {
                let c: BigInt = c
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad coefficient `{c}`")))?;
                terms.push((*e, c));
            }
            Ok(LaurentPoly::from_terms(terms))
        };
        RatFun::new(poly(&self.num)?, poly(&self.den)?)
    }
}

/// Square matrix of truncated `h`-series, all of the same order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesMatrix {
    n: usize,
    order: usize,
    entries: Vec<HSeries>,
}

impl SeriesMatrix {
    pub fn zero(n: usize, order: usize) -> Self {
        Self {
            n,
            order,
            entries: vec![HSeries::zero(order); n * n],
        }
    }

    pub fn identity(n: usize, order: usize) -> Self {
        let mut m = Self::zero(n, order);
        for i in 0..n {
            m.entries[i * n + i] = HSeries::one(order);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<HSeries>>) -> Self {
        let n = rows.len();
        let order = rows.first().and_then(|r| r.first()).map_or(1, HSeries::order);
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of retained terms; entries are exact modulo `h^order`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &HSeries {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: HSeries) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[HSeries]> {
        self.entries.chunks(self.n.max(1))
    }

    /// The rational matrix multiplying `h^k`.
    pub fn coefficient(&self, k: usize) -> Vec<Vec<BigRational>> {
        self.rows()
            .map(|r| r.iter().map(|e| e.coeff(k).clone()).collect())
            .collect()
    }

    /// Lowest `k` whose coefficient matrix is nonzero.
    pub fn valuation(&self) -> Option<usize> {
        self.entries.iter().filter_map(HSeries::valuation).min()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HSeries::is_zero)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            n: self.n,
            order: self.order,
            entries: self.entries.iter().map(|e| e.scale(k)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in self.rows() {
            s.push('[');
            for (j, e) in r.iter().enumerate() {
                if j > 0 {
                    s.push_str(", ");
                }
                s.push_str(&e.to_string());
            }
            s.push_str("]\n");
        }
        s
    }
}

impl<'a> Add<&'a SeriesMatrix> for &'a SeriesMatrix {
    type Output = SeriesMatrix;
    fn add(self, rhs: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!((self.n, self.order), (rhs.n, rhs.order), "shape mismatch");
        SeriesMatrix {
            n: self.n,
            order: self.order,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a SeriesMatrix> for &'a SeriesMatrix {
    type Output = SeriesMatrix;
    fn sub(self, rhs: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!((self.n, self.order), (rhs.n, rhs.order), "shape mismatch");
        SeriesMatrix {
            n: self.n,
            order: self.order,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a SeriesMatrix> for &'a SeriesMatrix {
    type Output = SeriesMatrix;
    fn mul(self, rhs: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!((self.n, self.order), (rhs.n, rhs.order), "shape mismatch");
        let n = self.n;
        let mut out = SeriesMatrix::zero(n, self.order);
        for i in 0..n {
            for j in 0..n {
                let mut acc = HSeries::zero(self.order);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

/// Integer permutation matrix as rationals, for comparisons with `b_0`.
pub fn permutation_rational(perm: &[usize]) -> Vec<Vec<BigRational>> {
    let n = perm.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if perm[i] == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}
