use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UniPoly;
use crate::error::{Error, Result};

/// A polynomial in `q` and `t` with integer coefficients, keyed by
/// `(q exponent, t exponent)`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(1, 0, 0)
    }

    /// `c * q^a * t^r`.
    pub fn monomial(c: impl Into<BigInt>, a: u32, r: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(a, r, c.into());
        p
    }

    /// `1 + q t`.
    pub fn one_plus_qt() -> Self {
        BiPoly::monomial(1, 0, 0) + BiPoly::monomial(1, 1, 1)
    }

    /// Builds a polynomial from `(q exponent, t exponent, coefficient)` triples,
    /// summing repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut p = BiPoly::zero();
        for (a, r, c) in terms {
            p.add_term(a, r, c.into());
        }
        p
    }

    /// Counts each `(q exponent, t exponent)` pair once.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for (a, r) in pairs {
            *counts.entry((a as u32, r as u32)).or_default() += 1;
        }
        BiPoly {
            terms: counts
                .into_iter()
                .map(|(k, c)| (k, BigInt::from(c)))
                .collect(),
        }
    }

    pub fn add_term(&mut self, a: u32, r: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, r)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, r));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, r: u32) -> BigInt {
        self.terms.get(&(a, r)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `((q exponent, t exponent), coefficient)`, ordered by
    /// q exponent then t exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Multiplies by `q^a t^r`.
    pub fn shift(&self, a: u32, r: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + r), c.clone()))
                .collect(),
        }
    }

    /// `t^k P(q, 1/t)`; fails if the t-degree exceeds `k`.
    pub fn reflect_t(&self, k: u32) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (&(a, r), c) in &self.terms {
            if r > k {
                return Err(Error::invalid(format!(
                    "t-degree {r} exceeds reflection bound {k}"
                )));
            }
            out.add_term(a, k - r, c.clone());
        }
        Ok(out)
    }

    /// `P(q, t/q)`; fails unless every term has q-exponent at least its
    /// t-exponent.
    pub fn substitute_t_over_q(&self) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (&(a, r), c) in &self.terms {
            if a < r {
                return Err(Error::invalid(format!(
                    "term q^{a} t^{r} has q-exponent below t-exponent"
                )));
            }
            out.add_term(a - r, r, c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`BiPoly::substitute_t_over_q`]: `P(q, q t)`.
    pub fn substitute_t_times_q(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, r), c)| ((a + r, r), c.clone()))
                .collect(),
        }
    }

    /// `P(1, t)` as a polynomial in `t`.
    pub fn at_q_one(&self) -> UniPoly {
        UniPoly::from_pairs(
            self.terms
                .iter()
                .map(|(&(_, r), c)| (r as usize, c.clone())),
        )
    }

    /// `P(q, 1)` as a polynomial in `q`.
    pub fn at_t_one(&self) -> UniPoly {
        UniPoly::from_pairs(
            self.terms
                .iter()
                .map(|(&(a, _), c)| (a as usize, c.clone())),
        )
    }

    /// Coefficient of `t^r`, a polynomial in `q`.
    pub fn t_coefficient(&self, r: u32) -> UniPoly {
        UniPoly::from_pairs(
            self.terms
                .iter()
                .filter(|(k, _)| k.1 == r)
                .map(|(&(a, _), c)| (a as usize, c.clone())),
        )
    }

    /// Embeds a polynomial in `q` times `t^r`.
    pub fn from_q_poly(p: &UniPoly, r: u32) -> BiPoly {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(a, c)| (a as u32, r, c.clone())),
        )
    }

    /// Embeds a polynomial in `t`.
    pub fn from_t_poly(p: &UniPoly) -> BiPoly {
        BiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(r, c)| (0, r as u32, c.clone())),
        )
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, r), c)| {
                c * num_traits::pow(q.clone(), a as usize) * num_traits::pow(t.clone(), r as usize)
            })
            .sum()
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut out = BiPoly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Coefficient matrix with rows indexed by t-degree and columns by
    /// q-degree.
    pub fn to_matrix(&self) -> Vec<Vec<BigInt>> {
        let (Some(qd), Some(td)) = (self.q_degree(), self.t_degree()) else {
            return vec![vec![BigInt::zero()]];
        };
        let mut m = vec![vec![BigInt::zero(); qd as usize + 1]; td as usize + 1];
        for (&(a, r), c) in &self.terms {
            m[r as usize][a as usize] = c.clone();
        }
        m
    }

    pub fn from_matrix(m: &[Vec<BigInt>]) -> BiPoly {
        let mut p = BiPoly::zero();
        for (r, row) in m.iter().enumerate() {
            for (a, c) in row.iter().enumerate() {
                p.add_term(a as u32, r as u32, c.clone());
            }
        }
        p
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, r), c) in &rhs.terms {
            out.add_term(a, r, c.clone());
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, r1), c1) in &self.terms {
            for (&(a2, r2), c2) in &rhs.terms {
                out.add_term(a1 + a2, r1 + r2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Terms ordered by t-degree, then q-degree, e.g. `1 + 3qt + 2q^3t`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, r)| (r, a));
        for (k, (a, r)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(a, r)];
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() || (a == 0 && r == 0) {
                write!(f, "{mag}")?;
            }
            write_power(f, 'q', a)?;
            write_power(f, 't', r)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
