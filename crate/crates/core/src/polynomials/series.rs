use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::BiPoly;
use crate::error::{Error, Result};

/// A power series in `z` with coefficients in `Z[q, t]`, kept modulo
/// `z^(cap + 1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BiPoly>,
}

impl TruncatedSeries {
    pub fn zero(cap: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BiPoly::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = TruncatedSeries::zero(cap);
        s.coeffs[0] = BiPoly::one();
        s
    }

    /// Series from its leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs(cap: usize, coeffs: impl IntoIterator<Item = BiPoly>) -> Self {
        let mut s = TruncatedSeries::zero(cap);
        for (k, c) in coeffs.into_iter().take(cap + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// `c z^k`, or zero when `k` exceeds the cap.
    pub fn monomial(cap: usize, c: BiPoly, k: usize) -> Self {
        let mut s = TruncatedSeries::zero(cap);
        if k <= cap {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    fn check_caps(&self, other: &TruncatedSeries) -> Result<()> {
        if self.cap() != other.cap() {
            return Err(Error::invalid(format!(
                "series caps differ: {} and {}",
                self.cap(),
                other.cap()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_caps(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_caps(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_caps(other)?;
        let cap = self.cap();
        let mut out = TruncatedSeries::zero(cap);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=cap - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a polynomial in `q`, `t`.
    pub fn scale(&self, c: &BiPoly) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z^k`, dropping what falls beyond the cap.
    pub fn shift_z(&self, k: usize) -> TruncatedSeries {
        let cap = self.cap();
        let mut out = TruncatedSeries::zero(cap);
        for i in 0..=cap.saturating_sub(k) {
            if i + k <= cap {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let a0 = &self.coeffs[0];
        let unit = a0.coeff(0, 0);
        if a0.len() != 1 || !unit.abs().is_one() {
            return Err(Error::invalid(format!("constant term {a0} is not a unit")));
        }
        let cap = self.cap();
        let mut b = vec![BiPoly::zero(); cap + 1];
        b[0] = BiPoly::monomial(unit.clone(), 0, 0);
        let neg_inv: BigInt = -unit;
        for n in 1..=cap {
            let mut acc = BiPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !b[n - k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &b[n - k]);
                }
            }
            b[n] = acc.scale(&neg_inv);
        }
        Ok(TruncatedSeries { coeffs: b })
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
