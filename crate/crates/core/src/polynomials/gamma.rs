//! Expansions in the bases `t^j (1 + t)^(d - 2j)` and `t^j (1 + q t)^(d - 2j)`.

use num_bigint::BigInt;

use super::{BiPoly, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaBasis {
    /// `t^j (1 + t)^(d - 2j)` with integer coefficients.
    Plain,
    /// `t^j (1 + q t)^(d - 2j)` with coefficients in `Z[q]`.
    QShifted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpansion {
    degree: usize,
    basis: GammaBasis,
    gammas: Vec<UniPoly>,
}

impl GammaExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> GammaBasis {
        self.basis
    }

    /// Coefficients for `j = 0..=d/2`; constants in the plain basis.
    pub fn gammas(&self) -> &[UniPoly] {
        &self.gammas
    }

    pub fn gamma(&self, j: usize) -> UniPoly {
        self.gammas.get(j).cloned().unwrap_or_default()
    }

    /// `(j, q exponent)` of every negative coefficient.
    pub fn negative_coefficients(&self) -> Vec<(usize, usize)> {
        self.gammas
            .iter()
            .enumerate()
            .flat_map(|(j, g)| g.negative_exponents().into_iter().map(move |e| (j, e)))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.has_negative_coefficient())
    }

    /// Sums the basis elements back up.
    pub fn reconstruct(&self) -> BiPoly {
        let one_plus = match self.basis {
            GammaBasis::Plain => BiPoly::from_terms([(0, 0, 1), (0, 1, 1)]),
            GammaBasis::QShifted => BiPoly::one_plus_qt(),
        };
        let mut out = BiPoly::zero();
        for (j, g) in self.gammas.iter().enumerate() {
            let term =
                &BiPoly::from_q_poly(g, j as u32) * &one_plus.pow((self.degree - 2 * j) as u32);
            out = &out + &term;
        }
        out
    }
}

fn binomial_row(d: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 1..=d {
        let next = &row[k - 1] * BigInt::from(d - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

/// Peels `coeffs` (indexed by t-degree, entries in `Z[q]`) against
/// `t^j (1 + t)^(d - 2j)` in ascending `j`.
fn peel(coeffs: &[UniPoly], d: usize) -> Option<Vec<UniPoly>> {
    if coeffs.len() > d + 1 {
        return None;
    }
    let mut residual: Vec<UniPoly> = coeffs.to_vec();
    residual.resize(d + 1, UniPoly::zero());
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for j in 0..=d / 2 {
        let g = residual[j].clone();
        for (k, b) in binomial_row(d - 2 * j).iter().enumerate() {
            residual[j + k] = &residual[j + k] - &g.scale(b);
        }
        gammas.push(g);
    }
    residual.iter().all(UniPoly::is_zero).then_some(gammas)
}

/// Expands a polynomial symmetric about `d / 2` in the plain basis.
pub fn gamma_expand_plain(p: &UniPoly, d: usize) -> Result<GammaExpansion> {
    if !p.is_symmetric(d) {
        return Err(Error::invalid(format!(
            "{} is not symmetric of degree {d}",
            p.format_in("t")
        )));
    }
    let coeffs: Vec<UniPoly> = p
        .coeffs()
        .iter()
        .map(|c| UniPoly::new(vec![c.clone()]))
        .collect();
    let gammas = peel(&coeffs, d)
        .ok_or_else(|| Error::Consistency("symmetric polynomial failed to peel".into()))?;
    Ok(GammaExpansion {
        degree: d,
        basis: GammaBasis::Plain,
        gammas,
    })
}

/// Expands a polynomial in `q`, `t` in the basis `t^j (1 + q t)^(d - 2j)`.
///
/// After `t -> t/q` the input must be symmetric in `t` of degree `d` for
/// every power of `q`; coefficient `j` is then `q^j` times the plain
/// coefficient of the substituted polynomial. Negative coefficients are
/// reported, not rejected.
pub fn gamma_expand_q_shifted(p: &BiPoly, d: usize) -> Result<GammaExpansion> {
    let sub = p.substitute_t_over_q()?;
    let coeffs: Vec<UniPoly> = (0..=sub.t_degree().unwrap_or(0))
        .map(|r| sub.t_coefficient(r))
        .collect();
    let plain = peel(&coeffs, d)
        .ok_or_else(|| Error::invalid(format!("{p} is not in the span of t^j(1+qt)^({d}-2j)")))?;
    let gammas = plain.iter().enumerate().map(|(j, g)| g.shift(j)).collect();
    Ok(GammaExpansion {
        degree: d,
        basis: GammaBasis::QShifted,
        gammas,
    })
}
