//! Exact polynomials in `q` and `t`, the path generating functions built
//! from them, and the identities those functions satisfy.
//!
//! `Dy(n; q, t)` sums `q^area t^rank` over Dyck paths of order `n`. It is
//! computed four ways: by enumeration, by the first-return recurrence, as a
//! sum over Boolean fibers, and from a truncated continued fraction.

mod bipoly;
mod gamma;
pub mod numbers;
mod series;
mod table;
mod unipoly;

pub use bipoly::BiPoly;
pub use gamma::{gamma_expand_plain, gamma_expand_q_shifted, GammaBasis, GammaExpansion};
pub use series::TruncatedSeries;
pub use table::PolyTable;
pub use unipoly::UniPoly;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice_paths::{enumerate_dyck, enumerate_motzkin, MotzkinPath, MAX_ENUM_ORDER};
use crate::su_words::{path_rank, rho, BooleanFiber};
use numbers::{binomial, catalan, narayana};

/// `Dy(n; q, t)` by summing over all paths.
pub fn dy_poly_enum(n: usize) -> Result<BiPoly> {
    Ok(BiPoly::from_exponents(
        enumerate_dyck(n)?.map(|p| (p.area(), path_rank(&p))),
    ))
}

/// `Dy(m; q, t)` for `m = 0..=n` by the first-return recurrence
/// `Dy(n) = sum_k (qt)^k Dy(k; q, 1/t) Dy(n-1-k)`.
pub fn dy_polys_recurrence(n: usize) -> Vec<BiPoly> {
    let mut table: Vec<BiPoly> = vec![BiPoly::one()];
    for m in 1..=n {
        let mut total = BiPoly::zero();
        for k in 0..m {
            // (qt)^k t^{-r} = q^k t^{k-r}; rank stays below k for k >= 1
            let left = table[k]
                .reflect_t(k as u32)
                .expect("rank is below order")
                .shift(k as u32, 0);
            total = &total + &(&left * &table[m - 1 - k]);
        }
        table.push(total);
    }
    table
}

pub fn dy_poly_recurrence(n: usize) -> BiPoly {
    dy_polys_recurrence(n)
        .pop()
        .expect("table holds n + 1 entries")
}

/// Area of the rank-minimal path over `m`.
pub fn motzkin_area(m: &MotzkinPath) -> Result<usize> {
    Ok(rho(m)?.area())
}

/// `M(n; q, t)`: `q^area t^(up steps)` over Motzkin paths of order `n`.
pub fn motzkin_poly(n: usize) -> Result<BiPoly> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    let paths = enumerate_motzkin(n)?;
    let pairs = paths
        .iter()
        .map(|m| Ok((motzkin_area(m)?, m.up_count())))
        .collect::<Result<Vec<_>>>()?;
    Ok(BiPoly::from_exponents(pairs))
}

/// Weight of a fiber computed member by member.
pub fn fiber_weight(f: &BooleanFiber) -> BiPoly {
    BiPoly::from_exponents(f.members().iter().map(|p| (p.area(), path_rank(p))))
}

/// Closed form of a fiber weight: `q^area(m) t^k (1 + qt)^(n - 1 - 2k)`
/// with `k` the number of up steps of `m`.
pub fn fiber_weight_formula(m: &MotzkinPath) -> Result<BiPoly> {
    let k = m.up_count();
    let levels = m.order() - 1 - 2 * k;
    Ok(BiPoly::monomial(1, motzkin_area(m)? as u32, k as u32)
        * BiPoly::one_plus_qt().pow(levels as u32))
}

/// `Dy(n; q, t)` as the sum of closed-form fiber weights.
pub fn dy_poly_fibers(n: usize) -> Result<BiPoly> {
    if n == 0 {
        return Ok(BiPoly::one());
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    let mut total = BiPoly::zero();
    for m in enumerate_motzkin(n)? {
        total = &total + &fiber_weight_formula(&m)?;
    }
    Ok(total)
}

/// Expansion of `Dy(n; q, t)` in the basis `t^j (1 + qt)^(n - 1 - 2j)`.
///
/// A negative coefficient contradicts the fiber decomposition and is
/// reported as a consistency failure.
pub fn gamma_expand_refined(n: usize) -> Result<GammaExpansion> {
    if n == 0 {
        return Err(Error::invalid("expansion needs n >= 1"));
    }
    let g = gamma_expand_q_shifted(&dy_poly_enum(n)?, n - 1)?;
    if let Some((j, e)) = g.negative_coefficients().first() {
        return Err(Error::Consistency(format!(
            "coefficient of q^{e} in gamma_{j} is negative for n = {n}"
        )));
    }
    Ok(g)
}

/// Checks `Dy(n; q) = sum_k q^k Dy(k; q) Dy(n-1-k; q)` at `t = 1`, with every
/// term computed by enumeration.
pub fn carlitz_riordan_check(n: usize) -> Result<bool> {
    let (lhs, rhs) = carlitz_riordan_sides(n)?;
    Ok(lhs == rhs)
}

/// Both sides of the `t = 1` recurrence: `Dy(n; q)` and the convolution sum.
pub fn carlitz_riordan_sides(n: usize) -> Result<(UniPoly, UniPoly)> {
    if n == 0 {
        return Err(Error::invalid("the recurrence starts at n = 1"));
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    let at_one: Vec<UniPoly> = (0..=n)
        .map(|k| dy_poly_enum(k).map(|p| p.at_t_one()))
        .collect::<Result<_>>()?;
    let mut rhs = UniPoly::zero();
    for k in 0..n {
        rhs = &rhs + &(&at_one[k] * &at_one[n - 1 - k]).shift(k);
    }
    Ok((at_one[n].clone(), rhs))
}

/// Evaluates a finite continued fraction `1 / (1 - a_1 / (1 - a_2 / ...))`
/// bottom-up, where `a_j = numerator(j) z`.
fn evaluate_cf(
    depth: usize,
    cap: usize,
    numerator: impl Fn(usize) -> BiPoly,
) -> Result<TruncatedSeries> {
    if depth == 0 {
        return Err(Error::invalid(
            "continued fraction depth must be at least 1",
        ));
    }
    let one = TruncatedSeries::one(cap);
    let mut tail = one.clone();
    for j in (1..=depth).rev() {
        let scaled = tail.scale(&numerator(j)).shift_z(1);
        tail = one.sub(&scaled)?.reciprocal()?;
    }
    Ok(tail)
}

/// Continued fraction for the generating function of `Dy(n; q, t)`: level
/// `j` has numerator `q^(j-1) z`, times `t` when `j` is even.
pub fn cf_truncate(depth: usize, cap: usize) -> Result<TruncatedSeries> {
    evaluate_cf(depth, cap, |j| {
        BiPoly::monomial(1, (j - 1) as u32, u32::from(j % 2 == 0))
    })
}

/// Classical continued fraction with numerators `q^j z`, whose `z^n`
/// coefficient counts paths by `area + n`.
pub fn carlitz_cf(depth: usize, cap: usize) -> Result<TruncatedSeries> {
    evaluate_cf(depth, cap, |j| BiPoly::monomial(1, j as u32, 0))
}

/// Compares the classical continued fraction with `sum q^(area + n)`
/// through `z^cap`.
pub fn carlitz_cf_check(cap: usize) -> Result<bool> {
    if cap == 0 {
        return Err(Error::invalid("order cap must be at least 1"));
    }
    if cap > MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n: cap,
            cap: MAX_ENUM_ORDER,
        });
    }
    let cf = carlitz_cf(cap + 1, cap)?;
    for n in 0..=cap {
        let direct = BiPoly::from_exponents(enumerate_dyck(n)?.map(|p| (p.area_prime(), 0)));
        if cf.coeff(n) != &direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `Dy(n; 1, t)` has the Narayana numbers as coefficients, that
/// `Dy(n; 1, 1)` is Catalan, and that
/// `C_n = sum_j C_j binom(n-1, 2j) 2^(n-1-2j)`.
pub fn narayana_check(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::invalid("Narayana rows start at n = 1"));
    }
    let at_q_one = dy_poly_enum(n)?.at_q_one();
    let rows_match = (1..=n).all(|k| at_q_one.coeff(n - k) == narayana(n, k));
    let total: BigInt = at_q_one.coeffs().iter().sum();
    let gamma_sum: BigInt = (0..=(n - 1) / 2)
        .map(|j| catalan(j) * binomial(n - 1, 2 * j) * (BigInt::from(1) << (n - 1 - 2 * j)))
        .sum();
    Ok(rows_match && total == catalan(n) && gamma_sum == catalan(n))
}

/// Checks `t z F^2 - (1 + z (t - 1)) F + 1 = 0` through `z^cap` for the
/// continued fraction specialized at `q = 1`.
pub fn narayana_cf_check(cap: usize) -> Result<bool> {
    let cf = cf_truncate(cap + 1, cap)?;
    let f = TruncatedSeries::from_coeffs(
        cap,
        cf.coeffs()
            .iter()
            .map(|c| BiPoly::from_t_poly(&c.at_q_one())),
    );
    let t = BiPoly::monomial(1, 0, 1);
    let quad = f.mul(&f)?.scale(&t).shift_z(1);
    let linear = f.add(&f.scale(&(&t - &BiPoly::one())).shift_z(1))?;
    let lhs = quad.sub(&linear)?.add(&TruncatedSeries::one(cap))?;
    Ok(lhs == TruncatedSeries::zero(cap))
}
