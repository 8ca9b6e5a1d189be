//! `qtcat check`: each check prints one JSON verdict with a witness on failure.

use qtcat_core::absolute_order::{conjecture_check, interval, interval_joint_poly, Permutation};
use qtcat_core::lattice_paths::{enumerate_dyck, MAX_ENUM_ORDER};
use qtcat_core::polynomials::{
    carlitz_cf, carlitz_riordan_sides, cf_truncate, dy_poly_enum, dy_poly_fibers,
    dy_poly_recurrence, numbers, BiPoly,
};
use qtcat_core::su_words::check_sbd;
use qtcat_core::type_b::{enumerate_ncb, sbd_b, BPartition};
use qtcat_core::Error;
use serde_json::{json, Map, Value};

use crate::{CheckKind, Outcome};

/// Smallest `(t exponent, q exponent)` where two polynomials differ.
fn first_difference(expected: &BiPoly, actual: &BiPoly) -> Option<String> {
    let diff = expected - actual;
    let (&(a, r), _) = diff.terms().min_by_key(|(&(a, r), _)| (r, a))?;
    Some(format!(
        "coefficient of q^{a} t^{r}: expected {}, got {}",
        expected.coeff(a, r),
        actual.coeff(a, r)
    ))
}

struct Verdict {
    witness: Option<String>,
    details: Map<String, Value>,
}

impl Verdict {
    fn from_witness(witness: Option<String>) -> Self {
        Verdict {
            witness,
            details: Map::new(),
        }
    }
}

fn check_enumeration_cap(n: usize) -> Result<(), Error> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    Ok(())
}

fn recurrence(n: usize) -> Result<Verdict, Error> {
    check_enumeration_cap(n)?;
    Ok(Verdict::from_witness(first_difference(
        &dy_poly_enum(n)?,
        &dy_poly_recurrence(n),
    )))
}

fn carlitz(n: usize) -> Result<Verdict, Error> {
    let (lhs, rhs) = carlitz_riordan_sides(n)?;
    if lhs != rhs {
        let e = (0..)
            .find(|&e| lhs.coeff(e) != rhs.coeff(e))
            .expect("polynomials differ somewhere");
        return Ok(Verdict::from_witness(Some(format!(
            "recurrence at t = 1, coefficient of q^{e}: expected {}, got {}",
            lhs.coeff(e),
            rhs.coeff(e)
        ))));
    }
    let cf = carlitz_cf(n + 1, n)?;
    for m in 0..=n {
        let direct = BiPoly::from_exponents(enumerate_dyck(m)?.map(|p| (p.area_prime(), 0)));
        if let Some(w) = first_difference(&direct, cf.coeff(m)) {
            return Ok(Verdict::from_witness(Some(format!(
                "continued fraction, z^{m}: {w}"
            ))));
        }
    }
    Ok(Verdict::from_witness(None))
}

fn cf(n: usize) -> Result<Verdict, Error> {
    check_enumeration_cap(n)?;
    let series = cf_truncate(n + 1, n)?;
    for m in 0..=n {
        if let Some(w) = first_difference(&dy_poly_enum(m)?, series.coeff(m)) {
            return Ok(Verdict::from_witness(Some(format!("z^{m}: {w}"))));
        }
    }
    Ok(Verdict::from_witness(None))
}

fn corollary(n: usize) -> Result<Verdict, Error> {
    let joint = interval_joint_poly(n)?;
    if let Some(w) = first_difference(&dy_poly_enum(n)?, &joint) {
        return Ok(Verdict::from_witness(Some(w)));
    }
    if n > 0 {
        let members = interval(&Permutation::standard_cycle(n))?;
        if let Some(s) = members
            .iter()
            .find(|s| s.reflection_length() != s.excedances())
        {
            return Ok(Verdict::from_witness(Some(format!(
                "{s}: reflection length differs from excedances"
            ))));
        }
    }
    Ok(Verdict::from_witness(None))
}

fn sbd(n: usize) -> Result<Verdict, Error> {
    check_enumeration_cap(n)?;
    if n == 0 {
        return Err(Error::Invalid("the decomposition starts at n = 1".into()));
    }
    match check_sbd(n) {
        Ok(()) => {}
        Err(Error::Consistency(msg)) => return Ok(Verdict::from_witness(Some(msg))),
        Err(e) => return Err(e),
    }
    Ok(Verdict::from_witness(first_difference(
        &dy_poly_enum(n)?,
        &dy_poly_fibers(n)?,
    )))
}

fn sbd_b_check(n: usize) -> Result<Verdict, Error> {
    let fibers = sbd_b(n)?;
    let mut seen = std::collections::BTreeSet::new();
    for f in &fibers {
        let base = format!("L={:?} R={:?}", f.base().l(), f.base().r());
        let k = f.base().l().len();
        for (i, a) in f.members().iter().enumerate() {
            if !seen.insert(a.clone()) {
                return Ok(Verdict::from_witness(Some(format!(
                    "{a} lies in two fibers (second: {base})"
                ))));
            }
            if a.rank() != n - k - i.count_ones() as usize {
                return Ok(Verdict::from_witness(Some(format!(
                    "{a} has the wrong rank in fiber {base}"
                ))));
            }
            for (j, c) in f.members().iter().enumerate() {
                if a.leq(c)? != (i & j == j) {
                    return Ok(Verdict::from_witness(Some(format!(
                        "{a} and {c} break the Boolean order of {base}"
                    ))));
                }
            }
        }
    }
    let all: Vec<BPartition> = enumerate_ncb(n)?;
    if let Some(missing) = all.iter().find(|p| !seen.contains(*p)) {
        return Ok(Verdict::from_witness(Some(format!(
            "{missing} lies in no fiber"
        ))));
    }
    let mut v = Verdict::from_witness(None);
    v.details.insert("fibers".into(), json!(fibers.len()));
    v.details.insert(
        "elements".into(),
        json!(numbers::binomial(2 * n, n).to_string()),
    );
    Ok(v)
}

fn conjecture(n: usize) -> Result<Verdict, Error> {
    let g = conjecture_check(n)?;
    let witness = g.negative_coefficients().first().map(|(j, e)| {
        format!(
            "coefficient of q^{e} in gamma_{j} is {}",
            g.gamma(*j).coeff(*e)
        )
    });
    let mut v = Verdict::from_witness(witness);
    let gammas: Vec<Value> = g.gammas().iter().map(|c| json!(c.format_in("q"))).collect();
    v.details.insert("gammas".into(), Value::Array(gammas));
    Ok(v)
}

fn name(kind: CheckKind) -> &'static str {
    match kind {
        CheckKind::Recurrence => "recurrence",
        CheckKind::Carlitz => "carlitz",
        CheckKind::Cf => "cf",
        CheckKind::Corollary => "corollary",
        CheckKind::Sbd => "sbd",
        CheckKind::SbdB => "sbd-b",
        CheckKind::Conjecture => "conjecture",
    }
}

pub(crate) fn run(kind: CheckKind, n: usize) -> Result<Outcome, Error> {
    let verdict = match kind {
        CheckKind::Recurrence => recurrence(n),
        CheckKind::Carlitz => carlitz(n),
        CheckKind::Cf => cf(n),
        CheckKind::Corollary => corollary(n),
        CheckKind::Sbd => sbd(n),
        CheckKind::SbdB => sbd_b_check(n),
        CheckKind::Conjecture => conjecture(n),
    }?;
    let pass = verdict.witness.is_none();
    let mut out = verdict.details;
    out.insert("check".into(), json!(name(kind)));
    out.insert("n".into(), json!(n));
    out.insert("pass".into(), json!(pass));
    out.insert("witness".into(), json!(verdict.witness));
    println!("{}", Value::Object(out));
    Ok(if pass {
        Outcome::Success
    } else {
        Outcome::CheckFailed
    })
}
