//! `qtcat convert`: every representation of one object, one `key: value`
//! line each.

use qtcat_core::absolute_order::{avoids, biane, bk_fill, in_interval, stump_fill, Permutation};
use qtcat_core::lattice_paths::{enumerate_dyck, DyckPath, MAX_ENUM_ORDER};
use qtcat_core::noncrossing::{phi, phi_inverse, NoncrossingPartition};
use qtcat_core::su_words::{decode, path_rank, theta, word_of_path, SuWord};
use qtcat_core::type_b::BPartition;
use qtcat_core::Error;

use crate::{ConvertKind, Outcome};

fn or_dash(s: String) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}

fn format_cycles(s: &Permutation) -> String {
    let nontrivial: Vec<String> = s
        .cycles()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            format!(
                "({})",
                c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            )
        })
        .collect();
    if nontrivial.is_empty() {
        "e".into()
    } else {
        nontrivial.concat()
    }
}

fn describe_path(p: &DyckPath) -> Result<Vec<(&'static str, String)>, Error> {
    let mut out = vec![
        ("path", or_dash(p.to_string())),
        ("order", p.order().to_string()),
        ("area", p.area().to_string()),
        ("area_prime", p.area_prime().to_string()),
        ("rank", path_rank(p).to_string()),
        ("partition", or_dash(phi(p).to_string())),
    ];
    if p.is_empty() {
        return Ok(out);
    }
    out.push(("word", or_dash(word_of_path(p)?.to_string())));
    out.push(("motzkin", or_dash(theta(p)?.to_string())));
    let split = p.first_return_split()?;
    out.push((
        "first_return",
        format!(
            "k={} left={} right={}",
            split.k,
            or_dash(split.left.to_string()),
            or_dash(split.right.to_string())
        ),
    ));
    out.push(("bk_fill", bk_fill(p).to_string()));
    out.push(("stump_fill", stump_fill(p).to_string()));
    out.push(("biane", biane(&phi(p)).to_string()));
    Ok(out)
}

fn describe_perm(s: &Permutation) -> Result<Vec<(&'static str, String)>, Error> {
    let stats = s.stats();
    let mut out = vec![
        ("perm", s.to_string()),
        ("cycles", format_cycles(s)),
        ("inverse", s.inverse().to_string()),
        ("inv", stats.inv.to_string()),
        ("refl_len", stats.refl_len.to_string()),
        ("exc", stats.exc.to_string()),
        ("des", stats.des.to_string()),
    ];
    let n = s.n();
    if n == 0 {
        return Ok(out);
    }
    let c = Permutation::standard_cycle(n);
    let cert = in_interval(s, &c)?;
    let (a, b, total) = cert.lengths;
    out.push((
        "below_standard_cycle",
        format!("{} ({a} + {b} vs {total})", cert.is_member()),
    ));
    let p312: Permutation = "312".parse()?;
    let p231: Permutation = "231".parse()?;
    let avoid312 = avoids(s, &p312)?;
    let avoid231 = avoids(s, &p231)?;
    out.push(("avoids_312", avoid312.to_string()));
    out.push(("avoids_231", avoid231.to_string()));
    if n <= MAX_ENUM_ORDER && (avoid312 || avoid231) {
        for p in enumerate_dyck(n)? {
            if avoid312 && bk_fill(&p) == *s {
                out.push(("bk_path", p.to_string()));
            }
            if avoid231 && stump_fill(&p) == *s {
                out.push(("stump_path", p.to_string()));
            }
        }
    }
    Ok(out)
}

fn describe_b(p: &BPartition) -> Vec<(&'static str, String)> {
    vec![
        ("partition", p.to_string()),
        ("n", p.n().to_string()),
        ("rank", p.rank().to_string()),
        ("nonzero_pairs", p.nonzero_pairs().to_string()),
        (
            "zero_block",
            p.zero_block()
                .map(|b| {
                    format!(
                        "{{{}}}",
                        b.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
                    )
                })
                .unwrap_or_else(|| "-".into()),
        ),
    ]
}

pub(crate) fn run(kind: ConvertKind, value: &str) -> Result<Outcome, Error> {
    let lines = match kind {
        ConvertKind::Path => describe_path(&value.parse()?)?,
        ConvertKind::Partition if value.contains('-') => describe_b(&value.parse()?),
        ConvertKind::Partition => {
            describe_path(&phi_inverse(&value.parse::<NoncrossingPartition>()?))?
        }
        ConvertKind::Suword => describe_path(&decode(&value.parse::<SuWord>()?)?)?,
        ConvertKind::Perm => describe_perm(&value.parse()?)?,
    };
    for (k, v) in lines {
        println!("{k}: {v}");
    }
    Ok(Outcome::Success)
}
