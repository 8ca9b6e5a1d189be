//! Permutations, their statistics, and the interval below an `n`-cycle in
//! the absolute order.
//!
//! Permutations are written in one-line notation with values `1..=n`. A
//! word `s_{i_1} ... s_{i_k}` in simple transpositions is turned into a
//! permutation by applying the value swaps `i <-> i + 1` left to right,
//! starting from the identity.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice_paths::DyckPath;
use crate::noncrossing::NoncrossingPartition;
use crate::polynomials::{dy_poly_enum, gamma_expand_q_shifted, BiPoly, GammaExpansion};

/// Largest `n` for which all of `S_n` is scanned.
pub const MAX_SCAN_ORDER: usize = 9;

/// Largest `n` for which the interval below `(1 2 ... n)` is enumerated.
pub const MAX_INTERVAL_ORDER: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub inv: usize,
    pub refl_len: usize,
    pub exc: usize,
    pub des: usize,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(Error::invalid(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::invalid(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The cycle `(1 2 ... n)`.
    pub fn standard_cycle(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).map(|i| if i == n { 1 } else { i + 1 }).collect(),
        }
    }

    /// The permutation `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut one_line: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut used[x - 1], true) {
                    return Err(Error::invalid(format!("bad or repeated cycle entry {x}")));
                }
                one_line[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { one_line })
    }

    /// Product of simple transpositions, each applied as a swap of the
    /// values `i` and `i + 1`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut one_line: Vec<usize> = (1..=n).collect();
        let mut pos: Vec<usize> = (0..n).collect();
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::invalid(format!("s_{i} is not a generator of S_{n}")));
            }
            let (a, b) = (pos[i - 1], pos[i]);
            one_line.swap(a, b);
            pos.swap(i - 1, i);
        }
        Ok(Permutation { one_line })
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::invalid(format!(
                "composing permutations of {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            one_line: other
                .one_line
                .iter()
                .map(|&v| self.one_line[v - 1])
                .collect(),
        })
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.one_line[x - 1];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_full_cycle(&self) -> bool {
        self.n() > 0 && self.cycles().len() == 1
    }

    pub fn inversions(&self) -> usize {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// Reflection length: `n` minus the number of cycles.
    pub fn reflection_length(&self) -> usize {
        self.n() - self.cycles().len()
    }

    pub fn excedances(&self) -> usize {
        self.one_line
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    pub fn descents(&self) -> usize {
        self.one_line.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn stats(&self) -> PermStats {
        PermStats {
            inv: self.inversions(),
            refl_len: self.reflection_length(),
            exc: self.excedances(),
            des: self.descents(),
        }
    }
}

impl fmt::Display for Permutation {
    /// Digits run together up to `n = 9`, space separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { " " };
        for (k, v) in self.one_line.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let values: Vec<usize> = if t.contains(|c: char| c.is_whitespace() || c == ',') {
            t.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|e| Error::parse("permutation", s, e.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::parse("permutation", s, format!("unexpected character {c:?}"))
                    })
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values).map_err(|e| Error::parse("permutation", s, e.to_string()))
    }
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        if let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) {
            let j = (i..w.len())
                .rev()
                .find(|&j| w[j] > w[i - 1])
                .expect("successor exists");
            w.swap(i - 1, j);
            w[i..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { one_line: current })
    }
}

pub fn all_permutations(n: usize) -> Result<Permutations> {
    if n > MAX_SCAN_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_SCAN_ORDER,
        });
    }
    Ok(Permutations {
        next: Some((1..=n).collect()),
    })
}

/// Result of the additivity test `l'(σ) + l'(σ⁻¹c) = l'(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalMembershipCertificate {
    pub sigma: Permutation,
    pub c: Permutation,
    /// `(l'(σ), l'(σ⁻¹c), l'(c))`.
    pub lengths: (usize, usize, usize),
}

impl IntervalMembershipCertificate {
    pub fn is_member(&self) -> bool {
        self.lengths.0 + self.lengths.1 == self.lengths.2
    }
}

/// `σ ≤ τ` in the absolute order.
pub fn absolute_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    let rest = sigma.inverse().compose(tau)?;
    Ok(sigma.reflection_length() + rest.reflection_length() == tau.reflection_length())
}

/// Tests whether `σ` lies in the interval `[e, c]` for an `n`-cycle `c`.
pub fn in_interval(sigma: &Permutation, c: &Permutation) -> Result<IntervalMembershipCertificate> {
    if !c.is_full_cycle() {
        return Err(Error::invalid(format!("{c} is not an {}-cycle", c.n())));
    }
    let rest = sigma.inverse().compose(c)?;
    Ok(IntervalMembershipCertificate {
        sigma: sigma.clone(),
        c: c.clone(),
        lengths: (
            sigma.reflection_length(),
            rest.reflection_length(),
            c.reflection_length(),
        ),
    })
}

/// Members of `[e, c]`, in lexicographic order.
pub fn interval(c: &Permutation) -> Result<Vec<Permutation>> {
    let n = c.n();
    if n > MAX_INTERVAL_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_INTERVAL_ORDER,
        });
    }
    if !c.is_full_cycle() {
        return Err(Error::invalid(format!("{c} is not an {n}-cycle")));
    }
    let mut out = Vec::new();
    for s in all_permutations(n)? {
        if in_interval(&s, c)?.is_member() {
            out.push(s);
        }
    }
    Ok(out)
}

/// Sends each block `b_1 < ... < b_k` to the cycle `(b_1 ... b_k)`.
pub fn biane(pi: &NoncrossingPartition) -> Permutation {
    Permutation::from_cycles(pi.n(), pi.blocks()).expect("blocks are disjoint cycles")
}

/// `sum q^inv t^(reflection length)` over `[e, (1 2 ... n)]`.
pub fn interval_joint_poly(n: usize) -> Result<BiPoly> {
    if n == 0 {
        return Ok(BiPoly::one());
    }
    let members = interval(&Permutation::standard_cycle(n))?;
    Ok(BiPoly::from_exponents(
        members
            .iter()
            .map(|s| (s.inversions(), s.reflection_length())),
    ))
}

/// Lattice diamonds under a path, as bottom corners `(x, y)`.
fn boxes(p: &DyckPath) -> Vec<(usize, usize)> {
    let h = p.heights();
    let mut out = Vec::new();
    for (x, &hx) in h.iter().enumerate() {
        let mut y = x % 2;
        while y + 2 <= hx as usize {
            out.push((x, y));
            y += 2;
        }
    }
    out
}

/// Generator word of the diagonal filling: the diamond with bottom corner
/// `(x, y)` carries `s_{(x - y)/2}`; diagonals are read right to left, each
/// from top to bottom.
pub fn bk_word(p: &DyckPath) -> Vec<usize> {
    let mut b = boxes(p);
    b.sort_by(|&(x1, y1), &(x2, y2)| (x2 + y2).cmp(&(x1 + y1)).then(y2.cmp(&y1)));
    b.into_iter().map(|(x, y)| (x - y) / 2).collect()
}

pub fn bk_fill(p: &DyckPath) -> Permutation {
    Permutation::from_word(p.order(), &bk_word(p)).expect("labels stay below n")
}

/// Generator word of the row filling: the diamond with bottom corner
/// `(x, y)` carries `s_{n - (x - y)/2}`; rows are read top to bottom, each
/// from right to left.
pub fn stump_word(p: &DyckPath) -> Vec<usize> {
    let n = p.order();
    let mut b = boxes(p);
    b.sort_by(|&(x1, y1), &(x2, y2)| y2.cmp(&y1).then(x2.cmp(&x1)));
    b.into_iter().map(|(x, y)| n - (x - y) / 2).collect()
}

pub fn stump_fill(p: &DyckPath) -> Permutation {
    Permutation::from_word(p.order(), &stump_word(p)).expect("labels stay below n")
}

/// No index triple of `σ` is order-isomorphic to `pattern`.
pub fn avoids(sigma: &Permutation, pattern: &Permutation) -> Result<bool> {
    if pattern.n() != 3 {
        return Err(Error::invalid(format!(
            "pattern {pattern} does not have length 3"
        )));
    }
    let w = sigma.one_line();
    let pat = pattern.one_line();
    let n = w.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let triple = [w[i], w[j], w[k]];
                let matches =
                    (0..3).all(|a| (0..3).all(|b| (triple[a] < triple[b]) == (pat[a] < pat[b])));
                if matches {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `sum q^inv t^exc` over `S_n`.
pub fn sn_joint_poly(n: usize) -> Result<BiPoly> {
    Ok(BiPoly::from_exponents(
        all_permutations(n)?.map(|s| (s.inversions(), s.excedances())),
    ))
}

/// Expansion of `sum q^inv t^exc` over `S_n` in the basis
/// `t^j (1 + qt)^(n - 1 - 2j)`; negative coefficients are reported through
/// [`GammaExpansion::negative_coefficients`].
pub fn conjecture_check(n: usize) -> Result<GammaExpansion> {
    if n == 0 {
        return Err(Error::invalid("expansion needs n >= 1"));
    }
    for s in all_permutations(n)? {
        if s.inversions() < s.excedances() {
            return Err(Error::Consistency(format!(
                "{s} has fewer inversions than excedances"
            )));
        }
    }
    gamma_expand_q_shifted(&sn_joint_poly(n)?, n - 1)
}

/// Whether `sum q^inv t^candidate` over the 312-avoiding permutations of
/// `S_n` equals the area/rank polynomial of Dyck paths.
pub fn statistic_search(n: usize, candidate: impl Fn(&Permutation) -> usize) -> Result<bool> {
    let pattern = Permutation {
        one_line: vec![3, 1, 2],
    };
    let mut pairs = Vec::new();
    for s in all_permutations(n)? {
        if avoids(&s, &pattern)? {
            pairs.push((s.inversions(), candidate(&s)));
        }
    }
    Ok(BiPoly::from_exponents(pairs) == dy_poly_enum(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_paths::enumerate_dyck;
    use crate::noncrossing::enumerate_nc;
    use crate::su_words::path_rank;
    use std::collections::{HashMap, HashSet};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn stats_examples() {
        assert_eq!(
            Permutation::identity(5).stats(),
            PermStats {
                inv: 0,
                refl_len: 0,
                exc: 0,
                des: 0
            }
        );
        assert_eq!(
            perm("4321").stats(),
            PermStats {
                inv: 6,
                refl_len: 2,
                exc: 2,
                des: 3
            }
        );
        assert_eq!(perm("35421").inversions(), 8);
    }

    #[test]
    fn inversions_match_pair_count() {
        for s in all_permutations(6).unwrap() {
            let w = s.one_line();
            let mut pairs = 0;
            for i in 0..6 {
                for j in 0..6 {
                    if i < j && w[i] > w[j] {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(s.inversions(), pairs);
            // reflection length is the fewest transpositions: n - cycles
            let cycle_total: usize = s.cycles().iter().map(|c| c.len() - 1).sum();
            assert_eq!(s.reflection_length(), cycle_total);
        }
    }

    #[test]
    fn parsing_and_cycles() {
        assert!("4421".parse::<Permutation>().is_err());
        assert!("4x21".parse::<Permutation>().is_err());
        assert_eq!(perm("2 3 1"), perm("231"));
        assert_eq!(Permutation::standard_cycle(4), perm("2341"));
        assert_eq!(
            Permutation::from_cycles(4, &[vec![1, 2, 4, 3]]).unwrap(),
            perm("2413")
        );
        let s = perm("35421");
        assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(5));
        assert_eq!(all_permutations(5).unwrap().count(), 120);
        assert!(all_permutations(10).is_err());
        let ten = Permutation::longest(10);
        assert_eq!(ten.to_string().parse::<Permutation>().unwrap(), ten);
    }

    #[test]
    fn membership_examples() {
        let long = Permutation::longest(4);
        let c = Permutation::standard_cycle(4);
        let cert = in_interval(&long, &c).unwrap();
        assert!(cert.is_member());
        assert_eq!(cert.lengths, (2, 1, 3));
        let other = Permutation::from_cycles(4, &[vec![1, 2, 4, 3]]).unwrap();
        let cert = in_interval(&long, &other).unwrap();
        assert!(!cert.is_member());
        assert_eq!(cert.lengths, (2, 3, 3));
        assert!(in_interval(&Permutation::identity(4), &other)
            .unwrap()
            .is_member());
        assert!(in_interval(&long, &long).is_err());
    }

    #[test]
    fn biane_examples_and_bijection() {
        assert_eq!(biane(&"{1,4}{2,3}".parse().unwrap()), perm("4321"));
        assert_eq!(
            biane(&NoncrossingPartition::singletons(4)),
            Permutation::identity(4)
        );
        assert_eq!(
            biane(&NoncrossingPartition::full(5)),
            Permutation::standard_cycle(5)
        );
        for n in 1..=6 {
            let c = Permutation::standard_cycle(n);
            let nc = enumerate_nc(n).unwrap();
            let images: Vec<Permutation> = nc.iter().map(biane).collect();
            let members: HashSet<_> = interval(&c).unwrap().into_iter().collect();
            assert_eq!(images.iter().cloned().collect::<HashSet<_>>(), members);
            assert_eq!(members.len(), nc.len());
            for (p, s) in nc.iter().zip(&images) {
                assert_eq!(p.rank(), s.reflection_length());
            }
            for (p1, s1) in nc.iter().zip(&images) {
                for (p2, s2) in nc.iter().zip(&images) {
                    assert_eq!(p1.leq(p2).unwrap(), absolute_leq(s1, s2).unwrap(), "n={n}");
                }
            }
        }
    }

    #[test]
    fn interval_polynomial_matches_paths() {
        for n in 1..=7 {
            assert_eq!(
                interval_joint_poly(n).unwrap(),
                dy_poly_enum(n).unwrap(),
                "n={n}"
            );
            for s in interval(&Permutation::standard_cycle(n)).unwrap() {
                assert_eq!(s.reflection_length(), s.excedances());
            }
        }
        assert!(interval_joint_poly(9).is_err());
    }

    #[test]
    fn rank_distribution_ignores_the_cycle() {
        for n in 2..=6 {
            let cycles: Vec<Permutation> = all_permutations(n)
                .unwrap()
                .filter(Permutation::is_full_cycle)
                .collect();
            let rank_dist = |c: &Permutation| {
                BiPoly::from_exponents(
                    interval(c)
                        .unwrap()
                        .iter()
                        .map(|s| (0, s.reflection_length())),
                )
            };
            let first = rank_dist(&cycles[0]);
            for c in &cycles {
                assert_eq!(rank_dist(c), first);
            }
        }
        let len_dist = |c: &Permutation| {
            BiPoly::from_exponents(interval(c).unwrap().iter().map(|s| (s.inversions(), 0)))
        };
        let skew = Permutation::from_cycles(4, &[vec![1, 2, 4, 3]]).unwrap();
        assert_ne!(len_dist(&skew), len_dist(&Permutation::standard_cycle(4)));
    }

    #[test]
    fn filling_examples() {
        let p: DyckPath = "UUUDUUDDDD".parse().unwrap();
        assert_eq!(bk_word(&p), vec![2, 3, 4, 2, 3, 1, 2, 1]);
        assert_eq!(bk_fill(&p), perm("35421"));
        assert_eq!(stump_word(&p), vec![3, 2, 3, 4, 1, 2, 3, 4]);
        assert_eq!(stump_fill(&p), perm("54213"));
        assert_eq!(p.area(), 8);
        let small: DyckPath = "UUDD".parse().unwrap();
        assert_eq!(bk_fill(&small), perm("21"));
        assert_eq!(stump_fill(&small), perm("21"));
        let padded: DyckPath = "UUDDUD".parse().unwrap();
        assert_eq!(bk_fill(&padded), perm("213"));
        // the row filling counts generators from the other end
        assert_eq!(stump_fill(&padded), perm("132"));
        assert_eq!(stump_fill(&"UDUUDD".parse().unwrap()), perm("213"));
        assert_eq!(
            bk_fill(&DyckPath::sawtooth(4).unwrap()),
            Permutation::identity(4)
        );
        assert_eq!(
            stump_fill(&DyckPath::sawtooth(4).unwrap()),
            Permutation::identity(4)
        );
    }

    #[test]
    fn fillings_biject_onto_avoiders() {
        let p312 = perm("312");
        let p231 = perm("231");
        for n in 1..=7 {
            let mut bk = HashSet::new();
            let mut st = HashSet::new();
            for p in enumerate_dyck(n).unwrap() {
                let b = bk_fill(&p);
                let s = stump_fill(&p);
                assert_eq!(b.inversions(), p.area());
                assert_eq!(s.inversions(), p.area());
                assert_eq!(bk_word(&p).len(), p.area());
                assert!(avoids(&b, &p312).unwrap());
                assert!(avoids(&s, &p231).unwrap());
                bk.insert(b);
                st.insert(s);
            }
            let av312: HashSet<_> = all_permutations(n)
                .unwrap()
                .filter(|s| avoids(s, &p312).unwrap())
                .collect();
            let av231: HashSet<_> = all_permutations(n)
                .unwrap()
                .filter(|s| avoids(s, &p231).unwrap())
                .collect();
            assert_eq!(bk, av312);
            assert_eq!(st, av231);
        }
    }

    #[test]
    fn descents_equidistribute_with_rank() {
        for n in 1..=7 {
            let by_rank =
                BiPoly::from_exponents(enumerate_dyck(n).unwrap().map(|p| (0, path_rank(&p))));
            for pat in ["312", "231"] {
                let pat = perm(pat);
                let by_des = BiPoly::from_exponents(
                    all_permutations(n)
                        .unwrap()
                        .filter(|s| avoids(s, &pat).unwrap())
                        .map(|s| (0, s.descents())),
                );
                assert_eq!(by_des, by_rank, "n={n}");
            }
        }
    }

    #[test]
    fn avoidance_examples() {
        assert!(avoids(&Permutation::identity(5), &perm("312")).unwrap());
        assert!(!avoids(&perm("312"), &perm("312")).unwrap());
        assert!(avoids(&perm("35421"), &perm("312")).unwrap());
        assert!(avoids(&perm("54213"), &perm("231")).unwrap());
        assert!(avoids(&perm("12"), &perm("12")).is_err());
    }

    #[test]
    fn symmetric_group_expansions() {
        let g4 = conjecture_check(4).unwrap();
        assert!(g4.is_nonnegative());
        assert_eq!(g4.gamma(0).coeffs().len(), 1);
        assert_eq!(
            g4.gamma(1),
            crate::polynomials::UniPoly::from_i64s(&[0, 0, 2, 3, 2, 1])
        );
        let g5 = conjecture_check(5).unwrap();
        assert_eq!(
            g5.gamma(1),
            crate::polynomials::UniPoly::from_i64s(&[0, 0, 3, 5, 5, 5, 3, 1])
        );
        assert_eq!(
            g5.gamma(2),
            crate::polynomials::UniPoly::from_i64s(&[0, 0, 0, 0, 1, 2, 2, 3, 4, 3, 1])
        );
        assert_eq!(g5.reconstruct(), sn_joint_poly(5).unwrap());
        let g2 = conjecture_check(2).unwrap();
        assert_eq!(g2.gammas().len(), 1);
        assert_eq!(sn_joint_poly(2).unwrap(), BiPoly::one_plus_qt());
        assert_eq!(sn_joint_poly(1).unwrap(), BiPoly::one());
    }

    #[test]
    fn statistic_search_examples() {
        assert!(!statistic_search(4, Permutation::descents).unwrap());
        assert!(!statistic_search(4, Permutation::excedances).unwrap());
        for n in 1..=6 {
            let back: HashMap<Permutation, usize> = enumerate_dyck(n)
                .unwrap()
                .map(|p| (bk_fill(&p), path_rank(&p)))
                .collect();
            assert!(statistic_search(n, |s| back[s]).unwrap());
        }
    }
}
