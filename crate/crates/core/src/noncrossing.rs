//! Noncrossing partitions of `{1..n}` and the bijection with Dyck paths.
//!
//! Under [`phi`], `i` and `i'` share a block iff the odd vertices of the
//! path at abscissae `2i - 1` and `2i' - 1` sit at the same height and the
//! path between them never drops below that height.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice_paths::{DyckPath, Step};

/// A noncrossing partition in canonical form: blocks sorted by minimum,
/// elements ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Validates that `blocks` is a set partition of `{1..n}` and returns the
/// block label of each element (0-based, indexed by `element - 1`).
fn block_labels(n: usize, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut label = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::invalid("empty block"));
        }
        for &x in block {
            if x == 0 || x > n {
                return Err(Error::invalid(format!("element {x} outside 1..={n}")));
            }
            if label[x - 1] != usize::MAX {
                return Err(Error::invalid(format!("element {x} appears twice")));
            }
            label[x - 1] = b;
        }
    }
    if let Some(missing) = label.iter().position(|&l| l == usize::MAX) {
        return Err(Error::invalid(format!(
            "element {} is not covered",
            missing + 1
        )));
    }
    Ok(label)
}

/// Stack scan over a linear order: a block must be on top of the stack of
/// open blocks whenever one of its non-initial elements is reached.
pub(crate) fn labels_noncrossing(label: &[usize], block_len: &[usize]) -> bool {
    let mut seen = vec![0usize; block_len.len()];
    let mut open: Vec<usize> = Vec::new();
    for &b in label {
        if seen[b] > 0 && open.last() != Some(&b) {
            return false;
        }
        seen[b] += 1;
        if seen[b] == 1 && block_len[b] > 1 {
            open.push(b);
        } else if seen[b] == block_len[b] && block_len[b] > 1 {
            open.pop();
        }
    }
    true
}

/// Checks a set partition of `{1..n}` for crossings.
///
/// Malformed input (overlapping blocks, uncovered elements, out-of-range
/// elements) is an error rather than `false`.
pub fn is_noncrossing(n: usize, blocks: &[Vec<usize>]) -> Result<bool> {
    let label = block_labels(n, blocks)?;
    let lens: Vec<usize> = blocks.iter().map(Vec::len).collect();
    Ok(labels_noncrossing(&label, &lens))
}

impl NoncrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if !is_noncrossing(n, &blocks)? {
            return Err(Error::invalid("blocks cross"));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(NoncrossingPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        NoncrossingPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        let blocks = if n == 0 {
            vec![]
        } else {
            vec![(1..=n).collect()]
        };
        NoncrossingPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `n` minus the number of blocks.
    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// Block index of each element, indexed by `element - 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                label[x - 1] = b;
            }
        }
        label
    }

    /// Reverse refinement: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &NoncrossingPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "comparing partitions of {} and {}",
                self.n, other.n
            )));
        }
        let theirs = other.labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| theirs[x - 1] == theirs[b[0] - 1])))
    }

    /// Partitions covering `self`: merges of two blocks that stay noncrossing.
    pub fn upper_covers(&self) -> Vec<NoncrossingPartition> {
        let mut out = Vec::new();
        for i in 0..self.blocks.len() {
            for j in (i + 1)..self.blocks.len() {
                let mut blocks = self.blocks.clone();
                let merged = blocks.remove(j);
                blocks[i].extend(merged);
                if let Ok(p) = NoncrossingPartition::new(self.n, blocks) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NC({self})")
    }
}

/// Parses `{..}{..}` groups of integers, shared with the type-B text form.
pub(crate) fn parse_braced_blocks(kind: &'static str, s: &str) -> Result<Vec<Vec<i64>>> {
    let mut blocks = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let inner_start = rest
            .strip_prefix('{')
            .ok_or_else(|| Error::parse(kind, s, "expected '{'"))?;
        let close = inner_start
            .find('}')
            .ok_or_else(|| Error::parse(kind, s, "unclosed '{'"))?;
        let block = inner_start[..close]
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::parse(kind, s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
        rest = inner_start[close + 1..].trim_start();
    }
    Ok(blocks)
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    /// Parses the canonical text form; `n` is the total number of elements.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_braced_blocks("noncrossing partition", s)?;
        let blocks = raw
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|x| {
                        usize::try_from(x).map_err(|_| {
                            Error::parse("noncrossing partition", s, "negative element")
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        NoncrossingPartition::new(n, blocks)
            .map_err(|e| Error::parse("noncrossing partition", s, e.to_string()))
    }
}

/// Maps a Dyck path to its noncrossing partition.
pub fn phi(p: &DyckPath) -> NoncrossingPartition {
    let n = p.order();
    let h = p.heights();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // (height, block index), strictly increasing in height
    let mut open: Vec<(u32, usize)> = Vec::new();
    for i in 1..=n {
        let x = 2 * i - 1;
        if i > 1 {
            let low = h[x - 2].min(h[x - 1]).min(h[x]);
            while open.last().is_some_and(|&(y, _)| y > low) {
                open.pop();
            }
        }
        match open.last() {
            Some(&(y, b)) if y == h[x] => blocks[b].push(i),
            _ => {
                open.push((h[x], blocks.len()));
                blocks.push(vec![i]);
            }
        }
    }
    NoncrossingPartition { n, blocks }
}

/// Inverse of [`phi`]: odd vertex `i` sits at height `2d + 1`, where `d`
/// counts the other blocks whose span strictly encloses `i`.
pub fn phi_inverse(pi: &NoncrossingPartition) -> DyckPath {
    let n = pi.n;
    if n == 0 {
        return DyckPath::EMPTY;
    }
    let label = pi.labels();
    let lens: Vec<usize> = pi.blocks.iter().map(Vec::len).collect();
    let mut seen = vec![0usize; lens.len()];
    let mut open = 0usize;
    let mut depth = vec![0usize; n];
    for (i, &b) in label.iter().enumerate() {
        seen[b] += 1;
        if seen[b] == 1 {
            depth[i] = open;
            if lens[b] > 1 {
                open += 1;
            }
        } else {
            depth[i] = open - 1;
            if seen[b] == lens[b] {
                open -= 1;
            }
        }
    }
    let mut steps = Vec::with_capacity(2 * n);
    steps.push(Step::Up);
    for i in 0..n - 1 {
        let pair = match depth[i + 1] as i64 - depth[i] as i64 {
            1 => [Step::Up, Step::Up],
            -1 => [Step::Down, Step::Down],
            0 if label[i] == label[i + 1] => [Step::Up, Step::Down],
            0 => [Step::Down, Step::Up],
            d => unreachable!("nesting depth jumped by {d} in a noncrossing partition"),
        };
        steps.extend_from_slice(&pair);
    }
    steps.push(Step::Down);
    DyckPath::from_steps(&steps).expect("nested-path construction yields a Dyck path")
}

/// `NC(n)` in the order induced by lexicographic Dyck path enumeration.
pub fn enumerate_nc(n: usize) -> Result<Vec<NoncrossingPartition>> {
    Ok(crate::lattice_paths::enumerate_dyck(n)?
        .map(|p| phi(&p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_paths::enumerate_dyck;
    use std::collections::HashSet;

    fn nc(s: &str) -> NoncrossingPartition {
        s.parse().unwrap()
    }

    /// All set partitions of `{1..n}` via restricted growth strings.
    fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        fn go(
            i: usize,
            n: usize,
            rgs: &mut Vec<usize>,
            max: usize,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if i == n {
                let k = rgs.iter().max().map_or(0, |m| m + 1);
                let mut blocks = vec![Vec::new(); k];
                for (x, &b) in rgs.iter().enumerate() {
                    blocks[b].push(x + 1);
                }
                out.push(blocks);
                return;
            }
            for b in 0..=max {
                rgs.push(b);
                go(i + 1, n, rgs, if b == max { max + 1 } else { max }, out);
                rgs.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, &mut Vec::new(), 0, &mut out);
        out
    }

    /// Pairwise definition of crossing, straight from the arc condition.
    fn crosses_brute(blocks: &[Vec<usize>]) -> bool {
        for (i, b1) in blocks.iter().enumerate() {
            for b2 in &blocks[i + 1..] {
                for &a in b1 {
                    for &b in b1 {
                        for &c in b2 {
                            for &d in b2 {
                                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn is_noncrossing_examples() {
        assert!(!is_noncrossing(4, &[vec![1, 3], vec![2, 4]]).unwrap());
        assert!(
            is_noncrossing(8, &[vec![1, 8], vec![2, 4, 7], vec![3], vec![5], vec![6]]).unwrap()
        );
        assert!(is_noncrossing(6, &[vec![1, 2, 6], vec![3], vec![4, 5]]).unwrap());
        assert!(is_noncrossing(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(is_noncrossing(3, &[vec![1, 2]]).is_err());
        assert!(is_noncrossing(2, &[vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn stack_check_matches_pairwise_definition() {
        for n in 1..=7 {
            for blocks in all_set_partitions(n) {
                assert_eq!(
                    is_noncrossing(n, &blocks).unwrap(),
                    !crosses_brute(&blocks),
                    "{blocks:?}"
                );
            }
        }
    }

    #[test]
    fn phi_examples() {
        let p: DyckPath = "UUUUUDDUUDUDDDDD".parse().unwrap();
        assert_eq!(phi(&p), nc("{1,8}{2,4,7}{3}{5}{6}"));
        assert_eq!(phi(&p).rank(), 3);
        assert_eq!(
            phi(&DyckPath::sawtooth(5).unwrap()),
            NoncrossingPartition::singletons(5)
        );
        assert_eq!(phi(&"UUUUDDDD".parse().unwrap()), nc("{1,4}{2,3}"));
    }

    #[test]
    fn one_peak_path_nests_outer_pairs() {
        for n in 1..=10 {
            let mut s = "U".repeat(n);
            s.push_str(&"D".repeat(n));
            let pi = phi(&s.parse().unwrap());
            let expected: Vec<Vec<usize>> = (1..=n.div_ceil(2))
                .map(|i| {
                    if i == n + 1 - i {
                        vec![i]
                    } else {
                        vec![i, n + 1 - i]
                    }
                })
                .collect();
            assert_eq!(pi.blocks(), &expected[..]);
            assert_eq!(pi.rank(), n / 2);
        }
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(
            phi_inverse(&NoncrossingPartition::singletons(4)).to_string(),
            "UDUDUDUD"
        );
        assert_eq!(
            phi_inverse(&nc("{1,8}{2,4,7}{3}{5}{6}")).to_string(),
            "UUUUUDDUUDUDDDDD"
        );
        assert_eq!(phi_inverse(&nc("{1,4}{2,3}")).to_string(), "UUUUDDDD");
        assert!("{1,3}{2,4}".parse::<NoncrossingPartition>().is_err());
    }

    #[test]
    fn phi_round_trips_and_counts() {
        for n in 0..=9 {
            let mut seen = HashSet::new();
            for p in enumerate_dyck(n).unwrap() {
                let pi = phi(&p);
                assert!(is_noncrossing(n, pi.blocks()).unwrap());
                assert_eq!(phi_inverse(&pi), p);
                assert!(seen.insert(pi));
            }
        }
        for n in 1..=7 {
            let all: HashSet<_> = all_set_partitions(n)
                .into_iter()
                .filter(|b| !crosses_brute(b))
                .map(|b| NoncrossingPartition::new(n, b).unwrap())
                .collect();
            let via_phi: HashSet<_> = enumerate_nc(n).unwrap().into_iter().collect();
            assert_eq!(all, via_phi, "n={n}");
        }
    }

    #[test]
    fn leq_examples() {
        let s = NoncrossingPartition::singletons(4);
        for pi in enumerate_nc(4).unwrap() {
            assert!(s.leq(&pi).unwrap());
            assert!(pi.leq(&NoncrossingPartition::full(4)).unwrap());
        }
        assert!(nc("{1,2}{3}{4}").leq(&nc("{1,2,4}{3}")).unwrap());
        assert!(!nc("{1,2}{3,4}").leq(&nc("{1,4}{2,3}")).unwrap());
        assert!(s.leq(&NoncrossingPartition::singletons(5)).is_err());
    }

    #[test]
    fn leq_is_a_partial_order() {
        for n in 1..=7 {
            let all = enumerate_nc(n).unwrap();
            let m = all.len();
            let rel: Vec<Vec<bool>> = all
                .iter()
                .map(|a| all.iter().map(|b| a.leq(b).unwrap()).collect())
                .collect();
            for i in 0..m {
                assert!(rel[i][i]);
                for j in 0..m {
                    if i != j {
                        assert!(!(rel[i][j] && rel[j][i]), "antisymmetry n={n}");
                    }
                    if rel[i][j] {
                        for k in 0..m {
                            if rel[j][k] {
                                assert!(rel[i][k], "transitivity n={n}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn covers_raise_rank_by_one() {
        for pi in enumerate_nc(6).unwrap() {
            for c in pi.upper_covers() {
                assert_eq!(c.rank(), pi.rank() + 1);
                assert!(pi.leq(&c).unwrap());
            }
        }
        // rank 0 -> 1: six pairs; rank 1 -> 2: three merges each, except that
        // {1,3} and {2,4} lose the crossing merge; rank 2 -> 3: six
        let edges: usize = enumerate_nc(4)
            .unwrap()
            .iter()
            .map(|p| p.upper_covers().len())
            .sum();
        assert_eq!(edges, 6 + (4 * 3 + 2 * 2) + 6);
    }

    #[test]
    fn narayana_block_counts() {
        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 1..=9 {
            let mut by_blocks = vec![0usize; n + 1];
            for pi in enumerate_nc(n).unwrap() {
                by_blocks[pi.block_count()] += 1;
            }
            for k in 1..=n {
                assert_eq!(
                    by_blocks[k] * k,
                    binom(n - 1, k - 1) * binom(n, k - 1),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn text_form_round_trips() {
        let pi = nc("{2,4,7}{1,8}{3}{6}{5}");
        assert_eq!(pi.to_string(), "{1,8}{2,4,7}{3}{5}{6}");
        assert_eq!(pi.to_string().parse::<NoncrossingPartition>().unwrap(), pi);
    }
}
