//! Noncrossing partitions of type B and their `(L, R)`-pair model.
//!
//! Elements `±1..±n` sit on a circle in the order `1, .., n, -1, .., -n`.
//! A type-B partition is closed under negation, has at most one block equal
//! to its own negative (the zero block), and has no crossing chords.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::noncrossing::{labels_noncrossing, parse_braced_blocks};
use crate::polynomials::numbers::binomial;
use crate::polynomials::{BiPoly, UniPoly};

/// Largest `n` accepted by [`enumerate_ncb`] and [`rank_gf_b`].
pub const MAX_NCB_ORDER: usize = 7;

/// Largest `n` accepted by [`sbd_b`].
pub const MAX_SBD_B_ORDER: usize = 6;

/// Position of a signed element on the circle.
fn circle_pos(n: usize, x: i32) -> usize {
    if x > 0 {
        x as usize - 1
    } else {
        n + (-x) as usize - 1
    }
}

fn circle_elem(n: usize, pos: usize) -> i32 {
    if pos < n {
        pos as i32 + 1
    } else {
        -((pos - n) as i32 + 1)
    }
}

/// A noncrossing partition of `±1..±n` in canonical form: elements of each
/// block and the blocks themselves ordered by circle position.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPartition {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl BPartition {
    pub fn new(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        let size = 2 * n;
        let mut label = vec![usize::MAX; size];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            for &x in block {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return Err(Error::invalid(format!("element {x} outside ±1..±{n}")));
                }
                let p = circle_pos(n, x);
                if label[p] != usize::MAX {
                    return Err(Error::invalid(format!("element {x} appears twice")));
                }
                label[p] = b;
            }
        }
        if let Some(p) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::invalid(format!(
                "element {} is not covered",
                circle_elem(n, p)
            )));
        }
        let mut zero_blocks = 0;
        for (b, block) in blocks.iter().enumerate() {
            let mirror = label[circle_pos(n, -block[0])];
            let mirror_len = blocks[mirror].len();
            if mirror_len != block.len()
                || block.iter().any(|&x| label[circle_pos(n, -x)] != mirror)
            {
                return Err(Error::invalid("partition is not closed under negation"));
            }
            if mirror == b {
                zero_blocks += 1;
            }
        }
        if zero_blocks > 1 {
            return Err(Error::invalid("more than one block is its own negative"));
        }
        let lens: Vec<usize> = blocks.iter().map(Vec::len).collect();
        if !labels_noncrossing(&label, &lens) {
            return Err(Error::invalid("blocks cross"));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, blocks: Vec<Vec<i32>>) -> Self {
        let mut blocks: Vec<Vec<i32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable_by_key(|&x| circle_pos(n, x));
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| circle_pos(n, b[0]));
        BPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// The block equal to its own negative, if any.
    pub fn zero_block(&self) -> Option<&[i32]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&-b[0]))
            .map(Vec::as_slice)
    }

    /// Number of mirror pairs of nonzero blocks.
    pub fn nonzero_pairs(&self) -> usize {
        (self.blocks.len() - usize::from(self.zero_block().is_some())) / 2
    }

    pub fn rank(&self) -> usize {
        self.n - self.nonzero_pairs()
    }

    fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; 2 * self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                label[circle_pos(self.n, x)] = b;
            }
        }
        label
    }

    /// Reverse refinement: each block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &BPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "comparing partitions of ±{} and ±{}",
                self.n, other.n
            )));
        }
        let theirs = other.labels();
        let n = self.n;
        Ok(self.blocks.iter().all(|b| {
            b.iter()
                .all(|&x| theirs[circle_pos(n, x)] == theirs[circle_pos(n, b[0])])
        }))
    }
}

impl fmt::Display for BPartition {
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

impl fmt::Debug for BPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCB({self})")
    }
}

impl FromStr for BPartition {
    type Err = Error;

    /// Parses signed blocks in any order; `n` is half the element count.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_braced_blocks("type-B partition", s)?;
        let blocks = raw
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|x| {
                        i32::try_from(x)
                            .map_err(|e| Error::parse("type-B partition", s, e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let total: usize = blocks.iter().map(Vec::len).sum();
        if !total.is_multiple_of(2) {
            return Err(Error::parse(
                "type-B partition",
                s,
                "odd number of elements",
            ));
        }
        BPartition::new(total / 2, blocks)
            .map_err(|e| Error::parse("type-B partition", s, e.to_string()))
    }
}

/// Subsets `L`, `R` of `1..=n` of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LrPair {
    n: usize,
    l: BTreeSet<usize>,
    r: BTreeSet<usize>,
}

impl LrPair {
    pub fn new(
        n: usize,
        l: impl IntoIterator<Item = usize>,
        r: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let l: BTreeSet<usize> = l.into_iter().collect();
        let r: BTreeSet<usize> = r.into_iter().collect();
        if let Some(&x) = l.iter().chain(&r).find(|&&x| x == 0 || x > n) {
            return Err(Error::invalid(format!("{x} outside 1..={n}")));
        }
        if l.len() != r.len() {
            return Err(Error::invalid(format!(
                "|L| = {} differs from |R| = {}",
                l.len(),
                r.len()
            )));
        }
        Ok(LrPair { n, l, r })
    }

    fn from_masks(n: usize, l: u32, r: u32) -> Self {
        let set = |m: u32| (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect();
        LrPair {
            n,
            l: set(l),
            r: set(r),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> &BTreeSet<usize> {
        &self.l
    }

    pub fn r(&self) -> &BTreeSet<usize> {
        &self.r
    }

    /// `(L - {i}, R - {i})`.
    pub fn without(&self, i: usize) -> LrPair {
        let mut out = self.clone();
        out.l.remove(&i);
        out.r.remove(&i);
        out
    }
}

#[derive(Clone, Copy)]
enum Token {
    Open,
    Close,
    Elem(i32),
}

/// Parenthesizes the circle `1, .., n, -1, .., -n`: `(` before `i` and `-i`
/// for `i` in `L`, `)` after `j` and `-j` for `j` in `R`, matched cyclically.
/// The elements directly inside a matched pair form a block; elements
/// inside no pair form the zero block.
pub fn eta(pair: &LrPair) -> BPartition {
    let n = pair.n;
    let mut tokens = Vec::with_capacity(4 * n);
    for pos in 0..2 * n {
        let x = circle_elem(n, pos);
        let i = x.unsigned_abs() as usize;
        if pair.l.contains(&i) {
            tokens.push(Token::Open);
        }
        tokens.push(Token::Elem(x));
        if pair.r.contains(&i) {
            tokens.push(Token::Close);
        }
    }
    // start just after the lowest point of the depth profile so every
    // parenthesis matches without wrapping
    let mut depth = 0i64;
    let mut lowest = (0i64, 0usize);
    for (k, t) in tokens.iter().enumerate() {
        match t {
            Token::Open => depth += 1,
            Token::Close => depth -= 1,
            Token::Elem(_) => {}
        }
        if depth < lowest.0 {
            lowest = (depth, k + 1);
        }
    }
    let start = lowest.1;
    let mut blocks: Vec<Vec<i32>> = vec![Vec::new()];
    let mut open: Vec<usize> = Vec::new();
    for k in 0..tokens.len() {
        match tokens[(start + k) % tokens.len()] {
            Token::Open => {
                open.push(blocks.len());
                blocks.push(Vec::new());
            }
            Token::Close => {
                open.pop();
            }
            Token::Elem(x) => blocks[open.last().copied().unwrap_or(0)].push(x),
        }
    }
    blocks.retain(|b| !b.is_empty());
    BPartition::canonical(n, blocks)
}

/// All `(L, R)` pairs of `1..=n` with `|L| = |R|`, by size then masks.
pub fn lr_pairs(n: usize) -> Result<Vec<LrPair>> {
    if n > MAX_NCB_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_NCB_ORDER,
        });
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for l in 0u32..1 << n {
            if l.count_ones() as usize != k {
                continue;
            }
            for r in 0u32..1 << n {
                if r.count_ones() as usize == k {
                    out.push(LrPair::from_masks(n, l, r));
                }
            }
        }
    }
    Ok(out)
}

/// `NC_B(n)` as the images of all `(L, R)` pairs.
pub fn enumerate_ncb(n: usize) -> Result<Vec<BPartition>> {
    Ok(lr_pairs(n)?.iter().map(eta).collect())
}

/// `eta(L ∪ A, R ∪ A)` over subsets `A` of the elements outside `L ∪ R`,
/// for a disjoint pair `(L, R)`.
#[derive(Clone, Debug)]
pub struct BFiber {
    base: LrPair,
    free: Vec<usize>,
    members: Vec<BPartition>,
}

impl BFiber {
    pub fn base(&self) -> &LrPair {
        &self.base
    }

    /// Elements outside `L ∪ R`; bit `k` of a member index adds `free[k]`.
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn members(&self) -> &[BPartition] {
        &self.members
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }
}

pub fn sbd_b(n: usize) -> Result<Vec<BFiber>> {
    if n > MAX_SBD_B_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_SBD_B_ORDER,
        });
    }
    let mut out = Vec::new();
    for base in lr_pairs(n)? {
        if !base.l.is_disjoint(&base.r) {
            continue;
        }
        let free: Vec<usize> = (1..=n)
            .filter(|i| !base.l.contains(i) && !base.r.contains(i))
            .collect();
        let members = (0..1usize << free.len())
            .map(|mask| {
                let mut pair = base.clone();
                for (k, &i) in free.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        pair.l.insert(i);
                        pair.r.insert(i);
                    }
                }
                eta(&pair)
            })
            .collect();
        out.push(BFiber {
            base,
            free,
            members,
        });
    }
    Ok(out)
}

/// `sum t^rank` over `NC_B(n)`, by enumeration.
pub fn rank_gf_b(n: usize) -> Result<UniPoly> {
    Ok(BiPoly::from_exponents(enumerate_ncb(n)?.iter().map(|p| (0, p.rank()))).at_q_one())
}

/// `sum_i binom(n, i) binom(n - i, i) t^i (1 + t)^(n - 2i)`.
pub fn rank_gf_b_formula(n: usize) -> UniPoly {
    let one_plus_t = UniPoly::from_i64s(&[1, 1]);
    let mut out = UniPoly::zero();
    for i in 0..=n / 2 {
        let c = binomial(n, i) * binomial(n - i, i);
        out = &out + &one_plus_t.pow(n - 2 * i).shift(i).scale(&c);
    }
    out
}

/// `binom(2n, n) = sum_i binom(n, i) binom(n - i, i) 2^(n - 2i)`.
pub fn catalan_b_identity(n: usize) -> bool {
    let rhs: num_bigint::BigInt = (0..=n / 2)
        .map(|i| binomial(n, i) * binomial(n - i, i) * (num_bigint::BigInt::from(1) << (n - 2 * i)))
        .sum();
    rhs == binomial(2 * n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn b(s: &str) -> BPartition {
        s.parse().unwrap()
    }

    fn pair(n: usize, l: &[usize], r: &[usize]) -> LrPair {
        LrPair::new(n, l.iter().copied(), r.iter().copied()).unwrap()
    }

    #[test]
    fn eta_examples() {
        let first = eta(&pair(5, &[2, 3, 4], &[1, 4, 5]));
        assert_eq!(first, b("{1,-2}{-1,2}{3,5}{-3,-5}{4}{-4}"));
        assert_eq!(first.rank(), 2);
        let second = eta(&pair(5, &[3, 4], &[1, 5]));
        assert_eq!(second, b("{1,-3}{-1,3}{2,-2}{4,5}{-4,-5}"));
        assert_eq!(second.rank(), 3);
        assert_eq!(second.zero_block(), Some(&[2, -2][..]));
        assert!(!first.leq(&second).unwrap());
        let top = eta(&pair(4, &[], &[]));
        assert_eq!(top.blocks().len(), 1);
        assert_eq!(top.rank(), 4);
        assert!(LrPair::new(3, [1], [1, 2]).is_err());
    }

    #[test]
    fn canonical_text_form() {
        let p = b("{4}{-1,2}{-3,-5}{1,-2}{-4}{3,5}");
        assert_eq!(p.to_string(), "{1,-2}{2,-1}{3,5}{4}{-3,-5}{-4}");
        assert_eq!(p.to_string().parse::<BPartition>().unwrap(), p);
        assert!("{1,2}{-1}{-2}".parse::<BPartition>().is_err());
        assert!("{1,-1}{2,-2}".parse::<BPartition>().is_err());
        assert!("{1,-2}{-1,2}".parse::<BPartition>().is_ok());
        assert!("{1,3}{-1,-3}{2,4}{-2,-4}".parse::<BPartition>().is_err());
    }

    /// Set partitions of the `2n` circle positions, kept when they are
    /// valid type-B partitions.
    fn brute_force_ncb(n: usize) -> HashSet<BPartition> {
        fn go(
            i: usize,
            size: usize,
            rgs: &mut Vec<usize>,
            max: usize,
            n: usize,
            out: &mut HashSet<BPartition>,
        ) {
            if i == size {
                let k = max;
                let mut blocks = vec![Vec::new(); k];
                for (p, &bl) in rgs.iter().enumerate() {
                    blocks[bl].push(circle_elem(n, p));
                }
                if let Ok(p) = BPartition::new(n, blocks) {
                    out.insert(p);
                }
                return;
            }
            for bl in 0..=max {
                rgs.push(bl);
                go(
                    i + 1,
                    size,
                    rgs,
                    if bl == max { max + 1 } else { max },
                    n,
                    out,
                );
                rgs.pop();
            }
        }
        let mut out = HashSet::new();
        go(0, 2 * n, &mut Vec::new(), 0, n, &mut out);
        out
    }

    #[test]
    fn eta_is_a_bijection() {
        for n in 1..=4 {
            let images = enumerate_ncb(n).unwrap();
            let distinct: HashSet<_> = images.iter().cloned().collect();
            assert_eq!(distinct.len(), images.len());
            assert_eq!(num_bigint::BigInt::from(images.len()), binomial(2 * n, n));
            assert_eq!(distinct, brute_force_ncb(n), "n={n}");
        }
        for pair in lr_pairs(5).unwrap() {
            let p = eta(&pair);
            assert_eq!(p.rank(), 5 - pair.l().len());
            assert_eq!(BPartition::new(5, p.blocks().to_vec()).unwrap(), p);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ncb(1).unwrap().len(), 2);
        assert_eq!(enumerate_ncb(3).unwrap().len(), 20);
        assert_eq!(enumerate_ncb(4).unwrap().len(), 70);
        assert!(enumerate_ncb(8).is_err());
    }

    #[test]
    fn order_matches_hasse_edge_count() {
        // rank 0 -> 1: 9 edges, rank 1 -> 2: 27, rank 2 -> 3: 9
        let all = enumerate_ncb(3).unwrap();
        let mut edges = 0;
        for a in &all {
            for c in &all {
                if c.rank() == a.rank() + 1 && a.leq(c).unwrap() {
                    edges += 1;
                }
            }
        }
        assert_eq!(edges, 45);
        let bottom = all.iter().find(|p| p.rank() == 0).unwrap();
        assert!(all.iter().all(|p| bottom.leq(p).unwrap()));
    }

    #[test]
    fn removing_a_shared_element_goes_up() {
        for n in 1..=5 {
            for pair in lr_pairs(n).unwrap() {
                for &i in pair.l().intersection(pair.r()) {
                    assert!(eta(&pair).leq(&eta(&pair.without(i))).unwrap());
                }
            }
        }
    }

    #[test]
    fn fibers_are_symmetric_boolean_intervals() {
        for n in 1..=5 {
            let fibers = sbd_b(n).unwrap();
            let mut seen = HashSet::new();
            for f in &fibers {
                let k = f.base().l().len();
                assert_eq!(f.dimension(), n - 2 * k);
                for (i, a) in f.members().iter().enumerate() {
                    assert!(seen.insert(a.clone()));
                    assert_eq!(a.rank(), n - k - i.count_ones() as usize);
                    for (j, c) in f.members().iter().enumerate() {
                        // more shared elements means lower in the order
                        assert_eq!(a.leq(c).unwrap(), i & j == j, "n={n}");
                    }
                }
                let min_rank = f.members().iter().map(BPartition::rank).min().unwrap();
                let max_rank = f.members().iter().map(BPartition::rank).max().unwrap();
                assert_eq!(min_rank, k);
                assert_eq!(min_rank + max_rank, n);
            }
            assert_eq!(seen.len(), enumerate_ncb(n).unwrap().len());
        }
        assert_eq!(sbd_b(1).unwrap().len(), 1);
        let mut sizes: Vec<usize> = sbd_b(3)
            .unwrap()
            .iter()
            .map(|f| f.members().len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 2, 2, 2, 8]);
    }

    #[test]
    fn rank_generating_function() {
        assert_eq!(rank_gf_b(1).unwrap(), UniPoly::from_i64s(&[1, 1]));
        assert_eq!(rank_gf_b(3).unwrap(), UniPoly::from_i64s(&[1, 9, 9, 1]));
        assert_eq!(
            rank_gf_b(4).unwrap(),
            UniPoly::from_i64s(&[1, 16, 36, 16, 1])
        );
        for n in 1..=6 {
            let g = rank_gf_b(n).unwrap();
            assert_eq!(g, rank_gf_b_formula(n));
            for j in 0..=n {
                assert_eq!(g.coeff(j), binomial(n, j) * binomial(n, j));
            }
        }
        for n in 0..=10 {
            assert!(catalan_b_identity(n));
        }
    }
}
