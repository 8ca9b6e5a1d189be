//! Dyck and Motzkin paths.
//!
//! A [`DyckPath`] of order `n` is stored bit-packed: step `i` is an up step
//! iff bit `i` is set. Orders up to [`MAX_PATH_ORDER`] can be represented;
//! exhaustive enumeration is capped at [`MAX_ENUM_ORDER`].
//!
//! Heights are indexed by abscissa: `heights()[x]` is the height of the
//! path at `x`, for `x = 0..=2n`. The odd vertices of a path are the points
//! at `x = 2i - 1`, `i = 1..=n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order a [`DyckPath`] can hold.
pub const MAX_PATH_ORDER: usize = 32;

/// Largest order accepted by [`enumerate_dyck`] and [`dyck_paths`].
pub const MAX_ENUM_ORDER: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckPath {
    bits: u64,
    order: u8,
}

impl DyckPath {
    /// The empty path, the unique element of order 0.
    pub const EMPTY: DyckPath = DyckPath { bits: 0, order: 0 };

    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::invalid(format!("odd path length {}", steps.len())));
        }
        let order = steps.len() / 2;
        if order > MAX_PATH_ORDER {
            return Err(Error::Capacity {
                n: order,
                cap: MAX_PATH_ORDER,
            });
        }
        let mut bits = 0u64;
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => {
                    bits |= 1 << i;
                    height += 1;
                }
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(Error::invalid(format!(
                    "path dips below the axis after step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::invalid(format!("path ends at height {height}")));
        }
        Ok(DyckPath {
            bits,
            order: order as u8,
        })
    }

    /// Builds a path from raw bits without validation.
    pub(crate) fn from_bits_unchecked(bits: u64, order: usize) -> Self {
        debug_assert!(order <= MAX_PATH_ORDER);
        DyckPath {
            bits,
            order: order as u8,
        }
    }

    /// The sawtooth `(UD)^n`.
    pub fn sawtooth(n: usize) -> Result<Self> {
        Self::from_steps(&[Step::Up, Step::Down].repeat(n))
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn len(&self) -> usize {
        2 * self.order as usize
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    pub fn step(&self, i: usize) -> Step {
        assert!(i < self.len(), "step index {i} out of range");
        if self.bits >> i & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    pub(crate) fn is_up(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Heights at `x = 0..=2n`.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = Vec::with_capacity(self.len() + 1);
        let mut y = 0u32;
        h.push(0);
        for i in 0..self.len() {
            if self.is_up(i) {
                y += 1;
            } else {
                y -= 1;
            }
            h.push(y);
        }
        h
    }

    /// Number of unused lattice points on or above the axis and strictly
    /// below the path (equivalently, diamonds fitting under it).
    ///
    /// At abscissa `x` the admissible points are `(x, j)` with `j < h(x)` and
    /// `j ≡ x (mod 2)`; since `h(x) ≡ x`, there are `⌊h(x)/2⌋` of them.
    pub fn area(&self) -> usize {
        let mut y = 0usize;
        let mut total = 0usize;
        for i in 0..self.len() {
            if self.is_up(i) {
                y += 1;
            } else {
                y -= 1;
            }
            total += y / 2;
        }
        total
    }

    /// `area + n`: diamonds allowed to hang halfway below the axis.
    pub fn area_prime(&self) -> usize {
        self.area() + self.order()
    }

    /// Adds an up step at the front and a down step at the end.
    pub fn raise(&self) -> Result<DyckPath> {
        let n = self.order() + 1;
        if n > MAX_PATH_ORDER {
            return Err(Error::Capacity {
                n,
                cap: MAX_PATH_ORDER,
            });
        }
        Ok(DyckPath {
            bits: (self.bits << 1) | 1,
            order: n as u8,
        })
    }

    /// Concatenation of two Dyck paths.
    pub fn concat(&self, other: &DyckPath) -> Result<DyckPath> {
        let n = self.order() + other.order();
        if n > MAX_PATH_ORDER {
            return Err(Error::Capacity {
                n,
                cap: MAX_PATH_ORDER,
            });
        }
        Ok(DyckPath {
            bits: self.bits | (other.bits << self.len()),
            order: n as u8,
        })
    }

    /// Splits at the first return to the axis.
    pub fn first_return_split(&self) -> Result<FirstReturnSplit> {
        if self.order == 0 {
            return Err(Error::invalid("the empty path has no first return"));
        }
        let mut y = 0i32;
        let mut ret = 0;
        for i in 0..self.len() {
            y += if self.is_up(i) { 1 } else { -1 };
            if y == 0 {
                ret = i + 1;
                break;
            }
        }
        let k = ret / 2 - 1;
        let inner_mask = if k == 0 { 0 } else { (1u64 << (2 * k)) - 1 };
        let left = DyckPath {
            bits: (self.bits >> 1) & inner_mask,
            order: k as u8,
        };
        let right = DyckPath {
            bits: self.bits >> ret,
            order: (self.order() - 1 - k) as u8,
        };
        Ok(FirstReturnSplit { k, left, right })
    }
}

impl Ord for DyckPath {
    /// Orders by length, then lexicographically with `U < D`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| other.bits.reverse_bits().cmp(&self.bits.reverse_bits()))
    }
}

impl PartialOrd for DyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::parse(
                    "Dyck path",
                    s,
                    format!("unexpected character {other:?}"),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_steps(&steps).map_err(|e| Error::parse("Dyck path", s, e.to_string()))
    }
}

/// `p = left⁺ · right`, where the first return of `p` happens after
/// `2(k + 1)` steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FirstReturnSplit {
    pub k: usize,
    pub left: DyckPath,
    pub right: DyckPath,
}

impl FirstReturnSplit {
    pub fn recompose(&self) -> Result<DyckPath> {
        self.left.raise()?.concat(&self.right)
    }
}

/// Lexicographic (`U < D`) enumeration of all Dyck paths of one order.
#[derive(Clone, Debug)]
pub struct DyckPaths {
    order: usize,
    next: Option<DyckPath>,
}

impl DyckPaths {
    fn new(order: usize) -> Self {
        // U^n D^n is the lexicographically smallest word.
        let bits = if order == 0 { 0 } else { (1u64 << order) - 1 };
        DyckPaths {
            order,
            next: Some(DyckPath::from_bits_unchecked(bits, order)),
        }
    }

    fn successor(p: &DyckPath) -> Option<DyckPath> {
        let n = p.order();
        let len = 2 * n;
        // height and up-count before each step
        let mut height = vec![0usize; len];
        let mut ups = vec![0usize; len];
        let (mut y, mut u) = (0usize, 0usize);
        for i in 0..len {
            height[i] = y;
            ups[i] = u;
            if p.is_up(i) {
                y += 1;
                u += 1;
            } else {
                y -= 1;
            }
        }
        for i in (0..len).rev() {
            if !p.is_up(i) || height[i] == 0 {
                continue;
            }
            let downs_before = i - ups[i];
            if downs_before + 1 > n {
                continue;
            }
            let remaining_ups = n - ups[i];
            let mut bits = p.bits & ((1u64 << i) - 1);
            for j in (i + 1)..(i + 1 + remaining_ups) {
                bits |= 1 << j;
            }
            return Some(DyckPath::from_bits_unchecked(bits, n));
        }
        None
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let cur = self.next?;
        self.next = Self::successor(&cur);
        debug_assert!(self.next.is_none_or(|p| p.order() == self.order));
        Some(cur)
    }
}

/// Iterator over `Dy(n)`; `n = 0` yields the empty path once.
pub fn enumerate_dyck(n: usize) -> Result<DyckPaths> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    Ok(DyckPaths::new(n))
}

/// `Dy(n)` collected in lexicographic order.
pub fn dyck_paths(n: usize) -> Result<Vec<DyckPath>> {
    Ok(enumerate_dyck(n)?.collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    Up,
    Level,
    Down,
}

impl MotzkinStep {
    pub fn as_char(self) -> char {
        match self {
            MotzkinStep::Up => 'U',
            MotzkinStep::Level => 'L',
            MotzkinStep::Down => 'D',
        }
    }
}

/// A Motzkin path of order `n`: `n - 1` steps that never go below the
/// starting level and end on it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    steps: Vec<MotzkinStep>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self> {
        let mut y = 0i64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                MotzkinStep::Up => y += 1,
                MotzkinStep::Down => y -= 1,
                MotzkinStep::Level => {}
            }
            if y < 0 {
                return Err(Error::invalid(format!(
                    "Motzkin path dips below its base after step {}",
                    i + 1
                )));
            }
        }
        if y != 0 {
            return Err(Error::invalid(format!("Motzkin path ends at level {y}")));
        }
        Ok(MotzkinPath { steps })
    }

    /// The order `n`; the path has `n - 1` steps.
    pub fn order(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == MotzkinStep::Up).count()
    }

    /// 1-based positions of the level steps.
    pub fn level_positions(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == MotzkinStep::Level)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self})")
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(MotzkinStep::Up),
                'L' | 'l' | 'H' | 'h' => Ok(MotzkinStep::Level),
                'D' | 'd' => Ok(MotzkinStep::Down),
                other => Err(Error::parse(
                    "Motzkin path",
                    s,
                    format!("unexpected character {other:?}"),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps).map_err(|e| Error::parse("Motzkin path", s, e.to_string()))
    }
}

/// All Motzkin paths of order `n`, lexicographic with `Up < Level < Down`.
pub fn enumerate_motzkin(n: usize) -> Result<Vec<MotzkinPath>> {
    if n == 0 {
        return Err(Error::invalid("Motzkin paths have order at least 1"));
    }
    if n > MAX_PATH_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_PATH_ORDER,
        });
    }
    fn go(len: usize, level: usize, cur: &mut Vec<MotzkinStep>, out: &mut Vec<MotzkinPath>) {
        let left = len - cur.len();
        if left == 0 {
            if level == 0 {
                out.push(MotzkinPath { steps: cur.clone() });
            }
            return;
        }
        if level < left - 1 {
            cur.push(MotzkinStep::Up);
            go(len, level + 1, cur, out);
            cur.pop();
        }
        if level < left {
            cur.push(MotzkinStep::Level);
            go(len, level, cur, out);
            cur.pop();
        }
        if level > 0 {
            cur.push(MotzkinStep::Down);
            go(len, level - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n - 1, 0, &mut Vec::with_capacity(n - 1), &mut out);
    Ok(out)
}
