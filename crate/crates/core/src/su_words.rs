//! Words over `{b, e, l, r}` encoding Dyck paths, and the decomposition of
//! Dyck paths into Boolean fibers over Motzkin paths.
//!
//! A path of order `n` is read as an initial up step, `n - 1` step pairs and
//! a final down step. Each pair gives one letter: `UU -> b`, `DD -> e`,
//! `DU -> l`, `UD -> r`. On the partition side, letter `i` compares `i`
//! with `i + 1`: `r` when they share a block; otherwise `b` when `i` is not
//! the largest in its block, `e` when `i + 1` is not the smallest in its
//! block, and `l` when both are extreme.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice_paths::{
    enumerate_dyck, DyckPath, MotzkinPath, MotzkinStep, Step, MAX_PATH_ORDER,
};
use crate::noncrossing::NoncrossingPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    B,
    E,
    L,
    R,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::B, Letter::E, Letter::L, Letter::R];

    pub fn as_char(self) -> char {
        match self {
            Letter::B => 'b',
            Letter::E => 'e',
            Letter::L => 'l',
            Letter::R => 'r',
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'b' => Some(Letter::B),
            'e' => Some(Letter::E),
            'l' => Some(Letter::L),
            'r' => Some(Letter::R),
            _ => None,
        }
    }

    fn steps(self) -> [Step; 2] {
        match self {
            Letter::B => [Step::Up, Step::Up],
            Letter::E => [Step::Down, Step::Down],
            Letter::L => [Step::Down, Step::Up],
            Letter::R => [Step::Up, Step::Down],
        }
    }

    fn from_steps(first: Step, second: Step) -> Letter {
        match (first, second) {
            (Step::Up, Step::Up) => Letter::B,
            (Step::Down, Step::Down) => Letter::E,
            (Step::Down, Step::Up) => Letter::L,
            (Step::Up, Step::Down) => Letter::R,
        }
    }
}

/// A word of length `n - 1` that decodes to a Dyck path of order `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuWord {
    letters: Vec<Letter>,
}

/// Positions (1-based) of each letter in a word.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LetterSets {
    pub b: Vec<usize>,
    pub e: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
}

impl SuWord {
    /// Accepts only words that decode to a Dyck path.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let w = SuWord { letters };
        decode(&w)?;
        Ok(w)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Order of the decoded path.
    pub fn order(&self) -> usize {
        self.letters.len() + 1
    }

    pub fn letter_sets(&self) -> LetterSets {
        let mut sets = LetterSets::default();
        for (i, &c) in self.letters.iter().enumerate() {
            let slot = match c {
                Letter::B => &mut sets.b,
                Letter::E => &mut sets.e,
                Letter::L => &mut sets.l,
                Letter::R => &mut sets.r,
            };
            slot.push(i + 1);
        }
        sets
    }

    /// Number of `b` and `r` letters.
    pub fn rank(&self) -> usize {
        self.letters
            .iter()
            .filter(|c| matches!(c, Letter::B | Letter::R))
            .count()
    }
}

impl fmt::Display for SuWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SuWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuWord({self})")
    }
}

impl FromStr for SuWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| {
                Letter::from_char(c)
                    .ok_or_else(|| Error::parse("word", s, format!("unexpected letter {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SuWord::new(letters).map_err(|e| Error::parse("word", s, e.to_string()))
    }
}

/// The Dyck path spelled by a word.
pub fn decode(w: &SuWord) -> Result<DyckPath> {
    let n = w.letters.len() + 1;
    if n > MAX_PATH_ORDER {
        return Err(Error::Capacity {
            n,
            cap: MAX_PATH_ORDER,
        });
    }
    let mut steps = Vec::with_capacity(2 * n);
    steps.push(Step::Up);
    for c in &w.letters {
        steps.extend_from_slice(&c.steps());
    }
    steps.push(Step::Down);
    DyckPath::from_steps(&steps)
        .map_err(|e| Error::invalid(format!("word {w} is not a path encoding: {e}")))
}

/// Reads the word off the step pairs of a nonempty path.
pub fn word_of_path(p: &DyckPath) -> Result<SuWord> {
    if p.is_empty() {
        return Err(Error::invalid("the empty path has no word"));
    }
    let letters = (1..p.order())
        .map(|i| Letter::from_steps(p.step(2 * i - 1), p.step(2 * i)))
        .collect();
    Ok(SuWord { letters })
}

/// The word of a partition, from the position of each `i` in its block.
pub fn encode(pi: &NoncrossingPartition) -> Result<SuWord> {
    let n = pi.n();
    if n == 0 {
        return Err(Error::invalid("the empty partition has no word"));
    }
    let label = pi.labels();
    let blocks = pi.blocks();
    let letters = (1..n)
        .map(|i| {
            if label[i] == label[i - 1] {
                return Letter::R;
            }
            let is_max = *blocks[label[i - 1]].last().unwrap() == i;
            let next_is_min = blocks[label[i]][0] == i + 1;
            match (is_max, next_is_min) {
                (false, _) => Letter::B,
                (true, false) => Letter::E,
                (true, true) => Letter::L,
            }
        })
        .collect();
    Ok(SuWord { letters })
}

/// Rank of a nonempty path: `#b + #r` in its word.
pub fn path_rank(p: &DyckPath) -> usize {
    (1..p.order())
        .filter(|&i| p.step(2 * i - 1) == Step::Up)
        .count()
}

const BOUNDARY: usize = 4;

fn slot(c: Letter) -> usize {
    match c {
        Letter::B => 0,
        Letter::E => 1,
        Letter::L => 2,
        Letter::R => 3,
    }
}

/// Letter of the raised word between a left neighbour (row) and a right
/// neighbour (column), with slot 4 standing for the word boundary.
pub const RAISE_TABLE: [[Option<Letter>; 5]; 5] = {
    use Letter::*;
    [
        //  b        e        l        r        boundary
        [Some(B), Some(R), Some(R), Some(B), None],    // b
        [Some(L), Some(E), Some(E), Some(L), Some(E)], // e
        [Some(B), Some(R), Some(R), Some(B), Some(R)], // l
        [Some(L), Some(E), Some(E), Some(L), Some(E)], // r
        [Some(B), None, Some(R), Some(B), Some(R)],    // boundary
    ]
};

/// Word of the raised path `U p D`, computed letter by letter from
/// [`RAISE_TABLE`].
pub fn raise_word(w: &SuWord) -> Result<SuWord> {
    let mut slots = Vec::with_capacity(w.letters.len() + 2);
    slots.push(BOUNDARY);
    slots.extend(w.letters.iter().map(|&c| slot(c)));
    slots.push(BOUNDARY);
    let letters = slots
        .windows(2)
        .map(|pair| {
            RAISE_TABLE[pair[0]][pair[1]].ok_or_else(|| {
                Error::Consistency(format!("word {w} has an impossible neighbour pair"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuWord { letters })
}

/// Collapses a word to a Motzkin path: `b` up, `e` down, `l` and `r` level.
pub fn theta_word(w: &SuWord) -> MotzkinPath {
    let steps = w
        .letters
        .iter()
        .map(|c| match c {
            Letter::B => MotzkinStep::Up,
            Letter::E => MotzkinStep::Down,
            Letter::L | Letter::R => MotzkinStep::Level,
        })
        .collect();
    MotzkinPath::new(steps).expect("a decodable word collapses to a Motzkin path")
}

pub fn theta(p: &DyckPath) -> Result<MotzkinPath> {
    Ok(theta_word(&word_of_path(p)?))
}

/// Word of the rank-minimal path over `m`: every level step becomes `l`.
fn base_word(m: &MotzkinPath) -> Vec<Letter> {
    m.steps()
        .iter()
        .map(|s| match s {
            MotzkinStep::Up => Letter::B,
            MotzkinStep::Down => Letter::E,
            MotzkinStep::Level => Letter::L,
        })
        .collect()
}

/// The rank-minimal path in the fiber over `m`.
pub fn rho(m: &MotzkinPath) -> Result<DyckPath> {
    decode(&SuWord {
        letters: base_word(m),
    })
}

/// The paths collapsing to one Motzkin path, indexed by subsets of its
/// level steps: bit `k` of the index turns the `k`-th level step into `r`.
#[derive(Clone, Debug)]
pub struct BooleanFiber {
    base: MotzkinPath,
    members: Vec<DyckPath>,
}

impl BooleanFiber {
    pub fn base(&self) -> &MotzkinPath {
        &self.base
    }

    pub fn members(&self) -> &[DyckPath] {
        &self.members
    }

    /// Number of level steps, the dimension of the Boolean lattice.
    pub fn dimension(&self) -> usize {
        self.members.len().trailing_zeros() as usize
    }

    /// Path for the subset `mask` of level steps.
    pub fn member(&self, mask: usize) -> Option<&DyckPath> {
        self.members.get(mask)
    }
}

/// Dimension above which a fiber would not fit in memory comfortably.
const MAX_FIBER_DIMENSION: usize = 24;

pub fn fiber(m: &MotzkinPath) -> Result<BooleanFiber> {
    let base = base_word(m);
    let levels: Vec<usize> = base
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == Letter::L)
        .map(|(i, _)| i)
        .collect();
    if levels.len() > MAX_FIBER_DIMENSION {
        return Err(Error::Capacity {
            n: levels.len(),
            cap: MAX_FIBER_DIMENSION,
        });
    }
    let members = (0..1usize << levels.len())
        .map(|mask| {
            let mut letters = base.clone();
            for (k, &pos) in levels.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    letters[pos] = Letter::R;
                }
            }
            decode(&SuWord { letters })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BooleanFiber {
        base: m.clone(),
        members,
    })
}

/// The fibers over all Motzkin paths of order `n`; together they partition
/// the Dyck paths of order `n`.
pub fn sbd(n: usize) -> Result<Vec<BooleanFiber>> {
    if n > crate::lattice_paths::MAX_ENUM_ORDER {
        return Err(Error::Capacity {
            n,
            cap: crate::lattice_paths::MAX_ENUM_ORDER,
        });
    }
    crate::lattice_paths::enumerate_motzkin(n)?
        .iter()
        .map(fiber)
        .collect()
}

/// Checks that the fibers of order `n` are disjoint, cover every path, and
/// are Boolean intervals ordered by adding `r` letters.
pub fn check_sbd(n: usize) -> Result<()> {
    let fibers = sbd(n)?;
    let mut seen = std::collections::HashSet::new();
    for f in &fibers {
        for (mask, p) in f.members.iter().enumerate() {
            if theta(p)? != f.base {
                return Err(Error::Consistency(format!(
                    "{p} does not collapse to {}",
                    f.base
                )));
            }
            let min_rank = path_rank(&f.members[0]);
            if path_rank(p) != min_rank + mask.count_ones() as usize {
                return Err(Error::Consistency(format!(
                    "rank of {p} is not graded in its fiber"
                )));
            }
            if !seen.insert(*p) {
                return Err(Error::Consistency(format!("{p} lies in two fibers")));
            }
        }
    }
    let total = enumerate_dyck(n)?.count();
    if seen.len() != total {
        return Err(Error::Consistency(format!(
            "fibers cover {} of {total} paths",
            seen.len()
        )));
    }
    Ok(())
}
