//! Rational Dyck paths in a coprime `m × n` rectangle.
//!
//! A path is a word of `n` North and `m` East steps. Every vertex carries a
//! rank: 0 at the origin, `+m` per North step and `-n` per East step. A word
//! is a Dyck path exactly when every prefix ends at a vertex of nonnegative
//! rank.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the two Fuss families a frame belongs to: `m = kn + 1` or `m = kn - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fuss {
    pub k: u64,
    pub sign: Sign,
}

/// A coprime pair `(m, n)`: `m` East steps, `n` North steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    m: u64,
    n: u64,
    fuss: Option<Fuss>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Frame {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyFrame { m, n });
        }
        if gcd(m, n) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        let mut frame = Frame { m, n, fuss: None };
        frame.fuss = frame.fuss_classes().into_iter().next();
        Ok(frame)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of steps of every path in the frame.
    pub fn len(&self) -> usize {
        (self.m + self.n) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical Fuss classification. `Plus` wins when both apply (n = 1, 2).
    pub fn fuss(&self) -> Option<Fuss> {
        self.fuss
    }

    /// Every Fuss classification that applies, `Plus` first.
    pub fn fuss_classes(&self) -> Vec<Fuss> {
        let (m, n) = (self.m, self.n);
        let mut out = Vec::with_capacity(2);
        if m > n && (m - 1) % n == 0 {
            out.push(Fuss {
                k: (m - 1) / n,
                sign: Sign::Plus,
            });
        }
        if (m + 1) % n == 0 && (m + 1) / n >= 1 {
            out.push(Fuss {
                k: (m + 1) / n,
                sign: Sign::Minus,
            });
        }
        out
    }

    /// The classification with the given sign, if the frame admits it.
    pub fn fuss_with(&self, sign: Sign) -> Option<Fuss> {
        self.fuss_classes().into_iter().find(|f| f.sign == sign)
    }

    /// Upper bound `(m-1)(n-1)/2` for both area and dinv.
    pub fn max_area(&self) -> u64 {
        (self.m - 1) * (self.n - 1) / 2
    }

    pub fn north_rank(&self) -> i64 {
        self.m as i64
    }

    pub fn east_rank(&self) -> i64 {
        -(self.n as i64)
    }

    pub(crate) fn delta(&self, step: Step) -> i64 {
        match step {
            Step::North => self.m as i64,
            Step::East => -(self.n as i64),
        }
    }

    /// Rank of the lattice point `(x, y)`.
    pub fn rank_at(&self, x: u64, y: u64) -> i64 {
        (y * self.m) as i64 - (x * self.n) as i64
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A unit step. `North < East` gives the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn is_north(self) -> bool {
        self == Step::North
    }
}

/// Parse a word over a two-letter alphabet; `north` maps to [`Step::North`].
pub(crate) fn parse_letters(word: &str, north: char, east: char) -> Result<Vec<Step>> {
    word.chars()
        .enumerate()
        .map(|(index, c)| match c.to_ascii_uppercase() {
            c if c == north => Ok(Step::North),
            c if c == east => Ok(Step::East),
            _ => Err(Error::InvalidSymbol { symbol: c, index }),
        })
        .collect()
}

pub(crate) fn render_letters(steps: &[Step], north: char, east: char) -> String {
    steps
        .iter()
        .map(|s| if s.is_north() { north } else { east })
        .collect()
}

/// Validate a step word against a frame: length, letter counts, and the
/// nonnegative-prefix-rank condition.
pub(crate) fn check_word(frame: &Frame, steps: &[Step]) -> Result<()> {
    if steps.len() != frame.len() {
        return Err(Error::WrongLength {
            expected: frame.len(),
            found: steps.len(),
        });
    }
    let north = steps.iter().filter(|s| s.is_north()).count();
    if north != frame.n() as usize {
        return Err(Error::WrongStepCounts {
            expected_north: frame.n() as usize,
            found_north: north,
        });
    }
    let mut rank = 0i64;
    for (i, &s) in steps.iter().enumerate() {
        rank += frame.delta(s);
        if rank < 0 {
            return Err(Error::BelowDiagonal { prefix: i + 1 });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathRecord", into = "PathRecord")]
pub struct DyckPath {
    frame: Frame,
    steps: Vec<Step>,
}

/// JSON form of a path: `{"m":7,"n":5,"steps":"NNENEENEENEE"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathRecord {
    pub m: u64,
    pub n: u64,
    pub steps: String,
}

impl TryFrom<PathRecord> for DyckPath {
    type Error = Error;

    fn try_from(rec: PathRecord) -> Result<Self> {
        DyckPath::parse(Frame::new(rec.m, rec.n)?, &rec.steps)
    }
}

impl From<DyckPath> for PathRecord {
    fn from(path: DyckPath) -> Self {
        PathRecord {
            m: path.frame.m,
            n: path.frame.n,
            steps: path.to_string(),
        }
    }
}

impl DyckPath {
    pub fn new(frame: Frame, steps: Vec<Step>) -> Result<Self> {
        check_word(&frame, &steps)?;
        Ok(DyckPath { frame, steps })
    }

    /// Parse an N/E word.
    pub fn parse(frame: Frame, word: &str) -> Result<Self> {
        Self::new(frame, parse_letters(word, 'N', 'E')?)
    }

    /// Callers guarantee validity; checked in debug builds.
    pub(crate) fn from_steps_unchecked(frame: Frame, steps: Vec<Step>) -> Self {
        debug_assert!(check_word(&frame, &steps).is_ok());
        DyckPath { frame, steps }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Rank of the start vertex of each step, in path order.
    pub fn ranks(&self) -> Vec<i64> {
        let mut rank = 0i64;
        self.steps
            .iter()
            .map(|&s| {
                let r = rank;
                rank += self.frame.delta(s);
                r
            })
            .collect()
    }

    pub fn rank_sequence(&self) -> RankSequence {
        let mut values = self.ranks();
        values.sort_unstable();
        RankSequence(values)
    }

    /// Full cells strictly between the path and the diagonal.
    pub fn area(&self) -> u64 {
        let (m, n) = (self.frame.m, self.frame.n);
        let mut height = 0u64;
        let mut column = 0u64;
        let mut total = 0u64;
        for &s in &self.steps {
            match s {
                Step::North => height += 1,
                Step::East => {
                    // lowest row whose cell in this column clears the diagonal
                    let floor = ((column + 1) * n).div_ceil(m);
                    total += height.saturating_sub(floor);
                    column += 1;
                }
            }
        }
        total
    }

    /// `(m-1)(n-1)/2 - area`; defined for Fuss frames only.
    pub fn coarea(&self) -> Result<u64> {
        if self.frame.fuss.is_none() {
            return Err(Error::NotFuss {
                m: self.frame.m,
                n: self.frame.n,
            });
        }
        Ok(self.frame.max_area() - self.area())
    }

    /// Cells above the path whose column-foot rank `a` and row-end rank `b`
    /// satisfy `0 < a - b < m + n`.
    pub fn dinv(&self) -> u64 {
        let frame = &self.frame;
        let span = (frame.m + frame.n) as i64;
        // height of the East step in each column, x-position of the North step in each row
        let mut col_height = Vec::with_capacity(frame.m as usize);
        let mut row_start = Vec::with_capacity(frame.n as usize);
        let (mut x, mut y) = (0u64, 0u64);
        for &s in &self.steps {
            match s {
                Step::North => {
                    row_start.push(x);
                    y += 1;
                }
                Step::East => {
                    col_height.push(y);
                    x += 1;
                }
            }
        }
        let mut count = 0u64;
        for (row, &end) in row_start.iter().enumerate() {
            let b = frame.rank_at(end, row as u64);
            for (col, &h) in col_height.iter().enumerate().take(end as usize) {
                let a = frame.rank_at(col as u64, h);
                let d = a - b;
                if 0 < d && d < span {
                    count += 1;
                }
            }
        }
        count
    }

    /// Cut at the highest-rank vertex as `AB` and rotate `BA` by a half turn.
    pub fn rank_complement(&self) -> DyckPath {
        let ranks = self.ranks();
        let top = ranks
            .iter()
            .enumerate()
            .max_by_key(|&(_, r)| *r)
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut steps: Vec<Step> = self.steps[top..]
            .iter()
            .chain(&self.steps[..top])
            .copied()
            .collect();
        steps.reverse();
        DyckPath::from_steps_unchecked(self.frame, steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.steps, 'N', 'E'))
    }
}

/// Start-vertex ranks of a path in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankSequence(Vec<i64>);

impl RankSequence {
    pub fn new(values: Vec<i64>) -> Self {
        RankSequence(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

/// All Dyck paths of a frame in lexicographic order (`N < E`).
pub fn enumerate_paths(frame: Frame) -> PathIter {
    PathIter::with_prefix(frame, &[])
}

/// Paths whose word begins with `prefix`, for partitioned enumeration.
pub fn enumerate_paths_with_prefix(frame: Frame, prefix: &[Step]) -> PathIter {
    PathIter::with_prefix(frame, prefix)
}

/// Lexicographic iterator over a frame's Dyck paths.
pub struct PathIter {
    frame: Frame,
    fixed: usize,
    steps: Vec<Step>,
    // ranks[i] = rank before step i
    ranks: Vec<i64>,
    pending: bool,
}

impl PathIter {
    fn with_prefix(frame: Frame, prefix: &[Step]) -> PathIter {
        let len = frame.len();
        let mut it = PathIter {
            frame,
            fixed: prefix.len(),
            steps: Vec::with_capacity(len),
            ranks: vec![0; len + 1],
            pending: false,
        };
        let north = prefix.iter().filter(|s| s.is_north()).count();
        if prefix.len() > len || north > frame.n as usize || prefix.len() - north > frame.m as usize
        {
            return it;
        }
        it.steps.extend_from_slice(prefix);
        for (i, &s) in prefix.iter().enumerate() {
            it.ranks[i + 1] = it.ranks[i] + frame.delta(s);
            if it.ranks[i + 1] < 0 {
                return it;
            }
        }
        it.complete_from(prefix.len());
        it.pending = true;
        it
    }

    /// Fill positions `from..` with the remaining North steps, then East steps.
    fn complete_from(&mut self, from: usize) {
        self.steps.truncate(from);
        let north_used = self.steps.iter().filter(|s| s.is_north()).count();
        let north_left = self.frame.n as usize - north_used;
        let total = self.frame.len();
        for i in from..total {
            let s = if i - from < north_left {
                Step::North
            } else {
                Step::East
            };
            self.steps.push(s);
            self.ranks[i + 1] = self.ranks[i] + self.frame.delta(s);
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.frame.n as i64;
        let mut east_after = 0usize;
        for i in (self.fixed..self.steps.len()).rev() {
            match self.steps[i] {
                Step::East => east_after += 1,
                Step::North => {
                    if east_after > 0 && self.ranks[i] - n >= 0 {
                        self.steps.truncate(i);
                        self.steps.push(Step::East);
                        self.ranks[i + 1] = self.ranks[i] - n;
                        self.complete_from(i + 1);
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl Iterator for PathIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        if !self.pending {
            return None;
        }
        let out = DyckPath::from_steps_unchecked(self.frame, self.steps.clone());
        self.pending = self.advance();
        Some(out)
    }
}

/// A uniformly random path of the frame, by the cycle lemma: shuffle the
/// multiset of steps and rotate to start at the lowest-rank vertex.
pub fn random_path<R: Rng + ?Sized>(frame: Frame, rng: &mut R) -> DyckPath {
    let mut steps = vec![Step::North; frame.n as usize];
    steps.extend(std::iter::repeat_n(Step::East, frame.m as usize));
    steps.shuffle(rng);
    let mut rank = 0i64;
    let mut lowest = (0i64, 0usize);
    for (i, &s) in steps.iter().enumerate() {
        if rank < lowest.0 {
            lowest = (rank, i);
        }
        rank += frame.delta(s);
    }
    steps.rotate_left(lowest.1);
    DyckPath::from_steps_unchecked(frame, steps)
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(Step::North),
            "E" | "e" => Ok(Step::East),
            _ => Err(Error::InvalidSymbol {
                symbol: s.chars().next().unwrap_or(' '),
                index: 0,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(m: u64, n: u64) -> Frame {
        Frame::new(m, n).unwrap()
    }

    fn path(m: u64, n: u64, w: &str) -> DyckPath {
        DyckPath::parse(frame(m, n), w).unwrap()
    }

    #[test]
    fn frame_classification() {
        assert_eq!(frame(7, 5).fuss(), None);
        assert_eq!(
            frame(3, 1).fuss(),
            Some(Fuss {
                k: 2,
                sign: Sign::Plus
            })
        );
        assert_eq!(
            frame(11, 4).fuss(),
            Some(Fuss {
                k: 3,
                sign: Sign::Minus
            })
        );
        assert_eq!(frame(3, 2).fuss_classes().len(), 2);
        assert_eq!(Frame::new(6, 4), Err(Error::NotCoprime { m: 6, n: 4 }));
        assert!(matches!(Frame::new(0, 3), Err(Error::EmptyFrame { .. })));
    }

    #[test]
    fn parse_errors() {
        let f = frame(3, 2);
        assert_eq!(
            DyckPath::parse(f, "ENNEE"),
            Err(Error::BelowDiagonal { prefix: 1 })
        );
        assert!(matches!(
            DyckPath::parse(f, "NNEE"),
            Err(Error::WrongLength { .. })
        ));
        assert!(matches!(
            DyckPath::parse(f, "NNNEE"),
            Err(Error::WrongStepCounts { .. })
        ));
        assert!(matches!(
            DyckPath::parse(f, "NNXEE"),
            Err(Error::InvalidSymbol { index: 2, .. })
        ));
    }

    #[test]
    fn small_ranks_and_stats() {
        let p = path(3, 2, "NNEEE");
        assert_eq!(p.ranks(), vec![0, 3, 6, 4, 2]);
        assert_eq!(p.rank_sequence().values(), &[0, 2, 3, 4, 6]);
        assert_eq!(p.area(), 1);
        let q = path(3, 2, "NENEE");
        assert_eq!(q.area(), 0);
        assert_eq!(q.dinv(), 1);
        assert_eq!(p.dinv(), 0);

        let single = path(3, 1, "NEEE");
        assert_eq!(single.ranks(), vec![0, 3, 2, 1]);
        assert_eq!(single.rank_sequence().values(), &[0, 1, 2, 3]);
        assert_eq!((single.area(), single.dinv()), (0, 0));
        assert_eq!(single.coarea(), Ok(0));
    }

    #[test]
    fn coarea_requires_fuss() {
        let p = path(7, 5, "NNENEENEENEE");
        assert!(matches!(p.coarea(), Err(Error::NotFuss { .. })));
    }

    #[test]
    fn enumeration_small() {
        let words: Vec<String> = enumerate_paths(frame(3, 2))
            .map(|p| p.to_string())
            .collect();
        assert_eq!(words, ["NNEEE", "NENEE"]);
        assert_eq!(enumerate_paths(frame(3, 1)).count(), 1);
        assert_eq!(enumerate_paths(frame(7, 5)).count(), 66);
        assert_eq!(enumerate_paths(frame(7, 3)).count(), 12);
    }

    #[test]
    fn prefix_partition_covers_everything() {
        let f = frame(8, 5);
        let all = enumerate_paths(f).count();
        let a = enumerate_paths_with_prefix(f, &[Step::North, Step::North]).count();
        let b = enumerate_paths_with_prefix(f, &[Step::North, Step::East]).count();
        let c = enumerate_paths_with_prefix(f, &[Step::East]).count();
        assert_eq!(c, 0);
        assert_eq!(a + b, all);
    }

    #[test]
    fn json_form() {
        let p = path(7, 5, "NNENEENEENEE");
        let v = serde_json::to_string(&p).unwrap();
        assert_eq!(v, r#"{"m":7,"n":5,"steps":"NNENEENEENEE"}"#);
        let back: DyckPath = serde_json::from_str(&v).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<DyckPath>(r#"{"m":3,"n":2,"steps":"ENNEE"}"#).is_err());
    }

    #[test]
    fn random_paths_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let f = frame(13, 4);
        for _ in 0..50 {
            let p = random_path(f, &mut rng);
            assert!(check_word(&f, p.steps()).is_ok());
        }
    }
}
