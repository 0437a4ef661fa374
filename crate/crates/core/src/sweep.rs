//! The sweep map and the two rank-order words it produces.
//!
//! Sorting the start-vertex ranks of a path and recording the step type at
//! each gives the SW word, which is itself the step word of the image path.
//! Sorting the end-vertex ranks gives the EN word. Together the two words
//! pin down the preimage (see [`bipartite_invert`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuss;
use crate::path::{
    check_word, enumerate_paths, parse_letters, render_letters, DyckPath, Frame, RankSequence, Step,
};

/// Rank-order word of step starts: `S` for a North step, `W` for an East step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwWord {
    frame: Frame,
    letters: Vec<Step>,
}

/// Rank-order word of step ends: `N` for a North step, `E` for an East step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnWord {
    frame: Frame,
    letters: Vec<Step>,
}

impl SwWord {
    /// Parse an S/W word; it must satisfy the Dyck condition.
    pub fn parse(frame: Frame, word: &str) -> Result<Self> {
        Self::from_steps(frame, parse_letters(word, 'S', 'W')?)
    }

    pub fn from_steps(frame: Frame, letters: Vec<Step>) -> Result<Self> {
        check_word(&frame, &letters)?;
        Ok(SwWord { frame, letters })
    }

    /// The SW word of a path read in its own step order.
    pub fn of_path(path: &DyckPath) -> Self {
        SwWord {
            frame: *path.frame(),
            letters: path.steps().to_vec(),
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// `Step::North` marks an `S`.
    pub fn letters(&self) -> &[Step] {
        &self.letters
    }

    /// The path drawn by reading `S` as North and `W` as East.
    pub fn to_path(&self) -> DyckPath {
        DyckPath::from_steps_unchecked(self.frame, self.letters.clone())
    }

    /// 1-based positions of the `S` letters.
    pub fn s_positions(&self) -> Vec<usize> {
        positions(&self.letters)
    }
}

impl EnWord {
    pub fn parse(frame: Frame, word: &str) -> Result<Self> {
        Self::from_steps(frame, parse_letters(word, 'N', 'E')?)
    }

    pub fn from_steps(frame: Frame, letters: Vec<Step>) -> Result<Self> {
        if letters.len() != frame.len() {
            return Err(Error::WrongLength {
                expected: frame.len(),
                found: letters.len(),
            });
        }
        let north = letters.iter().filter(|s| s.is_north()).count();
        if north != frame.n() as usize {
            return Err(Error::WrongStepCounts {
                expected_north: frame.n() as usize,
                found_north: north,
            });
        }
        Ok(EnWord { frame, letters })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn letters(&self) -> &[Step] {
        &self.letters
    }

    /// 1-based positions of the `N` letters.
    pub fn n_positions(&self) -> Vec<usize> {
        positions(&self.letters)
    }
}

fn positions(letters: &[Step]) -> Vec<usize> {
    letters
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_north())
        .map(|(i, _)| i + 1)
        .collect()
}

impl fmt::Display for SwWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters, 'S', 'W'))
    }
}

impl fmt::Display for EnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters, 'N', 'E'))
    }
}

/// Step types listed in increasing order of the given per-step ranks.
fn by_rank(path: &DyckPath, ranks: &[i64]) -> Vec<Step> {
    let mut order: Vec<usize> = (0..ranks.len()).collect();
    order.sort_unstable_by_key(|&i| ranks[i]);
    order.into_iter().map(|i| path.steps()[i]).collect()
}

pub fn sw_word(path: &DyckPath) -> SwWord {
    SwWord {
        frame: *path.frame(),
        letters: by_rank(path, &path.ranks()),
    }
}

pub fn en_word(path: &DyckPath) -> EnWord {
    let frame = path.frame();
    let ends: Vec<i64> = path
        .ranks()
        .iter()
        .zip(path.steps())
        .map(|(r, &s)| r + frame.delta(s))
        .collect();
    EnWord {
        frame: *frame,
        letters: by_rank(path, &ends),
    }
}

/// The sweep image: steps reread in increasing order of start rank.
pub fn sweep(path: &DyckPath) -> DyckPath {
    sw_word(path).to_path()
}

/// Rebuild the sweep preimage from its SW and EN words.
///
/// The `i`-th `S` and the `i`-th `N` share rank offset `+m`; the `j`-th `W`
/// and the `j`-th `E` share offset `-n`. Starting from position 0 (rank 0),
/// each position hands its rank to the matching letter of the other word,
/// and the letter at that same position continues the walk. The visiting
/// order spells the preimage.
pub fn bipartite_invert(sw: &SwWord, en: &EnWord) -> Result<(DyckPath, RankSequence)> {
    if sw.frame != en.frame {
        return Err(Error::FrameMismatch);
    }
    let frame = sw.frame;
    let len = frame.len();

    let mut n_pos = Vec::with_capacity(frame.n() as usize);
    let mut e_pos = Vec::with_capacity(frame.m() as usize);
    for (p, s) in en.letters.iter().enumerate() {
        match s {
            Step::North => n_pos.push(p),
            Step::East => e_pos.push(p),
        }
    }
    // ordinal of each sw letter among its own kind
    let mut ordinal = Vec::with_capacity(len);
    let (mut s_seen, mut w_seen) = (0usize, 0usize);
    for s in &sw.letters {
        match s {
            Step::North => {
                ordinal.push(s_seen);
                s_seen += 1;
            }
            Step::East => {
                ordinal.push(w_seen);
                w_seen += 1;
            }
        }
    }

    let mut rank_at = vec![i64::MIN; len];
    let mut steps = Vec::with_capacity(len);
    let mut pos = 0usize;
    let mut rank = 0i64;
    rank_at[0] = 0;
    loop {
        let letter = sw.letters[pos];
        steps.push(letter);
        let next = match letter {
            Step::North => n_pos[ordinal[pos]],
            Step::East => e_pos[ordinal[pos]],
        };
        rank += frame.delta(letter);
        if next == 0 {
            if steps.len() != len || rank != 0 {
                return Err(Error::InconsistentPair);
            }
            break;
        }
        if rank_at[next] != i64::MIN || steps.len() == len {
            return Err(Error::InconsistentPair);
        }
        rank_at[next] = rank;
        pos = next;
    }
    // Ranks must increase with position for the words to be the sweep of the result.
    if rank_at.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InconsistentPair);
    }
    let path = DyckPath::new(frame, steps).map_err(|_| Error::InconsistentPair)?;
    Ok((path, RankSequence::new(rank_at)))
}

/// Strategy for locating the sweep preimage when computing bounce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BounceStrategy {
    Fuss,
    Brute,
}

/// Largest frame (in steps) that exhaustive search will attempt.
pub const BRUTE_FORCE_MAX_STEPS: usize = 26;

/// The unique path whose sweep is `path`, by exhaustive search.
pub fn brute_invert_sweep(path: &DyckPath) -> Result<DyckPath> {
    let frame = *path.frame();
    if frame.len() > BRUTE_FORCE_MAX_STEPS {
        return Err(Error::TooLarge {
            m: frame.m(),
            n: frame.n(),
        });
    }
    let target = path.steps();
    enumerate_paths(frame)
        .find(|candidate| sw_word(candidate).letters() == target)
        .ok_or(Error::SearchExhausted)
}

/// `area` of the sweep preimage.
pub fn bounce(path: &DyckPath, strategy: BounceStrategy) -> Result<u64> {
    let pre = match strategy {
        BounceStrategy::Fuss => fuss::invert_fuss(path)?,
        BounceStrategy::Brute => brute_invert_sweep(path)?,
    };
    Ok(pre.area())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(m: u64, n: u64) -> Frame {
        Frame::new(m, n).unwrap()
    }

    #[test]
    fn small_sweeps() {
        let f = frame(3, 2);
        let a = DyckPath::parse(f, "NNEEE").unwrap();
        let b = DyckPath::parse(f, "NENEE").unwrap();
        assert_eq!(sw_word(&a).to_string(), "SWSWW");
        assert_eq!(sweep(&b).to_string(), "NNEEE");
        assert_eq!(sweep(&a).to_string(), "NENEE");
        let single = DyckPath::parse(frame(3, 1), "NEEE").unwrap();
        assert_eq!(sweep(&single), single);
        assert_eq!(sw_word(&single).to_string(), "SWWW");
        assert_eq!(en_word(&single).to_string(), "EEEN");
    }

    #[test]
    fn bipartite_small() {
        let f = frame(3, 1);
        let sw = SwWord::parse(f, "SWWW").unwrap();
        let en = EnWord::parse(f, "EEEN").unwrap();
        let (p, r) = bipartite_invert(&sw, &en).unwrap();
        assert_eq!(p.to_string(), "NEEE");
        assert_eq!(r.values(), &[0, 1, 2, 3]);
    }

    #[test]
    fn bipartite_rejects_bad_pairs() {
        let f = frame(3, 2);
        // SW of NENEE's image paired with a mismatched EN word
        let sw = sw_word(&DyckPath::parse(f, "NENEE").unwrap());
        let en_other = en_word(&DyckPath::parse(f, "NNEEE").unwrap());
        assert_eq!(
            bipartite_invert(&sw, &en_other).map(|r| r.0),
            Err(Error::InconsistentPair)
        );
        let g = frame(5, 2);
        let sw2 = SwWord::parse(g, "SSWWWWW").unwrap();
        assert_eq!(
            bipartite_invert(&sw, &EnWord::parse(g, "EEEEENN").unwrap()).map(|r| r.0),
            Err(Error::FrameMismatch)
        );
        let _ = sw2;
    }

    #[test]
    fn brute_small() {
        let f = frame(3, 2);
        let img = DyckPath::parse(f, "NNEEE").unwrap();
        assert_eq!(brute_invert_sweep(&img).unwrap().to_string(), "NENEE");
        assert_eq!(bounce(&img, BounceStrategy::Brute), Ok(0));
        let img2 = DyckPath::parse(f, "NENEE").unwrap();
        assert_eq!(bounce(&img2, BounceStrategy::Brute), Ok(1));
        assert_eq!(bounce(&img2, BounceStrategy::Fuss), Ok(1));
    }

    #[test]
    fn sw_word_must_be_dyck() {
        assert_eq!(
            SwWord::parse(frame(3, 2), "WSSWW"),
            Err(Error::BelowDiagonal { prefix: 1 })
        );
    }
}
