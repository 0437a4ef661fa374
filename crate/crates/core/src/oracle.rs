//! Brute-force references for cross-checking.
//!
//! Nothing here calls the code it checks: paths are enumerated as raw
//! subsets, the sweep is recomputed from lattice coordinates, area is a cell
//! count, and tableaux are filled by a direct scan for the smallest foot.

use std::collections::HashMap;

use crate::path::{DyckPath, Frame, Step};

/// Every N/E word of the frame that stays weakly above the diagonal.
pub fn all_words(frame: &Frame) -> Vec<Vec<Step>> {
    let (m, n) = (frame.m() as usize, frame.n() as usize);
    let len = m + n;
    let mut out = Vec::new();
    let mut word = vec![Step::East; len];
    choose(&mut word, 0, n, &mut |w| {
        if above_diagonal(frame, w) {
            out.push(w.to_vec());
        }
    });
    out
}

fn choose(word: &mut [Step], from: usize, left: usize, emit: &mut dyn FnMut(&[Step])) {
    if left == 0 {
        emit(word);
        return;
    }
    for i in from..=word.len() - left {
        word[i] = Step::North;
        choose(word, i + 1, left - 1, emit);
        word[i] = Step::East;
    }
}

fn vertices(word: &[Step]) -> Vec<(u64, u64)> {
    let (mut x, mut y) = (0u64, 0u64);
    word.iter()
        .map(|s| {
            let v = (x, y);
            match s {
                Step::North => y += 1,
                Step::East => x += 1,
            }
            v
        })
        .collect()
}

/// Every vertex `(x, y)` satisfies `y/x ≥ n/m`.
fn above_diagonal(frame: &Frame, word: &[Step]) -> bool {
    vertices(word)
        .into_iter()
        .all(|(x, y)| y * frame.m() >= x * frame.n())
}

pub fn all_paths(frame: &Frame) -> Vec<DyckPath> {
    all_words(frame)
        .into_iter()
        .map(|w| DyckPath::new(*frame, w).expect("oracle words are Dyck paths"))
        .collect()
}

/// Steps reordered by the height of their start vertex above the diagonal line.
pub fn sweep_word(frame: &Frame, word: &[Step]) -> Vec<Step> {
    let mut keyed: Vec<(i128, Step)> = vertices(word)
        .into_iter()
        .zip(word.iter().copied())
        .map(|((x, y), s)| {
            (
                y as i128 * frame.m() as i128 - x as i128 * frame.n() as i128,
                s,
            )
        })
        .collect();
    keyed.sort_by_key(|&(r, _)| r);
    keyed.into_iter().map(|(_, s)| s).collect()
}

/// Count unit cells lying under the path and entirely above the diagonal.
pub fn area_word(frame: &Frame, word: &[Step]) -> u64 {
    let (m, n) = (frame.m(), frame.n());
    let mut heights = Vec::new();
    let mut y = 0u64;
    for s in word {
        match s {
            Step::North => y += 1,
            Step::East => heights.push(y),
        }
    }
    let mut count = 0;
    for x in 0..m {
        for cell_y in 0..n {
            let under_path = cell_y < heights[x as usize];
            // lower-right corner on or above the diagonal
            let clears = cell_y * m >= (x + 1) * n;
            if under_path && clears {
                count += 1;
            }
        }
    }
    count
}

pub fn oracle_dinv(path: &DyckPath) -> u64 {
    let frame = path.frame();
    area_word(frame, &sweep_word(frame, path.steps()))
}

pub fn oracle_area(path: &DyckPath) -> u64 {
    area_word(path.frame(), path.steps())
}

/// Sweep image → preimage for every path of the frame.
pub fn inverse_table(frame: &Frame) -> HashMap<Vec<Step>, DyckPath> {
    all_paths(frame)
        .into_iter()
        .map(|p| (sweep_word(frame, p.steps()), p))
        .collect()
}

/// The unique preimage of `path`, by search over every path of its frame.
pub fn oracle_invert_sweep(path: &DyckPath) -> Option<DyckPath> {
    let frame = path.frame();
    all_paths(frame)
        .into_iter()
        .find(|p| sweep_word(frame, p.steps()) == path.steps())
}

/// Column filling by scanning for the smallest active foot; columns returned
/// as label lists. Places `place` letters into columns of height `rows`.
pub fn naive_fill(word: &[Step], rows: usize, place: usize) -> Option<Vec<Vec<u32>>> {
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for (i, s) in word[..place].iter().enumerate() {
        let label = i as u32 + 1;
        match s {
            Step::North => cols.push(vec![label]),
            Step::East => {
                let target = cols
                    .iter_mut()
                    .filter(|c| c.len() < rows)
                    .min_by_key(|c| *c.last().unwrap())?;
                target.push(label);
            }
        }
    }
    Some(cols)
}

/// Columns of a sign +1 tableau as rows.
fn to_rows(cols: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let height = cols.first().map_or(0, Vec::len);
    (0..height)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect()
}

/// Rows of every tableau in `𝒯ₙᵏ` whose reduction equals `reduced` (given as rows).
pub fn oracle_fiber(k: u64, reduced: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let n = reduced.first().map_or(0, Vec::len) as u64 + 1;
    oracle_fibers(k, n).remove(reduced).unwrap_or_default()
}

/// All fibres of column removal from `𝒯ₙᵏ`, keyed by the reduced tableau's rows.
pub fn oracle_fibers(k: u64, n: u64) -> HashMap<Vec<Vec<u32>>, Vec<Vec<Vec<u32>>>> {
    let frame = Frame::new(k * n + 1, n).expect("Fuss frames are coprime");
    let rows = k as usize + 1;
    let mut out: HashMap<_, Vec<_>> = HashMap::new();
    if n < 2 {
        return out;
    }
    for word in all_words(&frame) {
        let cols = naive_fill(&word, rows, frame.len() - 1).expect("Dyck words fill completely");
        let first = cols[0].clone();
        let rest: Vec<Vec<u32>> = cols[1..]
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| v - first.iter().filter(|&&f| f < v).count() as u32)
                    .collect()
            })
            .collect();
        out.entry(to_rows(&rest)).or_default().push(to_rows(&cols));
    }
    out
}
