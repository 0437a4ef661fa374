//! Tableaux for Fuss frames and the linear-time inversion of the sweep map.
//!
//! For `m = kn + 1` a path's SW word is poured column by column into a
//! `(k+1) × n` array: an `S` opens a new column, a `W` goes under the oldest
//! column foot that is not yet in the last row. The result is a standard
//! tableau whose first row records the `S` positions and whose bottom row,
//! shifted by one, records the `N` positions of the EN word.
//!
//! A closed walk through the labels then reads off the sweep preimage in
//! `O(m + n)` time.
//!
//! Labels are 1-based throughout. For `m = kn + 1` the grid holds
//! `1..=m+n-1` and the label `m + n` is virtual: it sits outside the grid and
//! is always bold. For `m = kn - 1` the grid holds `1..=m+n` with the last
//! column one cell short; that cell is filled with the virtual label
//! `m + n + 1`, which the walk never visits.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{DyckPath, Frame, Fuss, Sign, Step};
use crate::sweep::{EnWord, SwWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRecord", into = "TableauRecord")]
pub struct FussTableau {
    k: u64,
    n: usize,
    sign: Sign,
    /// Column-major, `k + 1` entries per column.
    grid: Vec<u32>,
}

/// JSON form: `{"k":3,"n":4,"sign":1,"rows":[[1,3,6,9],...]}`. For sign −1
/// the bottom row omits the virtual cell.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauRecord {
    pub k: u64,
    pub n: usize,
    pub sign: i8,
    pub rows: Vec<Vec<u32>>,
}

impl TryFrom<TableauRecord> for FussTableau {
    type Error = Error;

    fn try_from(rec: TableauRecord) -> Result<Self> {
        let sign = match rec.sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            s => {
                return Err(Error::InvalidTableau(format!(
                    "sign must be 1 or -1, got {s}"
                )))
            }
        };
        FussTableau::from_rows(rec.k, rec.n, sign, &rec.rows)
    }
}

impl From<FussTableau> for TableauRecord {
    fn from(t: FussTableau) -> Self {
        TableauRecord {
            k: t.k,
            n: t.n,
            sign: t.sign.as_i8(),
            rows: t.rows(),
        }
    }
}

fn frame_for(k: u64, n: usize, sign: Sign) -> Result<Frame> {
    let kn = k * n as u64;
    let m = match sign {
        Sign::Plus => kn + 1,
        Sign::Minus => kn
            .checked_sub(1)
            .filter(|&m| m > 0)
            .ok_or(Error::NotFuss { m: 0, n: n as u64 })?,
    };
    Frame::new(m, n as u64)
}

fn fuss_of(frame: &Frame, sign: Sign) -> Result<Fuss> {
    frame.fuss_with(sign).ok_or(Error::NotFuss {
        m: frame.m(),
        n: frame.n(),
    })
}

impl FussTableau {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn row_count(&self) -> usize {
        self.k as usize + 1
    }

    pub fn frame(&self) -> Frame {
        frame_for(self.k, self.n, self.sign).expect("tableau built from a valid frame")
    }

    /// Largest label that stands for a letter of the SW word.
    pub fn last_label(&self) -> u32 {
        match self.sign {
            Sign::Plus => self.grid.len() as u32,
            Sign::Minus => self.grid.len() as u32 - 1,
        }
    }

    /// The label outside the alphabet: `m + n` for sign +1, `m + n + 1` for sign −1.
    pub fn virtual_label(&self) -> u32 {
        match self.sign {
            Sign::Plus => self.grid.len() as u32 + 1,
            Sign::Minus => self.grid.len() as u32,
        }
    }

    /// Entry at 0-based `(row, col)`; the virtual cell of a sign −1 tableau reads as its label.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.grid[col * self.row_count() + row]
    }

    pub fn column(&self, col: usize) -> &[u32] {
        let r = self.row_count();
        &self.grid[col * r..(col + 1) * r]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[u32]> {
        self.grid.chunks(self.row_count())
    }

    pub fn first_row(&self) -> Vec<u32> {
        self.columns().map(|c| c[0]).collect()
    }

    /// Last-row entries, including the virtual cell for sign −1.
    pub fn bottom_row(&self) -> Vec<u32> {
        self.columns().map(|c| c[c.len() - 1]).collect()
    }

    /// Rows of real entries, top to bottom.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let virt = self.virtual_label();
        (0..self.row_count())
            .map(|r| {
                (0..self.n)
                    .map(|c| self.get(r, c))
                    .filter(|&v| v != virt)
                    .collect()
            })
            .collect()
    }

    /// Build and validate from explicit rows.
    pub fn from_rows(k: u64, n: usize, sign: Sign, rows: &[Vec<u32>]) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidTableau("k and n must be positive".into()));
        }
        let frame = frame_for(k, n, sign)?;
        let height = k as usize + 1;
        if rows.len() != height {
            return Err(Error::InvalidTableau(format!(
                "expected {height} rows, found {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = if sign == Sign::Minus && i == height - 1 {
                n - 1
            } else {
                n
            };
            if row.len() != want {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, expected {want}",
                    i + 1,
                    row.len()
                )));
            }
        }
        let mut letters = vec![Step::East; frame.len()];
        for &t in &rows[0] {
            let slot = (t as usize)
                .checked_sub(1)
                .and_then(|i| letters.get_mut(i))
                .ok_or_else(|| Error::InvalidTableau(format!("entry {t} out of range")))?;
            *slot = Step::North;
        }
        let sw = SwWord::from_steps(frame, letters)
            .map_err(|e| Error::InvalidTableau(format!("first row is not a Dyck word: {e}")))?;
        let filled = fill_tableau_as(&sw, sign)?;
        if filled.rows() != rows {
            return Err(Error::InvalidTableau(
                "entries are not the column filling of their first row".into(),
            ));
        }
        Ok(filled)
    }

    /// Rows and columns strictly increasing (virtual cell included).
    pub fn is_standard(&self) -> bool {
        let r = self.row_count();
        let cols_ok = self.columns().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        let rows_ok =
            (0..r).all(|row| (1..self.n).all(|c| self.get(row, c - 1) < self.get(row, c)));
        cols_ok && rows_ok
    }

    /// For every vertical pair `a` over `d`, no column holds two entries strictly between them.
    pub fn satisfies_strip_condition(&self) -> bool {
        for col in self.columns() {
            for pair in col.windows(2) {
                let (a, d) = (pair[0], pair[1]);
                for other in self.columns() {
                    if other.iter().filter(|&&v| a < v && v < d).count() > 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `ψ(T)_{i,j} = (k+1)n + 1 − T_{k+2−i, n+1−j}`: rotate a half turn and
    /// complement the labels.
    pub fn psi(&self) -> Result<FussTableau> {
        if self.sign != Sign::Plus {
            return Err(Error::NotFuss {
                m: self.frame().m(),
                n: self.n as u64,
            });
        }
        let top = self.grid.len() as u32 + 1;
        let grid = self.grid.iter().rev().map(|&v| top - v).collect();
        Ok(FussTableau {
            k: self.k,
            n: self.n,
            sign: Sign::Plus,
            grid,
        })
    }

    /// Drop the first column and renumber the rest `1..` preserving order.
    pub(crate) fn drop_first_column(&self) -> Result<FussTableau> {
        if self.n < 2 {
            return Err(Error::TooNarrow);
        }
        let r = self.row_count();
        let first = self.column(0);
        let grid = self.grid[r..]
            .iter()
            .map(|&v| v - first.iter().filter(|&&c| c < v).count() as u32)
            .collect();
        Ok(FussTableau {
            k: self.k,
            n: self.n - 1,
            sign: self.sign,
            grid,
        })
    }
}

impl fmt::Display for FussTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.virtual_label().to_string().len();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Fill the tableau of a SW word using the frame's canonical Fuss sign.
pub fn fill_tableau(sw: &SwWord) -> Result<FussTableau> {
    let fuss = sw.frame().fuss().ok_or(Error::NotFuss {
        m: sw.frame().m(),
        n: sw.frame().n(),
    })?;
    fill_tableau_as(sw, fuss.sign)
}

/// Fill with an explicit sign; needed where a frame is Fuss both ways (`n ≤ 2`).
pub fn fill_tableau_as(sw: &SwWord, sign: Sign) -> Result<FussTableau> {
    let frame = *sw.frame();
    let Fuss { k, .. } = fuss_of(&frame, sign)?;
    let rows = k as usize + 1;
    let n = frame.n() as usize;
    let place = match sign {
        Sign::Plus => frame.len() - 1,
        Sign::Minus => frame.len(),
    };
    let mut grid = vec![0u32; rows * n];
    let mut heights = vec![0usize; n];
    // Columns whose foot is still above the last row, oldest foot first.
    // New feet are always the largest label so far, so FIFO order is label order.
    let mut active: VecDeque<usize> = VecDeque::with_capacity(n);
    let mut opened = 0usize;
    for (i, &letter) in sw.letters()[..place].iter().enumerate() {
        let label = i as u32 + 1;
        let col = match letter {
            Step::North => {
                if opened == n {
                    return Err(Error::PrematureStall { label: i + 1 });
                }
                opened += 1;
                opened - 1
            }
            Step::East => active
                .pop_front()
                .ok_or(Error::PrematureStall { label: i + 1 })?,
        };
        grid[col * rows + heights[col]] = label;
        heights[col] += 1;
        if heights[col] < rows {
            active.push_back(col);
        }
    }
    let full = heights.iter().all(|&h| h == rows);
    let short_last = heights[..n - 1].iter().all(|&h| h == rows) && heights[n - 1] == rows - 1;
    match sign {
        Sign::Plus if full => {}
        Sign::Minus if short_last => grid[n * rows - 1] = (rows * n) as u32,
        _ => {
            return Err(Error::InvalidTableau(
                "filling did not produce the expected shape".into(),
            ))
        }
    }
    Ok(FussTableau { k, n, sign, grid })
}

/// `S` at the first-row labels, `W` elsewhere.
pub fn tableau_to_sw(t: &FussTableau) -> SwWord {
    let frame = t.frame();
    let mut letters = vec![Step::East; frame.len()];
    for v in t.first_row() {
        letters[v as usize - 1] = Step::North;
    }
    SwWord::from_steps(frame, letters).expect("first row of a valid tableau is a Dyck word")
}

/// `N` at each bottom-row entry shifted by one (up for +1, down for −1).
pub fn en_from_tableau(t: &FussTableau) -> EnWord {
    let frame = t.frame();
    let mut letters = vec![Step::East; frame.len()];
    for v in bold_set(t) {
        letters[v as usize - 1] = Step::North;
    }
    EnWord::from_steps(frame, letters).expect("one N per column")
}

/// Labels one above (sign +1) or one below (sign −1) a bottom-row entry.
pub fn bold_set(t: &FussTableau) -> Vec<u32> {
    t.bottom_row()
        .into_iter()
        .map(|b| match t.sign {
            Sign::Plus => b + 1,
            Sign::Minus => b - 1,
        })
        .collect()
}

/// The closed walk through a tableau's labels, starting at 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkPermutation {
    order: Vec<u32>,
}

impl WalkPermutation {
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

impl fmt::Display for WalkPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.order {
            write!(f, "{v}→")?;
        }
        write!(f, "({})", self.order.first().copied().unwrap_or(0))
    }
}

const UNSET: u32 = u32::MAX;
const FIRST_ROW: u32 = 1 << 31;

struct Walk {
    order: Vec<u32>,
    // letter of each visited label, in walk order
    north: Vec<bool>,
}

/// Successor of every label, tagged with `FIRST_ROW` for first-row labels.
/// One sequential pass over the grid, so the walk itself chases a single
/// pointer per step.
fn successors(grid: &[u32], rows: usize, sign: Sign) -> Result<Vec<u32>> {
    let cells = grid.len();
    if cells == 0 || rows == 0 || !cells.is_multiple_of(rows) || cells >= FIRST_ROW as usize - 2 {
        return Err(Error::InvalidTableau("grid does not fit its shape".into()));
    }
    let size = cells + 2;
    let mut bold = vec![false; size + 1];
    for foot in grid.iter().skip(rows - 1).step_by(rows) {
        let f = *foot as usize;
        if f == 0 || f > cells {
            return Err(Error::InvalidTableau("labels are not 1..N".into()));
        }
        match sign {
            Sign::Plus => bold[f + 1] = true,
            Sign::Minus => bold[f - 1] = true,
        }
    }
    // resolve[r]: first normal label reached from r by stepping past bold labels
    let mut resolve = vec![0u32; size];
    match sign {
        Sign::Plus => {
            for r in 1..size {
                resolve[r] = if bold[r] { resolve[r - 1] } else { r as u32 };
            }
        }
        Sign::Minus => {
            for r in (1..size).rev() {
                resolve[r] = if bold[r] && r + 1 < size {
                    resolve[r + 1]
                } else {
                    r as u32
                };
            }
        }
    }

    let mut succ = vec![UNSET; size];
    for (col, cells) in grid.chunks_exact(rows).enumerate() {
        let foot = cells[rows - 1];
        for (r, &v) in cells.iter().enumerate() {
            let slot = succ
                .get_mut(v as usize)
                .filter(|s| v != 0 && **s == UNSET)
                .ok_or_else(|| {
                    Error::InvalidTableau(format!(
                        "label {v} in column {} is out of place",
                        col + 1
                    ))
                })?;
            *slot = if r == 0 {
                FIRST_ROW
                    | match sign {
                        Sign::Plus => foot + 1,
                        Sign::Minus => foot - 1,
                    }
            } else {
                resolve[cells[r - 1] as usize]
            };
        }
    }
    if sign == Sign::Plus {
        succ[cells + 1] = resolve[cells];
    }
    Ok(succ)
}

/// Walk over a column-major grid holding exactly the labels `1..=grid.len()`.
///
/// The walk is deterministic, so if it first returns to 1 after exactly as
/// many steps as there are labels to visit, it has visited each once.
fn run_walk(grid: &[u32], rows: usize, sign: Sign) -> Result<Walk> {
    let succ = successors(grid, rows, sign)?;
    let cells = grid.len() as u32;
    let (virt, visits) = match sign {
        Sign::Plus => (cells + 1, cells as usize + 1),
        Sign::Minus => (cells, cells as usize - 1),
    };
    let mut order = Vec::with_capacity(visits);
    let mut north = Vec::with_capacity(visits);
    let mut cur = 1u32;
    loop {
        let tagged = succ[cur as usize];
        order.push(cur);
        north.push(tagged & FIRST_ROW != 0);
        let next = tagged & !FIRST_ROW;
        if next == 1 {
            break;
        }
        if order.len() == visits
            || next == 0
            || next > virt
            || (sign == Sign::Minus && next == virt)
        {
            return Err(Error::NotSingleCycle);
        }
        cur = next;
    }
    if order.len() != visits {
        return Err(Error::NotSingleCycle);
    }
    Ok(Walk { order, north })
}

/// The closed walk of a tableau, a single cycle through `1..=m+n`.
pub fn walk(t: &FussTableau) -> Result<WalkPermutation> {
    run_walk(&t.grid, t.row_count(), t.sign).map(|w| WalkPermutation { order: w.order })
}

/// Walk of a sign +1 array given by columns of arbitrary increasing labels.
///
/// Successor and predecessor are taken within the label set; the virtual
/// label is one past the largest. Used to follow the walk of a tableau with
/// its first column removed, before renumbering.
pub fn walk_columns(columns: &[Vec<u32>]) -> Result<Vec<u32>> {
    let rows = columns.first().map_or(0, Vec::len);
    if rows == 0 || columns.iter().any(|c| c.len() != rows) {
        return Err(Error::InvalidTableau("columns must share a height".into()));
    }
    let mut sorted: Vec<u32> = columns.iter().flatten().copied().collect();
    sorted.sort_unstable();
    let index_of = |v: u32| sorted.binary_search(&v).map(|i| i as u32 + 1);
    let mut grid = Vec::with_capacity(sorted.len());
    for col in columns {
        for &v in col {
            grid.push(index_of(v).map_err(|_| Error::InvalidTableau("bad label".into()))?);
        }
    }
    let top = sorted.last().copied().unwrap_or(0) + 1;
    let w = run_walk(&grid, rows, Sign::Plus)?;
    Ok(w.order
        .into_iter()
        .map(|i| sorted.get(i as usize - 1).copied().unwrap_or(top))
        .collect())
}

/// Rank of every label along the walk: 0 at label 1, `+m` after a first-row
/// label and `−n` after any other. Indexed by `label − 1`.
pub fn tableau_rank_labels(t: &FussTableau) -> Result<Vec<i64>> {
    let frame = t.frame();
    let w = run_walk(&t.grid, t.row_count(), t.sign)?;
    let mut ranks = vec![0i64; w.order.len()];
    let mut rank = 0i64;
    for (&label, &north) in w.order.iter().zip(&w.north) {
        ranks[label as usize - 1] = rank;
        rank += if north {
            frame.north_rank()
        } else {
            frame.east_rank()
        };
    }
    Ok(ranks)
}

/// The sweep preimage of a path in a Fuss frame, in linear time.
pub fn invert_fuss(path: &DyckPath) -> Result<DyckPath> {
    let frame = path.frame();
    let fuss = frame.fuss().ok_or(Error::NotFuss {
        m: frame.m(),
        n: frame.n(),
    })?;
    invert_fuss_as(path, fuss.sign)
}

pub fn invert_fuss_as(path: &DyckPath, sign: Sign) -> Result<DyckPath> {
    let t = fill_tableau_as(&SwWord::of_path(path), sign)?;
    let w = run_walk(&t.grid, t.row_count(), sign)?;
    let steps = w
        .north
        .iter()
        .map(|&north| if north { Step::North } else { Step::East })
        .collect();
    DyckPath::new(*path.frame(), steps).map_err(|_| Error::NotSingleCycle)
}

/// The unique tableau with first row `t` (1-based labels, `t₁ = 1`,
/// `t_j ≤ 1 + (j−1)(k+1)`).
pub fn tableau_from_first_row(k: u64, n: usize, t: &[u32]) -> Result<FussTableau> {
    if t.len() != n || k == 0 || n == 0 {
        return Err(Error::InvalidTableau(format!(
            "expected {n} first-row entries"
        )));
    }
    for (j, &v) in t.iter().enumerate() {
        let bound = 1 + j as u64 * (k + 1);
        let increasing = j == 0 || t[j - 1] < v;
        if (j == 0 && v != 1) || !increasing || v as u64 > bound {
            return Err(Error::RowConstraintViolated { j: j + 1 });
        }
    }
    let frame = frame_for(k, n, Sign::Plus)?;
    let mut letters = vec![Step::East; frame.len()];
    for &v in t {
        letters[v as usize - 1] = Step::North;
    }
    fill_tableau_as(&SwWord::from_steps(frame, letters)?, Sign::Plus)
}

/// The unique tableau with bottom row `b` (`b_n = (k+1)n`, `b_j ≥ j(k+1)`),
/// built through the first row of its image under `ψ`.
pub fn tableau_from_bottom_row(k: u64, n: usize, b: &[u32]) -> Result<FussTableau> {
    if b.len() != n || k == 0 || n == 0 {
        return Err(Error::InvalidTableau(format!(
            "expected {n} bottom-row entries"
        )));
    }
    let total = (k + 1) * n as u64;
    for (j, &v) in b.iter().enumerate() {
        let increasing = j == 0 || b[j - 1] < v;
        let last_ok = j + 1 < n || v as u64 == total;
        if !increasing || !last_ok || (v as u64) < (j as u64 + 1) * (k + 1) {
            return Err(Error::RowConstraintViolated { j: j + 1 });
        }
    }
    let top: Vec<u32> = b.iter().rev().map(|&v| (total + 1) as u32 - v).collect();
    tableau_from_first_row(k, n, &top)?.psi()
}
