//! Dropping the first column of a tableau, and the fibres of that map.
//!
//! `red(T)` removes column 1 of `T ∈ 𝒯ₙᵏ` and renumbers. Every `T' ∈ 𝒯ᵏₙ₋₁`
//! has exactly `b'₁` preimages (the foot of its first column). They can be
//! listed two ways: by cutting and lifting the sweep preimage of the smaller
//! path, or directly from bottom rows, which within a fibre differ only in
//! their first entry.

use crate::error::{Error, Result};
use crate::fuss::{invert_fuss, tableau_from_bottom_row, tableau_to_sw, FussTableau};
use crate::path::{DyckPath, Frame, Sign, Step};
use crate::sweep::sweep;

fn plus_only(t: &FussTableau) -> Result<()> {
    if t.sign() != Sign::Plus {
        let f = t.frame();
        return Err(Error::NotFuss { m: f.m(), n: f.n() });
    }
    Ok(())
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

pub fn red(t: &FussTableau) -> Result<FussTableau> {
    plus_only(t)?;
    t.drop_first_column()
}

pub fn psi(t: &FussTableau) -> Result<FussTableau> {
    t.psi()
}

/// Number of tableaux one column wider that reduce to `t`.
pub fn fiber_count(t: &FussTableau) -> u32 {
    t.get(t.row_count() - 1, 0)
}

/// The fibre of `red` over `t`, listed by bottom row: `b_j = b'_{j−1} + k + 1`
/// for `j ≥ 2` and `b₁ ∈ {k+1, …, k+b'₁}`.
pub fn fiber_by_bottom_rows(t: &FussTableau) -> Result<Vec<FussTableau>> {
    plus_only(t)?;
    let k = t.k();
    let step = k as u32 + 1;
    let reduced = t.bottom_row();
    let tail: Vec<u32> = reduced.iter().map(|b| b + step).collect();
    (0..reduced[0])
        .map(|j| {
            let mut bottom = Vec::with_capacity(tail.len() + 1);
            bottom.push(step + j);
            bottom.extend_from_slice(&tail);
            tableau_from_bottom_row(k, t.n() + 1, &bottom)
        })
        .collect()
}

/// Start-vertex ranks of `pre` below `m'`, in increasing order.
pub fn admissible_cut_ranks(pre: &DyckPath) -> Vec<i64> {
    let bound = pre.frame().m() as i64;
    let mut ranks: Vec<i64> = pre.ranks().into_iter().filter(|&r| r < bound).collect();
    ranks.sort_unstable();
    ranks
}

fn k_of(frame: &Frame) -> Result<u64> {
    frame
        .fuss_with(Sign::Plus)
        .map(|f| f.k)
        .ok_or(Error::NotFuss {
            m: frame.m(),
            n: frame.n(),
        })
}

/// Cut `pre` (a path in `(kn'+1, n')`) at its vertex of rank `rank` as `A·B`
/// and return `N·B·A·Eᵏ` in `(kn+1, n)` with `n = n' + 1`.
pub fn cut_and_lift(pre: &DyckPath, rank: i64) -> Result<DyckPath> {
    let frame = *pre.frame();
    let k = k_of(&frame)?;
    let bound = frame.m() as i64;
    if rank >= bound {
        return Err(Error::RankTooLarge { rank, bound });
    }
    let at = pre
        .ranks()
        .iter()
        .position(|&r| r == rank)
        .ok_or(Error::RankNotPresent { rank })?;
    let (a, b) = pre.steps().split_at(at);
    let n = frame.n() + 1;
    let lifted = Frame::new(k * n + 1, n)?;
    let mut steps = Vec::with_capacity(lifted.len());
    steps.push(Step::North);
    steps.extend_from_slice(b);
    steps.extend_from_slice(a);
    steps.extend(std::iter::repeat_n(Step::East, k as usize));
    DyckPath::new(lifted, steps)
}

/// The fibre of `red` over `t`, listed as paths by cutting the sweep
/// preimage of `t`'s path at each admissible rank. Ordered by cut rank.
pub fn fiber_by_cutting(t: &FussTableau) -> Result<Vec<DyckPath>> {
    plus_only(t)?;
    let reduced = tableau_to_sw(t).to_path();
    let pre = invert_fuss(&reduced)?;
    admissible_cut_ranks(&pre)
        .into_iter()
        .map(|r| cut_and_lift(&pre, r).map(|lifted| sweep(&lifted)))
        .collect()
}

/// Inverse direction of [`cut_and_lift`]: strip the leading `N` and the
/// trailing `k` East steps, then rotate to start at the lowest-rank vertex.
pub fn reduce_preimage(pre: &DyckPath) -> Result<DyckPath> {
    let frame = *pre.frame();
    let k = k_of(&frame)?;
    if frame.n() < 2 {
        return Err(Error::TooNarrow);
    }
    let n = frame.n() - 1;
    let smaller = Frame::new(k * n + 1, n)?;
    let steps = pre.steps();
    let mut middle = steps[1..steps.len() - k as usize].to_vec();
    let mut rank = 0i64;
    let mut lowest = (0i64, 0usize);
    for (i, &s) in middle.iter().enumerate() {
        if rank < lowest.0 {
            lowest = (rank, i);
        }
        rank += smaller.delta(s);
    }
    middle.rotate_left(lowest.1);
    DyckPath::new(smaller, middle)
}

/// `Σ tᵢ − C(n+1, 2)`: the coarea of the tableau's path.
pub fn coarea_from_top_row(t: &FussTableau) -> i64 {
    let n = t.n() as i64;
    t.first_row().iter().map(|&v| v as i64).sum::<i64>() - n * (n + 1) / 2
}

/// `Σ bᵢ − (k+1)·C(n+1, 2)`: the area of the tableau's path.
pub fn area_from_bottom_row(t: &FussTableau) -> i64 {
    let n = t.n() as i64;
    let k = t.k() as i64;
    t.bottom_row().iter().map(|&v| v as i64).sum::<i64>() - (k + 1) * n * (n + 1) / 2
}

/// Area gained over the reduced path: `b₁ − (k + 1)`.
pub fn area_shift(t: &FussTableau) -> i64 {
    t.get(t.row_count() - 1, 0) as i64 - (t.k() as i64 + 1)
}

/// `k·C(n,2) − bounce`, with bounce taken through the linear-time inverse.
pub fn cobounce(path: &DyckPath) -> Result<u64> {
    let frame = path.frame();
    let k = k_of(frame)?;
    let pre = invert_fuss(path)?;
    Ok(k * binom2(frame.n()) - pre.area())
}
