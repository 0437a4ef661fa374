mod common;

use std::collections::HashSet;

use num_bigint::BigUint;
use sweepkit::oracle;
use sweepkit::path::enumerate_paths;
use sweepkit::qtcatalan::path_count;
use sweepkit::sweep::{bipartite_invert, brute_invert_sweep, en_word, sw_word, sweep};
use sweepkit::{DyckPath, Frame, Step};

use common::coprime_frames;

#[test]
fn enumeration_matches_count_formula_and_oracle() {
    for frame in coprime_frames(16) {
        let fast: Vec<DyckPath> = enumerate_paths(frame).collect();
        assert_eq!(BigUint::from(fast.len()), path_count(&frame), "{frame:?}");
        if frame.len() <= 14 {
            let slow: HashSet<DyckPath> = oracle::all_paths(&frame).into_iter().collect();
            assert_eq!(fast.iter().cloned().collect::<HashSet<_>>(), slow);
        }
    }
}

#[test]
fn sweep_is_a_bijection_carrying_dinv_to_area() {
    for frame in coprime_frames(14) {
        let mut images = HashSet::new();
        for d in enumerate_paths(frame) {
            let img = sweep(&d);
            assert_eq!(img.steps(), &oracle::sweep_word(&frame, d.steps())[..]);
            assert_eq!(img.area(), d.dinv(), "{d}");
            assert_eq!(d.dinv(), oracle::oracle_dinv(&d));
            assert_eq!(d.area(), oracle::oracle_area(&d));
            images.insert(img);
        }
        assert_eq!(BigUint::from(images.len()), path_count(&frame));
    }
}

#[test]
fn statistics_bounded_by_max_area() {
    for frame in coprime_frames(14) {
        for d in enumerate_paths(frame) {
            assert!(d.area() <= frame.max_area());
            assert!(d.dinv() <= frame.max_area());
            let ranks = d.rank_sequence();
            let v = ranks.values();
            assert_eq!(v[0], 0);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn rank_complement_is_a_dinv_preserving_involution() {
    for frame in coprime_frames(14) {
        for d in enumerate_paths(frame) {
            let c = d.rank_complement();
            assert_eq!(c.rank_complement(), d);
            assert_eq!(c.dinv(), d.dinv(), "{d}");
        }
    }
}

#[test]
fn bipartite_inversion_round_trips() {
    for frame in coprime_frames(14) {
        for d in enumerate_paths(frame) {
            let img = sweep(&d);
            let (pre, ranks) = bipartite_invert(&sw_word(&d), &en_word(&d)).unwrap();
            assert_eq!(pre, d);
            assert_eq!(ranks, d.rank_sequence());
            assert_eq!(sw_word(&d).letters(), img.steps());
        }
    }
}

/// The i-th S sits `m` below the i-th N, the j-th W sits `n` above the j-th E.
#[test]
fn start_and_end_ranks_pair_up() {
    for frame in coprime_frames(14) {
        let (m, n) = (frame.m() as i64, frame.n() as i64);
        for d in enumerate_paths(frame) {
            let ranks = d.ranks();
            let mut starts: Vec<(i64, Step)> = ranks
                .iter()
                .copied()
                .zip(d.steps().iter().copied())
                .collect();
            starts.sort_unstable();
            let ends: Vec<(i64, Step)> = starts
                .iter()
                .map(|&(r, s)| (r + if s.is_north() { m } else { -n }, s))
                .collect();
            let mut ends_sorted = ends;
            ends_sorted.sort_unstable();
            let s_ranks = starts.iter().filter(|p| p.1.is_north()).map(|p| p.0);
            let n_ranks = ends_sorted.iter().filter(|p| p.1.is_north()).map(|p| p.0);
            assert!(s_ranks.zip(n_ranks).all(|(s, e)| e == s + m));
            let w_ranks = starts.iter().filter(|p| !p.1.is_north()).map(|p| p.0);
            let e_ranks = ends_sorted.iter().filter(|p| !p.1.is_north()).map(|p| p.0);
            assert!(w_ranks.zip(e_ranks).all(|(w, e)| e == w - n));
        }
    }
}

#[test]
fn brute_inverse_agrees_with_oracle() {
    for frame in coprime_frames(12) {
        let table = oracle::inverse_table(&frame);
        for d in enumerate_paths(frame) {
            let pre = brute_invert_sweep(&d).unwrap();
            assert_eq!(&pre, &table[d.steps()]);
            assert_eq!(Some(pre), oracle::oracle_invert_sweep(&d));
        }
    }
}

#[test]
fn seven_five_example() {
    let frame = Frame::new(7, 5).unwrap();
    let d = DyckPath::parse(frame, "NNENEENEENEE").unwrap();
    assert_eq!(d.dinv(), 8);
    assert_eq!(oracle::oracle_dinv(&d), 8);
    let img = sweep(&d);
    assert_eq!(oracle::oracle_invert_sweep(&img), Some(d));
}
