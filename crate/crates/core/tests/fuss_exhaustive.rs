mod common;

use std::collections::HashSet;

use num_bigint::BigUint;
use sweepkit::fuss::{
    en_from_tableau, fill_tableau_as, invert_fuss, invert_fuss_as, tableau_from_bottom_row,
    tableau_from_first_row, tableau_rank_labels, tableau_to_sw, walk, walk_columns,
};
use sweepkit::oracle;
use sweepkit::path::enumerate_paths;
use sweepkit::qtcatalan::path_count;
use sweepkit::reduction::{red, reduce_preimage};
use sweepkit::sweep::{en_word, sw_word, sweep};
use sweepkit::{FussTableau, Sign, SwWord};

use common::{fuss_frames, plus_frames};

fn rotate_to_min(cycle: &[u32]) -> Vec<u32> {
    let at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let mut out = cycle.to_vec();
    out.rotate_left(at);
    out
}

#[test]
fn invert_matches_oracle_in_both_signs() {
    for (frame, k, sign) in fuss_frames(18) {
        let table = oracle::inverse_table(&frame);
        for d in enumerate_paths(frame) {
            let pre = invert_fuss_as(&d, sign).unwrap();
            assert_eq!(&pre, &table[d.steps()], "k={k} sign={sign:?} {d}");
            assert_eq!(sweep(&pre), d);
            assert_eq!(invert_fuss_as(&sweep(&d), sign).unwrap(), d);
        }
    }
}

#[test]
fn default_classification_inverts_too() {
    for (frame, _, _) in fuss_frames(14) {
        for d in enumerate_paths(frame) {
            assert_eq!(sweep(&invert_fuss(&d).unwrap()), d);
        }
    }
}

#[test]
fn filling_is_a_bijection_onto_tableaux() {
    for (frame, k) in plus_frames(18) {
        let mut seen = HashSet::new();
        for d in enumerate_paths(frame) {
            let sw = SwWord::of_path(&d);
            let t = fill_tableau_as(&sw, Sign::Plus).unwrap();
            assert_eq!(t.k(), k);
            assert!(t.is_standard(), "{t}");
            assert!(t.satisfies_strip_condition(), "{t}");
            assert_eq!(tableau_to_sw(&t), sw);
            assert_eq!(
                FussTableau::from_rows(k, t.n(), Sign::Plus, &t.rows()).unwrap(),
                t
            );
            let cols: Vec<Vec<u32>> =
                oracle::naive_fill(sw.letters(), k as usize + 1, frame.len() - 1).unwrap();
            assert_eq!(t.columns().map(<[u32]>::to_vec).collect::<Vec<_>>(), cols);
            seen.insert(t);
        }
        assert_eq!(BigUint::from(seen.len()), path_count(&frame));
    }
}

#[test]
fn minus_fillings_are_standard() {
    for (frame, k, sign) in fuss_frames(18) {
        if sign != Sign::Minus {
            continue;
        }
        let mut seen = HashSet::new();
        for d in enumerate_paths(frame) {
            let sw = SwWord::of_path(&d);
            let t = fill_tableau_as(&sw, Sign::Minus).unwrap();
            assert_eq!(t.k(), k);
            assert!(t.is_standard(), "{t}");
            assert_eq!(tableau_to_sw(&t), sw);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<FussTableau>(&json).unwrap(), t);
            seen.insert(t);
        }
        assert_eq!(BigUint::from(seen.len()), path_count(&frame));
    }
}

#[test]
fn en_word_read_from_bottom_row() {
    for (frame, _, sign) in fuss_frames(18) {
        let table = oracle::inverse_table(&frame);
        for d in enumerate_paths(frame) {
            let t = fill_tableau_as(&SwWord::of_path(&d), sign).unwrap();
            let pre = &table[d.steps()];
            assert_eq!(en_from_tableau(&t), en_word(pre), "{d}");
            assert_eq!(sw_word(pre).letters(), d.steps());
        }
    }
}

#[test]
fn walk_is_one_cycle_with_increasing_ranks() {
    for (frame, _, sign) in fuss_frames(18) {
        let total = frame.len() as u32;
        for d in enumerate_paths(frame) {
            let t = fill_tableau_as(&SwWord::of_path(&d), sign).unwrap();
            let w = walk(&t).unwrap();
            let mut labels = w.order().to_vec();
            labels.sort_unstable();
            assert_eq!(labels, (1..=total).collect::<Vec<_>>());
            let ranks = tableau_rank_labels(&t).unwrap();
            assert!(ranks.windows(2).all(|p| p[0] < p[1]), "{t}");
        }
    }
}

#[test]
fn walk_contains_first_column_and_reduces() {
    for (frame, k) in plus_frames(18) {
        if frame.n() < 2 {
            continue;
        }
        for d in enumerate_paths(frame) {
            let t = fill_tableau_as(&SwWord::of_path(&d), Sign::Plus).unwrap();
            let order = walk(&t).unwrap().order().to_vec();
            let first: Vec<u32> = t.column(0).iter().rev().copied().collect();
            let start = order.iter().position(|&v| v == first[0]).unwrap();
            let segment: Vec<u32> = (0..first.len())
                .map(|i| order[(start + i) % order.len()])
                .collect();
            assert_eq!(segment, first, "{t}");

            let rest: Vec<Vec<u32>> = t.columns().skip(1).map(<[u32]>::to_vec).collect();
            let reduced = walk_columns(&rest).unwrap();
            assert_eq!(reduced.len() + k as usize + 1, order.len());
            let pruned: Vec<u32> = order
                .iter()
                .copied()
                .filter(|v| !first.contains(v))
                .collect();
            assert_eq!(rotate_to_min(&pruned), rotate_to_min(&reduced), "{t}");
        }
    }
}

#[test]
fn reduction_follows_the_smallest_rank_cut() {
    for (frame, _) in plus_frames(18) {
        if frame.n() < 2 {
            continue;
        }
        for d in enumerate_paths(frame) {
            let t = fill_tableau_as(&SwWord::of_path(&d), Sign::Plus).unwrap();
            let smaller = reduce_preimage(&invert_fuss(&d).unwrap()).unwrap();
            let expect = fill_tableau_as(&sw_word(&smaller), Sign::Plus).unwrap();
            assert_eq!(red(&t).unwrap(), expect, "{t}");
        }
    }
}

#[test]
fn row_constructors_and_psi() {
    for (frame, k) in plus_frames(18) {
        let n = frame.n() as usize;
        for d in enumerate_paths(frame) {
            let t = fill_tableau_as(&SwWord::of_path(&d), Sign::Plus).unwrap();
            assert_eq!(tableau_from_first_row(k, n, &t.first_row()).unwrap(), t);
            assert_eq!(tableau_from_bottom_row(k, n, &t.bottom_row()).unwrap(), t);
            let p = t.psi().unwrap();
            assert!(p.is_standard() && p.satisfies_strip_condition());
            assert_eq!(p.psi().unwrap(), t);
            let top: Vec<u32> = t
                .bottom_row()
                .iter()
                .rev()
                .map(|&b| (k as u32 + 1) * n as u32 + 1 - b)
                .collect();
            assert_eq!(p.first_row(), top);
        }
    }
}
