mod common;

use std::collections::HashSet;

use sweepkit::fuss::{fill_tableau_as, invert_fuss, tableau_from_bottom_row, tableau_to_sw};
use sweepkit::oracle;
use sweepkit::path::enumerate_paths;
use sweepkit::reduction::{
    admissible_cut_ranks, area_from_bottom_row, area_shift, coarea_from_top_row, cobounce,
    cut_and_lift, fiber_by_bottom_rows, fiber_by_cutting, fiber_count, red,
};
use sweepkit::sweep::sweep;
use sweepkit::{Frame, FussTableau, Sign, SwWord};

use common::plus_frames;

fn tableaux(frame: Frame) -> Vec<FussTableau> {
    enumerate_paths(frame)
        .map(|d| fill_tableau_as(&SwWord::of_path(&d), Sign::Plus).unwrap())
        .collect()
}

#[test]
fn fibres_agree_three_ways() {
    for (frame, k) in plus_frames(30) {
        let n = frame.n();
        if (k + 1) * n > 16 {
            continue;
        }
        let groups = oracle::oracle_fibers(k, n + 1);
        let mut covered = 0;
        for t in tableaux(frame) {
            let by_rows = fiber_by_bottom_rows(&t).unwrap();
            let by_cut: Vec<FussTableau> = fiber_by_cutting(&t)
                .unwrap()
                .iter()
                .map(|d| fill_tableau_as(&SwWord::of_path(d), Sign::Plus).unwrap())
                .collect();
            assert_eq!(by_rows.len(), fiber_count(&t) as usize, "{t}");
            assert_eq!(by_cut.len(), by_rows.len(), "{t}");

            let rows_set: HashSet<_> = by_rows.iter().map(FussTableau::rows).collect();
            let cut_set: HashSet<_> = by_cut.iter().map(FussTableau::rows).collect();
            let oracle_set: HashSet<_> = groups[&t.rows()].iter().cloned().collect();
            assert_eq!(rows_set, cut_set, "{t}");
            assert_eq!(rows_set, oracle_set, "{t}");
            covered += oracle_set.len();

            let tail = &by_rows[0].bottom_row()[1..];
            for member in &by_rows {
                assert_eq!(red(member).unwrap(), t);
                assert_eq!(&member.bottom_row()[1..], tail);
                assert_eq!(
                    area_from_bottom_row(member),
                    area_from_bottom_row(&t) + area_shift(member)
                );
            }
        }
        assert_eq!(covered, groups.values().map(Vec::len).sum::<usize>());
    }
}

#[test]
fn row_sums_give_area_and_coarea() {
    for (frame, _) in plus_frames(18) {
        for d in enumerate_paths(frame) {
            let t = fill_tableau_as(&SwWord::of_path(&d), Sign::Plus).unwrap();
            assert_eq!(area_from_bottom_row(&t), d.area() as i64, "{d}");
            assert_eq!(coarea_from_top_row(&t), d.coarea().unwrap() as i64, "{d}");
        }
    }
}

#[test]
fn cobounce_shifts_by_cut_rank() {
    for (frame, k) in plus_frames(18) {
        // the lifted frame gains k + 1 steps
        if frame.len() as u64 + k + 1 > 18 {
            continue;
        }
        for d in enumerate_paths(frame) {
            let pre = invert_fuss(&d).unwrap();
            let base = cobounce(&d).unwrap() as i64;
            for r in admissible_cut_ranks(&pre) {
                let lifted = sweep(&cut_and_lift(&pre, r).unwrap());
                assert_eq!(cobounce(&lifted).unwrap() as i64, base + r, "{d} r={r}");
            }
        }
    }
}

#[test]
fn worked_fibre_instance() {
    let reduced = tableau_from_bottom_row(3, 4, &[7, 10, 14, 16]).unwrap();
    let d_small = tableau_to_sw(&reduced).to_path();
    assert_eq!(d_small.area(), 7);
    assert_eq!(cobounce(&d_small).unwrap(), 11);
    let big = tableau_from_bottom_row(3, 5, &[10, 11, 14, 18, 20]).unwrap();
    assert_eq!(red(&big).unwrap(), reduced);

    // the rank 9 cut lands on the member with b₁ = 8
    let pre = invert_fuss(&d_small).unwrap();
    let d_cut = sweep(&cut_and_lift(&pre, 9).unwrap());
    let t_cut = fill_tableau_as(&SwWord::of_path(&d_cut), Sign::Plus).unwrap();
    assert_eq!(t_cut.bottom_row(), vec![8, 11, 14, 18, 20]);
    assert_eq!(d_cut.area(), 11);
    assert_eq!(cobounce(&d_cut).unwrap(), 20);
    let members = fiber_by_bottom_rows(&reduced).unwrap();
    assert!(members.contains(&t_cut));
    let oracle_rows: HashSet<_> = oracle::oracle_fiber(3, &reduced.rows())
        .into_iter()
        .collect();
    assert_eq!(oracle_rows.len(), 7);
    assert_eq!(
        members
            .iter()
            .map(FussTableau::rows)
            .collect::<HashSet<_>>(),
        oracle_rows
    );
}
