use num_bigint::BigUint;
use sweepkit::qtcatalan::{catalan_qt, catalan_qt_via_bounce, catalan_step, path_count};
use sweepkit::{Frame, QtPolynomial};

fn feasible() -> impl Iterator<Item = (u64, u64)> {
    (1..=3u64)
        .flat_map(|k| (1..=5u64).map(move |n| (k, n)))
        .filter(|&(k, n)| (k + 1) * n <= 24)
}

#[test]
fn three_forms_agree() {
    for (k, n) in feasible() {
        let direct = catalan_qt(k, n).unwrap();
        assert_eq!(catalan_qt_via_bounce(k, n).unwrap(), direct, "k={k} n={n}");
        assert_eq!(catalan_step(k, n).unwrap(), direct, "k={k} n={n}");
        let frame = Frame::new(k * n + 1, n).unwrap();
        assert_eq!(direct.eval_one(), path_count(&frame));
    }
}

#[test]
fn degree_bounds_are_attained() {
    for (k, n) in feasible() {
        let c = catalan_qt(k, n).unwrap();
        let top = k * n * (n - 1) / 2;
        assert_eq!(c.max_q_degree(), Some(top));
        assert_eq!(c.max_t_degree(), Some(top));
        assert_eq!(c.coeff(top, 0), BigUint::from(1u32));
        assert_eq!(c.coeff(0, top), BigUint::from(1u32));
    }
}

#[test]
fn smallest_cases() {
    let q_plus_t: QtPolynomial = [(1, 0), (0, 1)].into_iter().collect();
    assert_eq!(catalan_qt(1, 2).unwrap(), q_plus_t);
    assert_eq!(catalan_step(1, 2).unwrap(), q_plus_t);
    assert_eq!(catalan_qt(2, 2).unwrap(), catalan_step(2, 2).unwrap());
    for k in 1..5 {
        assert_eq!(catalan_qt(k, 1).unwrap(), QtPolynomial::one());
    }
}
