#![allow(dead_code)]

use sweepkit::{Frame, Sign};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every coprime frame with `m + n ≤ bound`.
pub fn coprime_frames(bound: u64) -> Vec<Frame> {
    let mut out = Vec::new();
    for total in 2..=bound {
        for n in 1..total {
            let m = total - n;
            if gcd(m, n) == 1 {
                out.push(Frame::new(m, n).unwrap());
            }
        }
    }
    out
}

/// Every `(frame, k, sign)` with `m = kn ± 1` and `m + n ≤ bound`.
pub fn fuss_frames(bound: u64) -> Vec<(Frame, u64, Sign)> {
    let mut out = Vec::new();
    for n in 1..bound {
        for k in 1..bound {
            for sign in [Sign::Plus, Sign::Minus] {
                let m = match sign {
                    Sign::Plus => k * n + 1,
                    Sign::Minus => k * n - 1,
                };
                if m == 0 || m + n > bound {
                    continue;
                }
                out.push((Frame::new(m, n).unwrap(), k, sign));
            }
        }
    }
    out
}

pub fn plus_frames(bound: u64) -> Vec<(Frame, u64)> {
    fuss_frames(bound)
        .into_iter()
        .filter(|&(_, _, s)| s == Sign::Plus)
        .map(|(f, k, _)| (f, k))
        .collect()
}
