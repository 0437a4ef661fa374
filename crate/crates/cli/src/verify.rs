//! Exhaustive self-checks over every small frame.

use std::collections::HashSet;

use serde::Serialize;
use sweepkit::fuss::{fill_tableau_as, invert_fuss_as, tableau_to_sw};
use sweepkit::oracle;
use sweepkit::path::enumerate_paths;
use sweepkit::qtcatalan::path_count;
use sweepkit::reduction::{area_from_bottom_row, coarea_from_top_row};
use sweepkit::sweep::{bipartite_invert, en_word, sw_word, sweep};
use sweepkit::{Frame, Sign, SwWord};

const MAX_REPORTED: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_steps: u64,
    pub frames: usize,
    pub fuss_frames: usize,
    pub paths: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, msg: String) {
        self.failures += 1;
        if self.examples.len() < MAX_REPORTED {
            self.examples.push(msg);
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// For every coprime frame with `m + n ≤ max_steps`: the count formula, sweep
/// injectivity, dinv to area against the coordinate oracle, the bipartite
/// round trip, and the rank complement. Fuss frames additionally check the
/// linear-time inverse in each applicable shape and the row-sum formulas.
pub fn run(max_steps: u64) -> VerifyReport {
    let mut report = VerifyReport {
        max_steps,
        frames: 0,
        fuss_frames: 0,
        paths: 0,
        failures: 0,
        examples: Vec::new(),
    };
    for total in 2..=max_steps {
        for n in 1..total {
            let m = total - n;
            if gcd(m, n) != 1 {
                continue;
            }
            let frame = Frame::new(m, n).expect("coprime");
            report.frames += 1;
            check_frame(frame, &mut report);
        }
    }
    report
}

fn check_frame(frame: Frame, report: &mut VerifyReport) {
    let classes = frame.fuss_classes();
    if !classes.is_empty() {
        report.fuss_frames += 1;
    }
    let mut images = HashSet::new();
    let mut count = 0usize;
    for d in enumerate_paths(frame) {
        count += 1;
        let img = sweep(&d);
        if img.steps() != oracle::sweep_word(&frame, d.steps()).as_slice() {
            report.fail(format!("{frame} {d}: sweep disagrees with oracle"));
        }
        if img.area() != d.dinv() || d.dinv() != oracle::oracle_dinv(&d) {
            report.fail(format!("{frame} {d}: dinv is not area of the sweep"));
        }
        match bipartite_invert(&sw_word(&d), &en_word(&d)) {
            Ok((pre, _)) if pre == d => {}
            _ => report.fail(format!("{frame} {d}: bipartite inversion failed")),
        }
        let c = d.rank_complement();
        if c.rank_complement() != d || c.dinv() != d.dinv() {
            report.fail(format!("{frame} {d}: rank complement"));
        }
        for f in &classes {
            match invert_fuss_as(&img, f.sign) {
                Ok(pre) if pre == d => {}
                _ => report.fail(format!("{frame} {d}: fuss inverse ({:?})", f.sign)),
            }
            let t = match fill_tableau_as(&SwWord::of_path(&d), f.sign) {
                Ok(t) => t,
                Err(e) => {
                    report.fail(format!("{frame} {d}: filling failed: {e}"));
                    continue;
                }
            };
            if !t.is_standard() || tableau_to_sw(&t).to_path() != d {
                report.fail(format!("{frame} {d}: tableau round trip"));
            }
            if f.sign == Sign::Plus {
                let coarea = d.coarea().map(|c| c as i64).ok();
                if !t.satisfies_strip_condition()
                    || area_from_bottom_row(&t) != d.area() as i64
                    || Some(coarea_from_top_row(&t)) != coarea
                {
                    report.fail(format!("{frame} {d}: tableau conditions or row sums"));
                }
            }
        }
        images.insert(img);
    }
    report.paths += count;
    if images.len() != count || path_count(&frame) != count.into() {
        report.fail(format!(
            "{frame}: sweep is not a bijection on {count} paths"
        ));
    }
}
