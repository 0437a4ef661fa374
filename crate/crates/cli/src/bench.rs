//! Timing the linear-time inverse on random Fuss paths.

use std::hint::black_box;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use sweepkit::fuss::invert_fuss;
use sweepkit::path::random_path;
use sweepkit::Frame;

use crate::error::CliResult;

pub const CSV_HEADER: &str = "k,n,m,steps,mean_ns,reps";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub k: u64,
    pub n: u64,
    pub m: u64,
    pub steps: u64,
    pub mean_ns: u128,
    pub reps: u32,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.k, self.n, self.m, self.steps, self.mean_ns, self.reps
        )
    }
}

/// One row per size, `m = kn + 1`. Paths are drawn from one generator seeded
/// with `seed`, so the inputs are reproducible; each size gets one untimed
/// warm-up inversion before its `reps` timed ones.
pub fn run(k: u64, sizes: &[u64], reps: u32, seed: u64) -> CliResult<Vec<BenchRow>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let frame = Frame::new(k * n + 1, n)?;
        black_box(invert_fuss(&random_path(frame, &mut rng))?);
        let mut total = 0u128;
        for _ in 0..reps.max(1) {
            let path = random_path(frame, &mut rng);
            let start = Instant::now();
            let pre = invert_fuss(black_box(&path))?;
            total += start.elapsed().as_nanos();
            black_box(pre);
        }
        rows.push(BenchRow {
            k,
            n,
            m: frame.m(),
            steps: frame.len() as u64,
            mean_ns: total / reps.max(1) as u128,
            reps: reps.max(1),
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}
