//! SVG drawing of a path in its lattice rectangle.

use std::fmt::Write;

use sweepkit::{DyckPath, Step};

#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    /// Side of one lattice cell in SVG user units.
    pub cell: f64,
    pub ranks: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            cell: 40.0,
            ranks: true,
        }
    }
}

const MARGIN: f64 = 24.0;

/// Grid, diagonal, the path, and (optionally) the rank of each step's start vertex.
pub fn render_svg(path: &DyckPath, opts: RenderOptions) -> String {
    let frame = path.frame();
    let (m, n) = (frame.m() as f64, frame.n() as f64);
    let c = opts.cell;
    let width = m * c + 2.0 * MARGIN;
    let height = n * c + 2.0 * MARGIN;
    // lattice (x, y) to SVG coordinates, y pointing up
    let px = |x: f64| MARGIN + x * c;
    let py = |y: f64| MARGIN + (n - y) * c;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, "  <title>Dyck path {path} in {frame}</title>");

    let _ = writeln!(
        s,
        r##"  <g class="grid" stroke="#bbbbbb" stroke-width="1">"##
    );
    for i in 0..=frame.m() {
        let x = px(i as f64);
        let _ = writeln!(
            s,
            r#"    <line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
            py(0.0),
            py(n)
        );
    }
    for j in 0..=frame.n() {
        let y = py(j as f64);
        let _ = writeln!(
            s,
            r#"    <line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#,
            px(0.0),
            px(m)
        );
    }
    let _ = writeln!(s, "  </g>");

    let _ = writeln!(
        s,
        r##"  <line class="diagonal" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#d62728" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
        px(0.0),
        py(0.0),
        px(m),
        py(n)
    );

    let mut points = vec![(0.0, 0.0)];
    let (mut x, mut y) = (0.0, 0.0);
    for step in path.steps() {
        match step {
            Step::North => y += 1.0,
            Step::East => x += 1.0,
        }
        points.push((x, y));
    }
    let coords: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    let _ = writeln!(
        s,
        r##"  <polyline class="path" points="{}" fill="none" stroke="#1f77b4" stroke-width="3" stroke-linejoin="round"/>"##,
        coords.join(" ")
    );

    if opts.ranks {
        let size = (c * 0.32).max(8.0);
        let _ = writeln!(
            s,
            r##"  <g class="ranks" font-family="sans-serif" font-size="{size}" fill="#000000">"##
        );
        for (&(x, y), rank) in points.iter().zip(path.ranks()) {
            let _ = writeln!(
                s,
                r#"    <text x="{}" y="{}">{rank}</text>"#,
                px(x) + 3.0,
                py(y) - 3.0
            );
        }
        let _ = writeln!(s, "  </g>");
    }
    let _ = writeln!(s, "</svg>");
    s
}
