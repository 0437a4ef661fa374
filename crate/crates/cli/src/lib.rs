//! The `sweepkit` command line: statistics, sweeping and inverting paths,
//! tableaux and their fibres, q,t-Catalan polynomials, SVG rendering,
//! benchmarks and exhaustive self-checks.
//!
//! Every command returns its output as a string so it can be driven from
//! tests; [`run`] is what the binary calls.

pub mod bench;
pub mod error;
pub mod input;
pub mod render;
pub mod verify;

use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sweepkit::fuss::{invert_fuss_as, tableau_to_sw, walk};
use sweepkit::path::enumerate_paths;
use sweepkit::qtcatalan::{catalan_qt, catalan_qt_via_bounce, catalan_step, path_count};
use sweepkit::reduction::{
    admissible_cut_ranks, fiber_by_bottom_rows, fiber_by_cutting, fiber_count, red,
};
use sweepkit::sweep::{bipartite_invert, brute_invert_sweep, en_word, sw_word, sweep};
use sweepkit::{DyckPath, EnWord, Frame, FussTableau, Sign, SwWord};

pub use error::{CliError, CliResult};
use input::{resolve_seed, PathArgs, SignArg, TableauArgs};

#[derive(Debug, Parser)]
#[command(
    name = "sweepkit",
    version,
    about = "Rational Dyck paths and the sweep map"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvertMethod {
    /// Tableau walk, linear time; Fuss frames only.
    Fuss,
    /// Rebuild from the SW and EN words.
    Bipartite,
    /// Search every path of the frame.
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FiberMethod {
    /// Reconstruct each member from its bottom row.
    Rows,
    /// Cut and lift the sweep preimage.
    Cut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CatalanMethod {
    /// Sum of q^dinv t^area.
    Dinv,
    /// Sum of q^area t^bounce.
    Bounce,
    /// One step down in n, weighted by ranks.
    Step,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks, area, coarea, dinv and the SW/EN words of a path.
    Stats(PathArgs),
    /// The sweep image of a path.
    Sweep(PathArgs),
    /// The sweep preimage of a path.
    Invert {
        #[command(flatten)]
        path: PathArgs,
        #[arg(long, value_enum, default_value = "fuss")]
        method: InvertMethod,
        /// EN word for bipartite inversion (the SW word comes from --word).
        #[arg(long)]
        en: Option<String>,
        /// SW word for bipartite inversion when --word holds the EN word.
        #[arg(long)]
        sw: Option<String>,
        /// Tableau shape for frames that are Fuss both ways.
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
    },
    /// The filled tableau of a path, with its walk and the preimage it spells.
    Tableau(TableauArgs),
    /// Drop the first column of a tableau.
    Red(TableauArgs),
    /// Every tableau one column wider that reduces to the given one.
    Fiber {
        #[command(flatten)]
        tableau: TableauArgs,
        #[arg(long, value_enum, default_value = "rows")]
        method: FiberMethod,
    },
    /// The higher q,t-Catalan polynomial of (kn+1, n).
    Catalan {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "dinv")]
        method: CatalanMethod,
    },
    /// Number of Dyck paths in a frame.
    Count {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Also enumerate and report the enumerated total.
        #[arg(long)]
        enumerate: bool,
    },
    /// Draw a path as SVG.
    Render {
        #[command(flatten)]
        path: PathArgs,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        no_ranks: bool,
        #[arg(long, default_value_t = 40.0)]
        cell: f64,
    },
    /// Time the linear-time inverse; CSV on standard output.
    Bench {
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long, value_delimiter = ',', default_value = "250000,500000,1000000")]
        sizes: Vec<u64>,
        #[arg(long, default_value_t = 3)]
        reps: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the exhaustive checks on every frame up to a size bound.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_steps: u64,
    },
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn path_json(p: &DyckPath) -> Value {
    json!({ "m": p.frame().m(), "n": p.frame().n(), "steps": p.to_string() })
}

fn sign_for(frame: &Frame, forced: Option<SignArg>) -> CliResult<Sign> {
    match forced {
        Some(s) => Ok(s.into()),
        None => Ok(frame
            .fuss()
            .ok_or(sweepkit::Error::NotFuss {
                m: frame.m(),
                n: frame.n(),
            })?
            .sign),
    }
}

/// The path's own steps spelled with `S` and `W`: the order in which the
/// inversion visits them.
pub fn visit_word(p: &DyckPath) -> String {
    p.steps()
        .iter()
        .map(|s| if s.is_north() { 'S' } else { 'W' })
        .collect()
}

pub fn stats(path: &DyckPath) -> Value {
    let frame = path.frame();
    let fuss: Vec<Value> = frame
        .fuss_classes()
        .iter()
        .map(|f| json!({ "k": f.k, "sign": f.sign.as_i8() }))
        .collect();
    json!({
        "m": frame.m(),
        "n": frame.n(),
        "steps": path.to_string(),
        "ranks": path.ranks(),
        "rank_sequence": path.rank_sequence().values(),
        "area": path.area(),
        "coarea": path.coarea().ok(),
        "dinv": path.dinv(),
        "sw": sw_word(path).to_string(),
        "en": en_word(path).to_string(),
        "fuss": fuss,
    })
}

pub fn invert(
    spec: &PathArgs,
    method: InvertMethod,
    en: Option<&str>,
    sw: Option<&str>,
    sign: Option<SignArg>,
) -> CliResult<Value> {
    let frame = spec.frame()?;
    let pre = match method {
        InvertMethod::Fuss => invert_fuss_as(&spec.path()?, sign_for(&frame, sign)?)?,
        InvertMethod::Brute => brute_invert_sweep(&spec.path()?)?,
        InvertMethod::Bipartite => {
            let sw_word = match sw {
                Some(w) => SwWord::parse(frame, w)?,
                None => spec.sw()?,
            };
            let en_word = match (en, spec.en()?) {
                (Some(w), _) => EnWord::parse(frame, w)?,
                (None, Some(e)) => e,
                (None, None) => {
                    return Err(CliError::Input(
                        "bipartite inversion needs the EN word (--en)".into(),
                    ))
                }
            };
            bipartite_invert(&sw_word, &en_word)?.0
        }
    };
    let mut out = path_json(&pre);
    out["visit"] = json!(visit_word(&pre));
    out["bounce"] = json!(pre.area());
    Ok(out)
}

pub fn tableau_report(t: &FussTableau) -> CliResult<Value> {
    let path = tableau_to_sw(t).to_path();
    let pre = invert_fuss_as(&path, t.sign())?;
    Ok(json!({
        "tableau": t,
        "path": path_json(&path),
        "walk": walk(t)?.to_string(),
        "preimage": path_json(&pre),
        "preimage_visit": visit_word(&pre),
    }))
}

fn fiber_member(t: &FussTableau, cut_rank: Option<i64>) -> CliResult<Value> {
    let path = tableau_to_sw(t).to_path();
    let pre = invert_fuss_as(&path, Sign::Plus)?;
    let mut v = json!({
        "tableau": t,
        "path": path.to_string(),
        "area": path.area(),
        "bounce": pre.area(),
    });
    if let Some(r) = cut_rank {
        v["cut_rank"] = json!(r);
    }
    Ok(v)
}

pub fn fiber(t: &FussTableau, method: FiberMethod) -> CliResult<Value> {
    let members: Vec<Value> = match method {
        FiberMethod::Rows => fiber_by_bottom_rows(t)?
            .iter()
            .map(|m| fiber_member(m, None))
            .collect::<CliResult<_>>()?,
        FiberMethod::Cut => {
            let reduced = tableau_to_sw(t).to_path();
            let ranks = admissible_cut_ranks(&invert_fuss_as(&reduced, Sign::Plus)?);
            fiber_by_cutting(t)?
                .iter()
                .zip(ranks)
                .map(|(d, r)| {
                    let member = sweepkit::fuss::fill_tableau_as(&SwWord::of_path(d), Sign::Plus)?;
                    fiber_member(&member, Some(r))
                })
                .collect::<CliResult<_>>()?
        }
    };
    Ok(json!({ "count": fiber_count(t), "members": members }))
}

pub fn catalan(k: u64, n: u64, method: CatalanMethod) -> CliResult<Value> {
    let poly = match method {
        CatalanMethod::Dinv => catalan_qt(k, n)?,
        CatalanMethod::Bounce => catalan_qt_via_bounce(k, n)?,
        CatalanMethod::Step => catalan_step(k, n)?,
    };
    Ok(json!({
        "k": k,
        "n": n,
        "polynomial": poly.to_string(),
        "terms": poly,
        "at_one": poly.eval_one().to_string(),
    }))
}

pub fn count(m: u64, n: u64, enumerate: bool) -> CliResult<Value> {
    let frame = Frame::new(m, n)?;
    let mut out = json!({ "m": m, "n": n, "count": path_count(&frame).to_string() });
    if enumerate {
        out["enumerated"] = json!(enumerate_paths(frame).count());
    }
    Ok(out)
}

/// Run one command and return what it prints.
pub fn run(cli: Cli) -> CliResult<String> {
    let text = match cli.command {
        Command::Stats(spec) => pretty(&stats(&spec.path()?)),
        Command::Sweep(spec) => {
            let p = spec.path()?;
            let mut v = path_json(&sweep(&p));
            v["sw"] = json!(sw_word(&p).to_string());
            v["en"] = json!(en_word(&p).to_string());
            pretty(&v)
        }
        Command::Invert {
            path,
            method,
            en,
            sw,
            sign,
        } => pretty(&invert(&path, method, en.as_deref(), sw.as_deref(), sign)?),
        Command::Tableau(args) => pretty(&tableau_report(&args.tableau()?)?),
        Command::Red(args) => pretty(&red(&args.tableau()?)?),
        Command::Fiber { tableau, method } => pretty(&fiber(&tableau.tableau()?, method)?),
        Command::Catalan { k, n, method } => pretty(&catalan(k, n, method)?),
        Command::Count { m, n, enumerate } => pretty(&count(m, n, enumerate)?),
        Command::Render {
            path,
            out,
            no_ranks,
            cell,
        } => {
            if !(cell.is_finite() && cell > 0.0) {
                return Err(CliError::Input("--cell must be a positive number".into()));
            }
            let svg = render::render_svg(
                &path.path()?,
                render::RenderOptions {
                    cell,
                    ranks: !no_ranks,
                },
            );
            match out {
                Some(file) => {
                    fs::write(&file, svg)
                        .map_err(|e| CliError::io(format!("writing {file}"), e))?;
                    String::new()
                }
                None => svg,
            }
        }
        Command::Bench {
            k,
            sizes,
            reps,
            seed,
        } => bench::to_csv(&bench::run(k, &sizes, reps, resolve_seed(seed)?)?),
        Command::Verify { max_steps } => {
            let report = verify::run(max_steps);
            if !report.ok() {
                eprintln!("{}", pretty(&report));
                return Err(CliError::Verify(report.failures));
            }
            pretty(&report)
        }
    };
    Ok(text)
}
