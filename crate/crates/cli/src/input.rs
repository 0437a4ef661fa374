//! Turning command-line arguments into paths, words and tableaux.

use std::fs;
use std::io::{self, Read};

use clap::{Args, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use sweepkit::fuss::fill_tableau_as;
use sweepkit::path::random_path;
use sweepkit::{DyckPath, EnWord, Frame, FussTableau, Sign, SwWord};

use crate::error::{CliError, CliResult};

pub const SEED_ENV: &str = "SWEEPKIT_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WordKind {
    /// North/East steps of the path itself.
    Ne,
    /// An SW word; it spells the path whose preimage is sought.
    Sw,
    /// An EN word; only meaningful for bipartite inversion.
    En,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PathArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    /// The path as a word; omit together with --random.
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long, value_enum, default_value = "ne")]
    pub word_kind: WordKind,
    /// Draw a uniformly random path of the frame instead of reading --word.
    #[arg(long, conflicts_with = "word")]
    pub random: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl PathArgs {
    pub fn frame(&self) -> CliResult<Frame> {
        Ok(Frame::new(self.m, self.n)?)
    }

    pub fn path(&self) -> CliResult<DyckPath> {
        let frame = self.frame()?;
        if self.random {
            let mut rng = StdRng::seed_from_u64(resolve_seed(self.seed)?);
            return Ok(random_path(frame, &mut rng));
        }
        let word = self
            .word
            .as_deref()
            .ok_or_else(|| CliError::Input("either --word or --random is required".into()))?;
        match self.word_kind {
            WordKind::Ne => Ok(DyckPath::parse(frame, word)?),
            WordKind::Sw => Ok(SwWord::parse(frame, word)?.to_path()),
            WordKind::En => Err(CliError::Input(
                "an EN word alone does not determine a path; pass it with --en".into(),
            )),
        }
    }

    pub fn sw(&self) -> CliResult<SwWord> {
        Ok(SwWord::of_path(&self.path()?))
    }

    pub fn en(&self) -> CliResult<Option<EnWord>> {
        match (&self.word, self.word_kind) {
            (Some(w), WordKind::En) => Ok(Some(EnWord::parse(self.frame()?, w)?)),
            _ => Ok(None),
        }
    }
}

/// `SWEEPKIT_SEED` wins over `--seed` when set.
pub fn resolve_seed(flag: u64) -> CliResult<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

/// Inline JSON when the value starts with `{`, standard input for `-`, a file otherwise.
pub fn read_json_arg(value: &str) -> CliResult<String> {
    let trimmed = value.trim_start();
    if trimmed.starts_with('{') {
        return Ok(value.to_string());
    }
    if value == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::io("reading standard input", e))?;
        return Ok(buf);
    }
    fs::read_to_string(value).map_err(|e| CliError::io(format!("reading {value}"), e))
}

pub fn parse_tableau(json: &str) -> CliResult<FussTableau> {
    serde_json::from_str(json).map_err(|e| CliError::Input(format!("bad tableau JSON: {e}")))
}

#[derive(Debug, Clone, Args)]
pub struct TableauArgs {
    /// Tableau JSON: inline, `-` for stdin, or a file path.
    #[arg(long, conflicts_with_all = ["m", "n", "word", "random"])]
    pub tableau_json: Option<String>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long, value_enum, default_value = "ne")]
    pub word_kind: WordKind,
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Force the tableau shape when the frame is Fuss both ways (n ≤ 2).
    #[arg(long, value_enum)]
    pub sign: Option<SignArg>,
}

impl TableauArgs {
    pub fn tableau(&self) -> CliResult<FussTableau> {
        if let Some(src) = &self.tableau_json {
            return parse_tableau(&read_json_arg(src)?);
        }
        let (m, n) = match (self.m, self.n) {
            (Some(m), Some(n)) => (m, n),
            _ => {
                return Err(CliError::Input(
                    "give --tableau-json, or --m and --n with --word or --random".into(),
                ))
            }
        };
        let spec = PathArgs {
            m,
            n,
            word: self.word.clone(),
            word_kind: self.word_kind,
            random: self.random,
            seed: self.seed,
        };
        let sw = spec.sw()?;
        let frame = spec.frame()?;
        let sign = match self.sign {
            Some(s) => s.into(),
            None => frame
                .fuss()
                .map(|f| f.sign)
                .ok_or(sweepkit::Error::NotFuss { m, n })?,
        };
        Ok(fill_tableau_as(&sw, sign)?)
    }
}
