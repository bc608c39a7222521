use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "equikoszul",
    version,
    about = "Equivariant invariants of a finite group acting on a curve"
)]
pub struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    pub command: Command,

    /// Cover description (JSON).
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,

    /// Syzygy index `N` or inclusive range `A..B` (koszul, schur).
    #[arg(long, value_name = "N|A..B")]
    pub p: Option<IndexRange>,

    /// Power of the canonical bundle (euler).
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub m: u64,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    ChevalleyWeil,
    Euler,
    Koszul,
    Schur,
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::ChevalleyWeil => "chevalley-weil",
            Command::Euler => "euler",
            Command::Koszul => "koszul",
            Command::Schur => "schur",
            Command::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// An inclusive range of non-negative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub start: u64,
    pub end: u64,
}

impl IndexRange {
    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let number = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (start, end) = (number(a)?, number(b)?);
                if start > end {
                    return Err(format!("empty range {s}"));
                }
                Ok(IndexRange { start, end })
            }
            None => {
                let n = number(s)?;
                Ok(IndexRange { start: n, end: n })
            }
        }
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}
