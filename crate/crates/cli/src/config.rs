use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_BOUND: u64 = 64;
pub const DEFAULT_RANDOM_COUNT: usize = 1000;

/// Prime and semiprime fuzzy ideals over finite rings and the integers.
///
/// Exit codes: 0 ok, 1 other failure, 2 parse error, 3 resource limit,
/// 4 invalid fuzzy ideal, 5 constant fuzzy ideal, 6 failed check.
#[derive(Debug, Parser)]
#[command(name = "fuzzideal", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the two-sided ideals with primeness flags.
    Ideals,
    /// List the prime ideals.
    Primes,
    /// Decide every primeness notion for `--fuzzy`.
    Classify {
        /// Re-validate the witnesses of a saved classification report instead.
        #[arg(long, value_name = "FILE")]
        recheck: Option<PathBuf>,
    },
    /// Fuzzy prime radical of `--fuzzy`.
    Radical {
        /// Report R modulo the support of FRad(χ{0}) instead (unverified reading).
        #[arg(long)]
        experimental_ring_radical: bool,
    },
    /// Check the implication diagrams over a corpus.
    Diagram,
    /// Cross-check the characterizations of prime and semiprime fuzzy ideals.
    CheckCharprime,
    /// Check that semiprime fuzzy ideals are intersections of primes.
    CheckInter,
    /// Check the radical against intersections of primes and semiprimes.
    CheckFrad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Ring specification, e.g. "Mat(2, Zn(2))".
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Fuzzy ideal as a cut chain, e.g. "{1: <0>, 4/5: <2>, 3/5: <*>}".
    #[arg(long, global = true)]
    pub fuzzy: Option<String>,
    /// Largest ideal generator used over Z.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: u64,
    /// Corpus values, comma separated [default: 1,3/4,1/2,1/4,0].
    #[arg(long, global = true)]
    pub palette: Option<String>,
    /// Extra grid values for the intersection checks, comma separated.
    #[arg(long, global = true)]
    pub grid: Option<String>,
    /// Run over a corpus instead of a single `--fuzzy`.
    #[arg(long, global = true, value_enum)]
    pub corpus: Option<CorpusMode>,
    /// Seed for random corpora.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Members drawn for random corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_RANDOM_COUNT)]
    pub count: usize,
    /// Largest exhaustive corpus (also read from FUZZIDEAL_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads [default: all cores].
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}
