use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const JOBS_ENV: &str = "LYNDON_LZ_JOBS";

#[derive(Debug, Parser)]
#[command(
    name = "lyndon-lz",
    version,
    about = "Lyndon and LZ factorizations, domains and the m < 2z bound"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, short = 'f', value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lyndon factorization grouped into runs.
    Lyndon(InputArgs),
    /// Non-overlapping LZ factorization.
    Lz(InputArgs),
    /// All domains, tandem domains and p-groups.
    Domains(InputArgs),
    /// Canonical decomposition and boundary budget of dom_D(F_I).
    Canonical {
        #[arg(long, value_name = "I")]
        run: usize,
        #[arg(long, value_name = "D")]
        order: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run every structural check plus the partition bound.
    Verify {
        /// Also compare both factorizations against the brute-force oracles.
        #[arg(long)]
        oracle_check: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Member s_K of the lower-bound family.
    Family {
        #[arg(long, short)]
        k: usize,
        /// Compare against the closed forms and the phrase recurrence.
        #[arg(long)]
        check: bool,
    },
    /// Exhaustive search over all strings up to a length.
    Search(SearchArgs),
    /// Extended-domain partition and the bound z >= ⌈(m + t)/2⌉.
    Partition(InputArgs),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=26))]
    pub sigma: u64,
    #[arg(long)]
    pub max_len: usize,
    #[arg(long, default_value_t = 1)]
    pub min_len: usize,
    /// Keep one string per relabeling class.
    #[arg(long)]
    pub dedupe: bool,
    /// Run the lemma checks and the partition bound on every string.
    #[arg(long)]
    pub verify: bool,
    /// Worker threads; defaults to one per core.
    #[arg(long, short, env = JOBS_ENV)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input string. Read from standard input when neither this nor --file is given.
    #[arg(conflicts_with = "file")]
    pub text: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Drop one trailing line terminator (default for standard input).
    #[arg(long, conflicts_with = "keep_newline")]
    pub strip_newline: bool,
    /// Keep a trailing line terminator even on standard input.
    #[arg(long)]
    pub keep_newline: bool,
}
