use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "treedisc", version, about = "Tree discrepancy and k-sum subgraph experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate host and pattern files from a config.
    Gen(GenArgs),
    /// Run a pipeline on instance files and print its run record.
    Run(RunArgs),
    /// Check a claim exhaustively or on seeded samples.
    Verify(VerifyArgs),
    /// Run a matrix of pipeline cells and emit one row per cell.
    Sweep(SweepArgs),
    /// Run an exhaustive oracle.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    pub config: PathBuf,
    /// Output path stem; overrides `out` in the config.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overrides `seed` in the config.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    Maximize,
    Lead,
    LeadDense,
    Ksum,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(value_enum)]
    pub pipeline: Pipeline,
    #[arg(long)]
    pub host: PathBuf,
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Target colour for maximize; defaults to the largest class.
    #[arg(long)]
    pub colour: Option<u8>,
    /// Target sum for ksum: an integer or `sweep`.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub gadget_budget: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// lemma21, ex15, ex17, ex19, ex110, prop111, prop14 or thm112-small.
    pub claim: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// The claim's scale parameter.
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    pub config: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub restarts: Option<usize>,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Leave the wall-time column empty so reruns compare byte for byte.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleOp {
    MaxColour,
    ReachableSums,
    Embeddings,
    HamiltonCycles,
    HamiltonPaths,
    Sfactors,
    Trees,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub op: OracleOp,
    #[arg(long)]
    pub host: Option<PathBuf>,
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    #[arg(long)]
    pub colour: Option<u8>,
    /// Vertex count for trees and star factors.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub star_size: Option<usize>,
    /// Node cap for embedding enumeration.
    #[arg(long)]
    pub cap: Option<u128>,
    /// Sample this many trees instead of listing all labelled trees.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for cached oracle results.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}
