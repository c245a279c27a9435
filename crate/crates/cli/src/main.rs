//! `kappa`: density-based clustering quality from the command line.
//!
//! Machine-readable CSV goes to stdout, everything meant for humans to
//! stderr.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kappa::harness::{NullGraph, StressAxis};
use kappa::rng::DEFAULT_SEED;
use kappa::stats::DEFAULT_RUNS;

/// Exit code for invalid command lines (sysexits `EX_USAGE`), kept apart
/// from the verdict codes 2 and 3.
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "kappa", version, about = "Density-based graph clustering quality assessment")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Draw a fresh seed from the clock instead (it is printed to stderr).
    #[arg(long, global = true, conflicts_with = "seed")]
    pub random_seed: bool,
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output directory for generated files.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Density family, conductance and modularity of one clustering.
    Density(DensityArgs),
    /// Full assessment: condition 1 plus the Monte-Carlo t-test.
    Assess(AssessArgs),
    /// Rank several clusterings of one graph.
    Compare(CompareArgs),
    /// Generate a synthetic graph with its planted labels.
    Gen(GenArgs),
    /// Null distribution of gamma under random relabeling.
    Null(NullArgs),
    /// Planted-partition stress tables.
    Stress(StressArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge list: `u v` or `u v w` per line, `#` comments.
    pub graph: PathBuf,
    /// Drop `u u` lines instead of rejecting them.
    #[arg(long)]
    pub drop_self_loops: bool,
    /// Use the weight column (otherwise weights are ignored).
    #[arg(long)]
    pub weighted: bool,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `vertex cluster` per line.
    pub labels: PathBuf,
}

#[derive(Debug, Args)]
pub struct AssessArgs {
    #[command(flatten)]
    pub input: InputArgs,
    pub labels: PathBuf,
    /// Monte-Carlo relabelings.
    #[arg(long, default_value_t = DEFAULT_RUNS)]
    pub runs: usize,
    /// Significance level for a `good` verdict.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Two or more label files.
    #[arg(required = true, num_args = 2..)]
    pub labels: Vec<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_RUNS)]
    pub runs: usize,
}

#[derive(Debug, Args)]
#[group(id = "kind", multiple = false)]
pub struct GenKind {
    /// Planted partition (default).
    #[arg(long)]
    pub planted: bool,
    /// Erdős–Rényi G(n, p).
    #[arg(long)]
    pub er: bool,
    /// Connected caveman ring.
    #[arg(long)]
    pub caveman: bool,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub kind: GenKind,
    /// File name stem for `.edges`, `.labels` and `.meta`.
    #[arg(long, default_value = "graph")]
    pub name: String,
    #[arg(long, default_value_t = 200)]
    pub clusters: usize,
    #[arg(long, default_value_t = 2)]
    pub min_size: usize,
    #[arg(long, default_value_t = 100)]
    pub max_size: usize,
    /// Explicit comma-separated cluster sizes (overrides the size range).
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0.5)]
    pub p_intra: f64,
    #[arg(long, default_value_t = 0.0)]
    pub p_inter: f64,
    /// Attach the generating probability as edge weight.
    #[arg(long)]
    pub weighted: bool,
    /// Vertices (Erdős–Rényi).
    #[arg(long, default_value_t = 1000)]
    pub vertices: usize,
    /// Edge probability (Erdős–Rényi).
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub p: f64,
    /// Number of cliques (caveman).
    #[arg(long, default_value_t = 10)]
    pub cliques: usize,
    /// Clique size (caveman).
    #[arg(long, default_value_t = 100)]
    pub clique_size: usize,
}

#[derive(Debug, Args)]
pub struct NullArgs {
    /// ER or CC; repeat for both (default: both).
    #[arg(long = "graph", value_parser = parse_null_graph)]
    pub graphs: Vec<NullGraph>,
    #[arg(long, value_delimiter = ',', default_values_t = [12, 24])]
    pub clusters: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [35, 100, 1000])]
    pub runs: Vec<usize>,
    /// Also render histograms as SVG.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Both,
    Unweighted,
    Weighted,
}

#[derive(Debug, Args)]
pub struct StressArgs {
    /// One axis, or all four when omitted.
    #[arg(long, value_parser = parse_axis)]
    pub axis: Option<StressAxis>,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    pub mode: Mode,
    /// Fraction of the 200 clusters to generate (0.1 runs in seconds).
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    /// Also write the four modularity breakdown cases.
    #[arg(long)]
    pub cases: bool,
    /// Print every per-cell comparison, not just misses.
    #[arg(long)]
    pub verbose: bool,
}

fn parse_axis(s: &str) -> Result<StressAxis, String> {
    s.parse()
}

fn parse_null_graph(s: &str) -> Result<NullGraph, String> {
    s.parse()
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
