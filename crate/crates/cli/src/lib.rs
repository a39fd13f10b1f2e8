//! Command-line harness: per-graph queries, theorem campaigns over corpora,
//! discharging reports and family generation.

pub mod campaign;
pub mod commands;
pub mod source;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use campaign::{run_campaign, CampaignRecord, CampaignReport, Summary, Theorem};
pub use commands::{cmd_discharge, cmd_gen, cmd_query, DischargeReport, QueryRequest};
pub use source::{CorpusItem, Input};

#[derive(Debug, Parser)]
#[command(name = "pcflab", version, about = "Odd and proper conflict-free coloring laboratory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for corpus processing (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Per-graph solver budget in milliseconds.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub budget_ms: u64,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute quantities of a single graph.
    Query(QueryArgs),
    /// Check a theorem's statement on a corpus.
    Verify(VerifyArgs),
    /// Run a discharging rule set and audit the final charges.
    Discharge(DischargeArgs),
    /// Print family members or enumerated graphs.
    Gen(GenArgs),
}

/// Where a single graph comes from.
#[derive(Debug, Args, Clone, Default)]
pub struct SourceArgs {
    /// A graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// A family spec such as `sk:6`, `ht:1,1,3` or `rand:10:22/9:42`.
    #[arg(long)]
    pub family: Option<String>,
    /// A file in the planegraph text format.
    #[arg(long)]
    pub plane: Option<PathBuf>,
    /// A named plane fixture such as `dodecahedron` or `subdiv:1:cube`.
    #[arg(long)]
    pub plane_family: Option<String>,
    /// Read graph6 from standard input.
    #[arg(long)]
    pub stdin: bool,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub mad: bool,
    #[arg(long)]
    pub chi_odd: bool,
    #[arg(long)]
    pub chi_pcf: bool,
    #[arg(long)]
    pub chi_proper: bool,
    /// Extremal-class membership (bad structures and 5-cycle-block components).
    #[arg(long)]
    pub classes: bool,
    /// Reducible configurations for a context: odd4, pcf:<c>, odd:<c>, planar6.
    #[arg(long)]
    pub detect: Option<String>,
    /// Discharging rule set to run (see `discharge --help`).
    #[arg(long)]
    pub discharge: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    /// mad ≤ 4c/(c+2): PCF c-colorable unless a bad structure is present.
    PcfMad,
    /// mad ≤ 22/9: odd 4-colorable unless a 5-cycle-block component is present.
    Odd4Mad,
    /// mad ≤ 4c/(c+2): odd c-colorable unless a bad structure is present.
    OddMad,
    /// Plane graphs without 4⁻-cycles adjacent to 7⁻-cycles are odd 6-colorable.
    PlanarOdd6,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    /// Number of colors for the mad theorems with a parameter.
    #[arg(long)]
    pub c: Option<usize>,
    /// All connected graphs on at most this many vertices.
    #[arg(long)]
    pub exhaustive: Option<usize>,
    /// Allow exhaustive enumeration beyond 7 vertices.
    #[arg(long)]
    pub allow_large: bool,
    /// Family specs (repeatable).
    #[arg(long)]
    pub family: Vec<String>,
    /// Graph6 strings (repeatable).
    #[arg(long)]
    pub graph6: Vec<String>,
    /// Plane graph files (repeatable).
    #[arg(long)]
    pub plane: Vec<PathBuf>,
    /// Named plane fixtures (repeatable).
    #[arg(long)]
    pub plane_family: Vec<String>,
    /// Read graph6 lines from standard input.
    #[arg(long)]
    pub stdin: bool,
    /// Run the solver even when a bad structure already decides the answer.
    #[arg(long)]
    pub no_shortcut: bool,
    /// Also write a CSV summary row per graph.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DischargeArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// odd4, pcf5, pcf:<c>, odd:<c>[:<eps>] or planar6.
    #[arg(long)]
    pub rules: String,
    /// Audit bound (defaults to the rule set's target).
    #[arg(long)]
    pub bound: Option<String>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub plane_family: Option<String>,
    /// All connected graphs on at most this many vertices, as graph6 lines.
    #[arg(long)]
    pub enumerate: Option<usize>,
    /// Keep only graphs with mad at most this value.
    #[arg(long)]
    pub mad_max: Option<String>,
    /// Output JSON instead of graph6 / planegraph text.
    #[arg(long)]
    pub json: bool,
}

/// Runs a parsed command line. Returns the process exit code.
pub fn run(cli: Cli) -> anyhow::Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool.build()?;
    pool.install(|| commands::dispatch(&cli))
}
