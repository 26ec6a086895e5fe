//! Command-line surface: one subcommand per operation, shared run flags.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use jacring::DEFAULT_PRIME;

#[derive(Parser)]
#[command(
    name = "jacring",
    version,
    about = "Exact invariants of graded Jacobian rings: Hilbert functions, \
             Lefschetz witnesses, Hodge numbers, Yukawa ranks, degenerations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Graded dimensions of the Jacobian quotient (or of a given ideal).
    Hilbert(HilbertArgs),
    /// Primitive Hodge numbers of a smooth hypersurface.
    Hodge(HodgeArgs),
    /// Test or search for a Weak/Strong Lefschetz witness.
    Lefschetz(LefschetzArgs),
    /// Rank of the n-fold Yukawa map; maximal-variation verdict.
    Yukawa(YukawaArgs),
    /// Rank of the period-map differential (infinitesimal Torelli).
    Torelli(TorelliArgs),
    /// Numerical classification of a smooth complete intersection.
    Classify(ClassifyArgs),
    /// Scan a pencil F_t over a list of t values.
    #[command(name = "family-scan")]
    FamilyScan(FamilyScanArgs),
    /// Total Tjurina number via Hilbert-function stabilization.
    Tjurina(TjurinaArgs),
    /// Graded rank drop of one degree slice against the smooth reference.
    Delta(DeltaArgs),
}

/// Flags shared by every subcommand; echoed in each report's config.
#[derive(Args, Clone)]
pub struct CommonArgs {
    /// Prime modulus for the coefficient field.
    #[arg(long, global = false, env = "JACRING_PRIME", default_value_t = DEFAULT_PRIME)]
    pub prime: u64,

    /// Compute over exact rationals instead of a prime field.
    #[arg(long, conflicts_with = "multi_prime")]
    pub rational: bool,

    /// Run at three independent primes and require agreement.
    #[arg(long)]
    pub multi_prime: bool,

    /// Seed for every randomized search.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Number of random candidates per randomized search.
    #[arg(long, default_value_t = 8)]
    pub samples: u32,

    /// Degree budget where a command scans upward (hilbert truncation,
    /// lefschetz top-degree cap, tjurina headroom above the socle).
    #[arg(long)]
    pub degree_cap: Option<i64>,

    /// Worker threads for family-scan; 1 scans serially.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// A polynomial with optional explicit ring shape.
#[derive(Args, Clone)]
pub struct PolyArgs {
    /// The form F, e.g. "x0^4+x1^4+x2^4+x3^4".
    #[arg(long)]
    pub poly: String,

    /// Number of variables; inferred from the text when omitted.
    #[arg(long)]
    pub vars: Option<usize>,

    /// Comma-separated positive weights; all 1 when omitted.
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["poly", "ideal"])))]
pub struct HilbertArgs {
    /// Form whose Jacobian ideal is quotiented out.
    #[arg(long)]
    pub poly: Option<String>,

    /// Semicolon-separated homogeneous generators, replacing the
    /// Jacobian ideal.
    #[arg(long)]
    pub ideal: Option<String>,

    #[arg(long)]
    pub vars: Option<usize>,

    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct HodgeArgs {
    #[command(flatten)]
    pub input: PolyArgs,

    /// Dimension n of the hypersurface.
    #[arg(long)]
    pub dim: u32,

    /// Report raw graded dimensions without the smoothness certificate.
    #[arg(long)]
    pub raw: bool,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["poly", "ideal"])))]
pub struct LefschetzArgs {
    /// Form whose Jacobian ideal is quotiented out.
    #[arg(long)]
    pub poly: Option<String>,

    /// Semicolon-separated homogeneous generators, replacing the
    /// Jacobian ideal.
    #[arg(long)]
    pub ideal: Option<String>,

    #[arg(long)]
    pub vars: Option<usize>,

    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u32>>,

    /// Strong (reflections and consecutive steps) or weak (consecutive
    /// steps only).
    #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
    pub mode: ModeArg,

    /// Test this fixed linear form instead of searching.
    #[arg(long)]
    pub witness: Option<String>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct YukawaArgs {
    #[command(flatten)]
    pub input: PolyArgs,

    /// Dimension n of the hypersurface.
    #[arg(long)]
    pub dim: u32,

    /// Evaluate this one Kodaira-Spencer class instead of maximizing.
    #[arg(long)]
    pub class: Option<String>,

    /// Evaluation strategy for --class; chosen automatically when omitted.
    #[arg(long, value_enum, requires = "class")]
    pub path: Option<PathArg>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct TorelliArgs {
    #[command(flatten)]
    pub input: PolyArgs,

    /// Dimension n of the hypersurface.
    #[arg(long)]
    pub dim: u32,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct ClassifyArgs {
    /// Dimension n of the complete intersection.
    #[arg(long)]
    pub dim: u32,

    /// Comma-separated multidegree d_1,...,d_c.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<i64>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct FamilyScanArgs {
    /// Pencil in the variables and the parameter t,
    /// e.g. "x0^4+x1^4+x2^4+x3^4-t*x0^2*x1^2".
    #[arg(long)]
    pub family: String,

    /// Number of variables; inferred from the text when omitted.
    #[arg(long)]
    pub vars: Option<usize>,

    /// Comma-separated t values, integers or rationals like 3/2.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t_values: Vec<String>,

    /// Degree for the per-fiber rank-drop column; defaults to the
    /// smallest generator degree.
    #[arg(long)]
    pub delta_degree: Option<i64>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct TjurinaArgs {
    #[command(flatten)]
    pub input: PolyArgs,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub input: PolyArgs,

    /// Degree of the slice to compare against the smooth reference.
    #[arg(long)]
    pub degree: i64,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strong,
    Weak,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    /// Expand xi^n, then one multiplication matrix.
    Expanded,
    /// Compose the n step maps.
    Composed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}
