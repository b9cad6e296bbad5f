use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "superpi", version, about = "Superalgebras with graded involution: constructions, Capelli thresholds, codimensions")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Largest codimension degree computed without refusing.
    #[arg(long, global = true, default_value_t = 6)]
    pub cap_n: usize,
    /// Largest enumeration size attempted without refusing.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub cap_evals: u128,
    /// Prime (> 2^30) used to cross-check exhaustive searches and ranks.
    #[arg(long, global = true)]
    pub mod_p: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed of the randomized witness search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file (algebra JSON for build/ut, CSV otherwise). Defaults to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one of the simple families and write it as JSON.
    Build(BuildArgs),
    /// Build a block-triangular algebra from simple components.
    Ut(UtArgs),
    /// Homogeneous symmetric/skew dimensions.
    Dims(AlgebraArg),
    /// Capelli threshold for one kind of variables.
    Threshold(ThresholdArgs),
    /// Decide a Capelli polynomial or a generator set.
    Identity(IdentityArgs),
    /// Graded (or ordinary) codimensions up to a degree.
    Codim(CodimArgs),
    /// Admissible exponent.
    Exponent(AlgebraArg),
    /// Run the verification suites and report every check.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    MhlT,
    MhhS,
    MhlExc,
    MnCmn,
    MnCmnExc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiamondArg {
    T,
    S,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "minus")]
    pub sign: SignArg,
    #[arg(long, value_enum, default_value = "t")]
    pub diamond: DiamondArg,
}

#[derive(Debug, Args)]
pub struct UtArgs {
    /// JSON file `{"components": ["MHL_T(1,0)", ...], "grading": [0, 1]}`.
    #[arg(long, conflicts_with_all = ["component", "grading"])]
    pub spec: Option<PathBuf>,
    /// Component such as `MHL_T(1,1)`; repeat in block order.
    #[arg(long = "component")]
    pub component: Vec<String>,
    /// Grading shifts, comma separated (e.g. `0,1`).
    #[arg(long)]
    pub grading: Option<String>,
}

#[derive(Debug, Args)]
pub struct AlgebraArg {
    /// Algebra in the JSON interchange format.
    pub algebra: PathBuf,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    pub algebra: PathBuf,
    /// y+, y-, z+, z- or x (ordinary).
    #[arg(long)]
    pub kind: String,
    #[arg(long, default_value_t = 8)]
    pub cap: usize,
    /// Require only the undeleted Capelli polynomial at each rank.
    #[arg(long)]
    pub unbarred: bool,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    pub algebra: PathBuf,
    /// Capelli rank.
    #[arg(long, required_unless_present = "gamma")]
    pub rank: Option<usize>,
    #[arg(long, default_value = "x")]
    pub kind: String,
    /// Deleted gaps (1-based, comma separated).
    #[arg(long)]
    pub deleted: Option<String>,
    /// Check the whole barred set of the given rank.
    #[arg(long)]
    pub barred: bool,
    /// Generator set of ranks `M+,M-,L+,L-`.
    #[arg(long, conflicts_with_all = ["rank", "deleted", "barred"])]
    pub gamma: Option<String>,
}

#[derive(Debug, Args)]
pub struct CodimArgs {
    pub algebra: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Ordinary codimensions instead of graded ones.
    #[arg(long)]
    pub ordinary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Dims,
    Thresholds,
    Sandwich,
    Peirce,
    Exponent,
    Counterexamples,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
}
