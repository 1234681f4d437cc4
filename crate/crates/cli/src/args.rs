//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hadastick",
    version,
    about = "Exact stick figures of lines in P^3 and Gorenstein point sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a Gorenstein point set with a given SI h-vector.
    Gorenstein(GorensteinArgs),
    /// Build the stick figure Z_{a,b} * L and check it.
    Stick(StickArgs),
    /// Hilbert function and h-vector of a point file.
    Hf(HfArgs),
    /// Check whether an h-vector is an SI-sequence with h_1 = 3.
    CheckSi(CheckSiArgs),
    /// Hadamard product of two projective points.
    Hadamard(HadamardArgs),
}

/// The configuration `A` and the index sets.
#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// Four points of P^1 as comma-separated "alpha/beta" pairs
    /// [default: 1/1,1/2,1/3,1/4].
    #[arg(long = "A", value_name = "POINTS", allow_hyphen_values = true)]
    pub a_points: Option<String>,
    /// Index set for the P family [default: 0,2,4,...].
    #[arg(long = "Ia", value_name = "LIST", value_delimiter = ',')]
    pub ia: Option<Vec<u64>>,
    /// Index set for the Q family [default: 0,2,4,...].
    #[arg(long = "Ib", value_name = "LIST", value_delimiter = ',')]
    pub ib: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PointFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct GorensteinArgs {
    /// SI h-vector, e.g. 1,3,4,3,1.
    #[arg(long = "h", value_name = "H")]
    pub h: String,
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Write the points here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PointFormat::Json)]
    pub format: PointFormat,
    /// Recompute the h-vector of the output and compare it with H.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, Args)]
pub struct StickArgs {
    /// Number of rows (lines per column).
    #[arg(long = "a")]
    pub a: usize,
    /// Number of columns (lines per row).
    #[arg(long = "b")]
    pub b: usize,
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Clone, Args)]
pub struct HfArgs {
    /// Point file (JSON or CSV).
    #[arg(long, short)]
    pub input: PathBuf,
    /// Input format; guessed from the extension or contents when omitted.
    #[arg(long, value_enum)]
    pub format: Option<PointFormat>,
    /// Report HF up to at least this degree.
    #[arg(long)]
    pub max_degree: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct CheckSiArgs {
    #[arg(long = "h", value_name = "H")]
    pub h: String,
}

#[derive(Debug, Clone, Args)]
pub struct HadamardArgs {
    /// Coordinates of the first point, comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    /// Coordinates of the second point.
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
}
