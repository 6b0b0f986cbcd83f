use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "numsg",
    version,
    about = "Numerical semigroup invariants, Leamer monoid irreducibles and verified witnesses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Generators, comma separated (e.g. 5,6)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub gens: Option<Vec<i64>>,

    /// Generalized arithmetic parameters a,h,d,k for <a, ah+d, ..., ah+kd>
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub genarith: Option<Vec<i64>>,

    /// Route all membership queries through the sieve oracle
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format (each subcommand supports a subset)
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, Frobenius number, genus and symmetry
    Info {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Apery set with respect to the multiplicity
    Apery {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Gaps (positive integers outside the semigroup)
    Gaps {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Whether the semigroup is symmetric
    Symmetric {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Membership and irreducibility of (n, ell) for the gap step s
    Leamer {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        ell: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Irreducible (n, 2) for one gap, or for every gap when --s is omitted
    Irreducibles {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        s: Option<i64>,
        /// Largest n examined (default 2F+1, past which nothing is irreducible)
        #[arg(long)]
        nmax: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Verified irreducible witness for one gap, or for every gap
    Witness {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        s: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Check every gap column and witness; prints the report line
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Verify a whole family of semigroups
    Scan(ScanArgs),
    /// Point cloud of irreducible (n, 2) over all gaps
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// key = value scan configuration file
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// genarith | list | symmetric
    #[arg(long)]
    pub family: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,

    /// Generator lists for the list family, e.g. "5,6; 6,10,15"
    #[arg(long)]
    pub list: Option<String>,

    /// Frobenius bound for the symmetric family
    #[arg(long)]
    pub fmax: Option<i64>,

    /// Keep non-symmetric semigroups
    #[arg(long)]
    pub all: bool,

    /// Keep only 3 <= k < a tuples
    #[arg(long)]
    pub eligible_only: bool,

    /// Worker threads (default: all cores)
    #[arg(long)]
    pub workers: Option<usize>,

    /// Run on the calling thread only
    #[arg(long)]
    pub sequential: bool,

    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub source: Source,

    #[arg(long)]
    pub nmax: Option<i64>,

    #[arg(long)]
    pub width: Option<f64>,
    #[arg(long)]
    pub height: Option<f64>,
    #[arg(long)]
    pub marker_radius: Option<f64>,
    #[arg(long)]
    pub point_color: Option<String>,
    #[arg(long)]
    pub overlay_color: Option<String>,

    #[command(flatten)]
    pub output: Output,
}
