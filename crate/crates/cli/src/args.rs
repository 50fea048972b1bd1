use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cgsum",
    version,
    about = "Exact Clebsch-Gordan/3j sum-rule verification"
)]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clebsch-Gordan coefficient <j1 m1 j2 m2|j3 m3>.
    #[command(allow_negative_numbers = true)]
    Cg {
        /// 2j1 2m1 2j2 2m2 2j3 2m3
        #[arg(required = true, num_args = 6, value_names = ["2J1", "2M1", "2J2", "2M2", "2J3", "2M3"])]
        values: Vec<i64>,
    },
    /// Wigner 3j symbol (j1 j2 j3; m1 m2 m3).
    #[command(allow_negative_numbers = true)]
    Threej {
        /// 2j1 2j2 2j3 2m1 2m2 2m3
        #[arg(required = true, num_args = 6, value_names = ["2J1", "2J2", "2J3", "2M1", "2M2", "2M3"])]
        values: Vec<i64>,
    },
    /// Verify the sum rule and write a report.
    Sumrule(SumruleArgs),
    /// Tabulate a generalized character by two independent routes.
    #[command(allow_negative_numbers = true)]
    Char {
        #[arg(long)]
        two_j: i64,
        #[arg(long, default_value_t = 0)]
        k: i64,
        /// Number of angles 2πt/(T+1), t = 1..=T.
        #[arg(long, default_value_t = 8)]
        omega_grid: usize,
    },
    /// Check the supporting integral identities exactly.
    IntegralsCheck,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct SumruleArgs {
    #[arg(
        long,
        conflicts_with = "two_j_max",
        required_unless_present = "two_j_max"
    )]
    pub two_j: Option<i64>,
    #[arg(long)]
    pub two_j_max: Option<i64>,
    /// A single order, or "all" for 0..=2j+k_extra.
    #[arg(long, default_value = "all")]
    pub k: KSelection,
    /// How far past 2j to run k when --k all.
    #[arg(long, default_value_t = 2)]
    pub k_extra: u64,
    #[arg(long, value_enum, default_value_t = FormArg::Both)]
    pub form: FormArg,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KSelection {
    All,
    One(u64),
}

impl FromStr for KSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(KSelection::All);
        }
        s.parse()
            .map(KSelection::One)
            .map_err(|_| format!("expected a non-negative integer or \"all\", got {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Cg,
    #[value(name = "3j", alias = "threej")]
    ThreeJ,
    Both,
}

impl FormArg {
    pub fn as_str(self) -> &'static str {
        match self {
            FormArg::Cg => "cg",
            FormArg::ThreeJ => "3j",
            FormArg::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}
