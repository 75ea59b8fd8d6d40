//! `tabdyn`: promotion, evacuation and homomesy from the command line.
//!
//! Exit status: 0 success, 1 homomesy violated, 2 parse error, 3 failed
//! precondition, 4 enumeration budget exceeded.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tableau_dynamics::Error;

#[derive(Parser, Debug)]
#[command(
    name = "tabdyn",
    version,
    about = "Promotion, evacuation and homomesy on tableaux and posets"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

/// Where a tableau comes from.
#[derive(Args, Debug, Clone)]
pub struct TableauSource {
    /// Inline rows separated by `/`, e.g. `1123/3344/55` or `1 2 5/3 4 7`.
    #[arg(long, short = 't')]
    pub tableau: Option<String>,
    /// File in the `k=` text format; `-` reads standard input.
    #[arg(long, short = 'i')]
    pub input: Option<String>,
    /// Ceiling `k`; defaults to the largest entry for inline tableaux.
    #[arg(short = 'k')]
    pub ceiling: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply promotion.
    Promote {
        #[command(flatten)]
        source: TableauSource,
        /// Apply inverse promotion instead.
        #[arg(long)]
        inverse: bool,
        /// Number of applications.
        #[arg(long, default_value_t = 1)]
        times: u64,
    },
    /// Apply evacuation.
    Evacuate {
        #[command(flatten)]
        source: TableauSource,
        /// Dual evacuation (rectangles only).
        #[arg(long)]
        dual: bool,
    },
    /// List the promotion orbit.
    Orbit {
        #[command(flatten)]
        source: TableauSource,
    },
    /// Print a growth-diagram window.
    Growth {
        #[command(flatten)]
        source: TableauSource,
        /// Number of rows; defaults to `k + 1`.
        #[arg(long)]
        height: Option<usize>,
        /// Mark diagrams containing this box, `r,c`.
        #[arg(long)]
        mark: Option<String>,
    },
    /// `dis(T,B)` and `dis(E(T),B)` for the given boxes (default: all).
    Dis {
        #[command(flatten)]
        source: TableauSource,
        #[arg(long)]
        cells: Option<String>,
    },
    /// Promotion path, trajectory and inn/out multisets (standard rectangles).
    Paths {
        #[command(flatten)]
        source: TableauSource,
        #[arg(long)]
        cells: Option<String>,
    },
    /// Apply K-promotion to an increasing tableau.
    Kpromote {
        #[command(flatten)]
        source: TableauSource,
        #[arg(long)]
        inverse: bool,
    },
    /// Apply K-evacuation to an increasing tableau.
    Kevacuate {
        #[command(flatten)]
        source: TableauSource,
    },
    /// Exhaustive orbit averages of a cell-sum statistic.
    Homomesy(HomomesyArgs),
    /// The two K-promotion orbits in Inc^3(3x4) with different averages.
    Counterexample,
    /// The cominuscule families, or details of one.
    Families {
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct HomomesyArgs {
    /// Rectangle `m x n`.
    #[arg(long)]
    pub shape: Option<String>,
    /// Straight shape `a,b,c` (semistandard only).
    #[arg(long)]
    pub partition: Option<String>,
    /// Cominuscule family: rectangle:MxN, staircase:N, propeller:N, cayley, freudenthal.
    #[arg(long)]
    pub family: Option<String>,
    /// Poset file in the `elements=` format.
    #[arg(long)]
    pub poset: Option<String>,
    /// Ceiling for semistandard tableaux.
    #[arg(short = 'k')]
    pub ceiling: Option<u32>,
    /// Deficiency: switches to increasing tableaux under K-promotion.
    #[arg(short = 'q')]
    pub deficiency: Option<usize>,
    /// Support `r,c;r,c;…`.
    #[arg(long)]
    pub cells: Option<String>,
    /// Support as 1-based poset elements `1,4,…`.
    #[arg(long)]
    pub elements: Option<String>,
    /// Sweep every rotate-fixed support.
    #[arg(long)]
    pub symmetric_all: bool,
    /// Maximum number of states to enumerate.
    #[arg(long)]
    pub budget: usize,
}

pub enum Outcome {
    Done,
    Violated,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::BudgetExceeded { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("tabdyn: cannot configure threads: {e}");
        }
    }
    match commands::run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tabdyn: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
