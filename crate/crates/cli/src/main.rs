//! `zeeman`: Cohen–Macaulay tests, Zeeman spectral sequence pages, irreducible
//! resolutions and Betti tables for face complexes read from text files.
//!
//! Exit codes: 0 when the command's verdict holds, 1 when it does not, 2 on
//! bad input.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zeeman::linalg::Field;
use zeeman::zeeman::Page;

#[derive(Parser)]
#[command(name = "zeeman", version, about = "Zeeman double complexes and irreducible resolutions of face rings")]
struct Cli {
    /// Worker threads for parallel stages (defaults to all cores).
    #[arg(long, global = true, env = "ZEEMAN_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Input file in simplicial, polyhedral or semigroup format.
    pub input: PathBuf,
    /// Coefficient field: `q` or `p:<prime>`.
    #[arg(long, default_value = "q")]
    pub field: Field,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check the face poset and its incidence signs; with --resolution, re-verify a saved resolution.
    Validate {
        #[command(flatten)]
        common: Common,
        /// JSON resolution written by `irres` or `total-irres --format json`.
        #[arg(long)]
        resolution: Option<PathBuf>,
    },
    /// Decide whether the complex is Cohen-Macaulay from its local cohomology.
    CmCheck(Common),
    /// Print a page of the Zeeman spectral sequence.
    Zeeman {
        #[command(flatten)]
        common: Common,
        /// Comma-separated degree vector; `0` is the ordinary sequence.
        #[arg(long, default_value = "0")]
        degree: String,
        /// 0, 1, 2 or inf.
        #[arg(long, default_value = "1")]
        page: Page,
    },
    /// Minimal linear irreducible resolution (Cohen-Macaulay input only).
    Irres(Common),
    /// Irreducible resolution from the total Zeeman complex.
    TotalIrres(Common),
    /// Alexander dual and the dualized minimal resolution (simplicial input).
    Dual(Common),
    /// Betti table of the Alexander dual ideal (simplicial input).
    Betti(Common),
    /// Hilbert function checks for the resolution.
    Hilbert(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let (common, outcome) = match &cli.command {
        Command::Validate { common, resolution } => (common, commands::validate(common, resolution.as_deref())),
        Command::CmCheck(c) => (c, commands::cm_check(c)),
        Command::Zeeman { common, degree, page } => (common, commands::zeeman(common, degree, *page)),
        Command::Irres(c) => (c, commands::irres(c)),
        Command::TotalIrres(c) => (c, commands::total_irres(c)),
        Command::Dual(c) => (c, commands::dual(c)),
        Command::Betti(c) => (c, commands::betti(c)),
        Command::Hilbert(c) => (c, commands::hilbert(c)),
    };
    match outcome {
        Ok(report) => {
            match common.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize")),
            }
            if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
