//! `assoc`: exact experiments on associahedron realizations and
//! multiassociahedra. Reports go to stdout as JSON.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 input error,
//! 3 instance too large.

mod commands;
mod formats;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{ClusterArgs, MinkowskiArgs, MultiArgs, SecondaryArgs, VerifyArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::TooLarge(_) => 3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "assoc", version, about = "Exact associahedron and multiassociahedron workbench")]
struct Cli {
    /// Worker threads for parallel enumeration
    #[arg(long, global = true, env = "ASSOC_THREADS", value_name = "N")]
    threads: Option<usize>,
    /// Include wall-clock time in the report (reports then differ between runs)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Secondary polytope of a planar point configuration
    Secondary(SecondaryArgs),
    /// Realization from the inequalities x_i - x_j <= f(i,j)
    Cluster(ClusterArgs),
    /// Minkowski sum of simplices over intervals
    Minkowski(MinkowskiArgs),
    /// Multiassociahedron computations
    Multi(MultiArgs),
    /// Checks on a polytope file
    Verify(VerifyArgs),
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CliError::Input("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Secondary(a) => commands::secondary(a),
        Command::Cluster(a) => commands::cluster(a),
        Command::Minkowski(a) => commands::minkowski(a),
        Command::Multi(a) => commands::multi(a),
        Command::Verify(a) => commands::verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            print!("{}", report.to_json());
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
