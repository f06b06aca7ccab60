//! `abc-workbench`: stability computations for explicit abc-system waves.
//!
//! Exit codes: 0 success, 1 i/o failure, 2 invalid input, 3 solver failure,
//! 4 inconclusive verdict (`jl-spectrum`, `index`).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod error;
mod report;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{CommandKind, CommonArgs, RunConfig, ScanArgs, ThresholdArgs};
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "abc-workbench", version, about = "Spectral stability workbench for abc-system solitary waves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wave speed, width, amplitude ratio and equation residuals.
    #[command(allow_negative_numbers = true)]
    Wave(CommonArgs),
    /// Discrete spectrum of the smoothed linearization.
    #[command(allow_negative_numbers = true)]
    Spectrum(CommonArgs),
    /// Spectrum of JL with the combined stability verdict.
    #[command(name = "jl-spectrum", allow_negative_numbers = true)]
    JlSpectrum(CommonArgs),
    /// Index quantity <L^-1 R, R>.
    #[command(allow_negative_numbers = true)]
    Index(CommonArgs),
    /// Critical ratio z = b/|a| by bisection on the index (a = -1).
    #[command(allow_negative_numbers = true)]
    Threshold {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        range: ThresholdArgs,
    },
    /// Verdicts along a line in eta0 or z, one CSV row per point.
    #[command(allow_negative_numbers = true)]
    Scan {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        range: ScanArgs,
    },
}

impl Command {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        match self {
            Command::Wave(c) => RunConfig::resolve(CommandKind::Wave, c, None, None),
            Command::Spectrum(c) => RunConfig::resolve(CommandKind::Spectrum, c, None, None),
            Command::JlSpectrum(c) => RunConfig::resolve(CommandKind::JlSpectrum, c, None, None),
            Command::Index(c) => RunConfig::resolve(CommandKind::Index, c, None, None),
            Command::Threshold { common, range } => {
                RunConfig::resolve(CommandKind::Threshold, common, Some(range), None)
            }
            Command::Scan { common, range } => RunConfig::resolve(CommandKind::Scan, common, None, Some(range)),
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("WORKBENCH_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Config(format!("WORKBENCH_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Config(e.to_string()))
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let config = cli.command.resolve()?;
    let outcome = commands::run(&config)?;
    match &config.output_path {
        Some(path) => fs::write(path, &outcome.text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => std::io::stdout()
            .write_all(outcome.text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string()))?,
    }
    if outcome.inconclusive {
        eprintln!("note: verdict is inconclusive");
    }
    Ok(outcome.inconclusive)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(4),
        Err(e) => {
            eprintln!("abc-workbench: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
