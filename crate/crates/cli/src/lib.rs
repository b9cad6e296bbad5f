//! Command-line front end: builds algebras, runs analyses and the
//! verification suites, and writes CSV reports.

pub mod args;
pub mod commands;
pub mod report;
pub mod verify;

use std::process::ExitCode;

use clap::Parser;
use superpi_core::arith::is_prime;
use superpi_core::AnalysisConfig;

use crate::args::{Cli, GlobalOpts};

/// Exit codes of the command-line tool.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const CAP: u8 = 2;
    pub const INTERNAL: u8 = 3;
}

/// A failed check or invalid input that is not a library error.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct CheckFailed(pub String);

pub fn analysis_config(g: &GlobalOpts) -> anyhow::Result<AnalysisConfig> {
    if g.cap_n == 0 || g.cap_evals == 0 {
        anyhow::bail!(CheckFailed("caps must be positive".into()));
    }
    if let Some(p) = g.mod_p {
        if p <= 1 << 30 || !is_prime(p) {
            anyhow::bail!(CheckFailed(format!("--mod-p must be a prime above 2^30, got {p}")));
        }
    }
    Ok(AnalysisConfig {
        cap_n: g.cap_n,
        cap_evals: g.cap_evals,
        mod_p: g.mod_p,
        seed: g.seed,
        ..AnalysisConfig::default()
    })
}

/// Maps an error to its exit code: size caps 2, internal inconsistencies 3,
/// everything else 1.
pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<superpi_core::Error>() {
        Some(e) if e.is_cap() => exit::CAP,
        Some(e) if e.is_internal() => exit::INTERNAL,
        _ => exit::FAILURE,
    }
}

/// Parses arguments from the process and runs the command.
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::FAILURE } else { exit::SUCCESS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::FAILURE);
        }
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
