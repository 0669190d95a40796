//! Command-line front end: argument parsing, subcommand dispatch and the
//! acceptance checks behind `census verify`.

pub mod args;
pub mod commands;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use census_core::CensusError;

use crate::args::Cli;
use crate::report::write_reports;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Census(CensusError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Census(e) => write!(f, "{e}"),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        CliError::Census(e)
    }
}

/// Parse `args`, run the subcommand and write its table to `out`. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.workers as usize).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start workers: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| commands::execute(&cli.command, &cli.global));
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    for d in &output.diagnostics {
        let _ = writeln!(err, "{d}");
    }
    if let Err(e) = write_reports(out, &output.rows, cli.global.format) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    let _ = writeln!(err, "elapsed_ms={}", start.elapsed().as_millis());
    let violated = output.rows.iter().filter(|r| r.within_bound == Some(false)).count();
    if cli.global.check && violated > 0 {
        let _ = writeln!(err, "check failed: {violated} row(s) outside their bound");
        return EXIT_VIOLATION;
    }
    EXIT_OK
}
