//! Command-line front end: argument parsing, deterministic report output,
//! the worked-example verification suite and the LMFDB client.

pub mod args;
mod commands;
pub mod config;
pub mod error;
pub mod lmfdb;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;

use crate::args::Cli;
use crate::error::CliError;

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let first = e.to_string().lines().next().unwrap_or_default().to_string();
            return report_error(&CliError::Usage(first.trim_start_matches("error: ").to_string()));
        }
    };
    let started = Instant::now();
    let workers = cli.common.workers.unwrap_or_else(|| {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    });
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool,
        Err(e) => return report_error(&CliError::Usage(format!("cannot start {workers} workers: {e}"))),
    };
    let outcome = pool.install(|| commands::dispatch(&cli));
    eprintln!(
        "run command={} workers={} seed={} runtime_ms={}",
        cli.command.name(),
        workers,
        cli.common.seed,
        started.elapsed().as_millis()
    );
    match outcome {
        Ok(code) => code,
        Err(e) => report_error(&e),
    }
}

fn report_error(e: &CliError) -> i32 {
    let msg = e.to_string().replace(['\n', '\r'], " ");
    eprintln!("error kind={} msg={}", e.kind(), msg);
    e.exit_code()
}
