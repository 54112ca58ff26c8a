mod args;
mod commands;
mod input;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Malformed flags, unreadable or unsuitable input. Exit code 2.
    Usage(String),
    /// A check that must hold for every string failed. Exit code 1.
    Defect(String),
    Io(io::Error),
}

impl From<lyndon_lz::Error> for Failure {
    fn from(e: lyndon_lz::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = commands::run(&cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Defect(witness)) => {
            eprintln!("lyndon-lz: check failed: {witness}");
            eprintln!("lyndon-lz: the failed statement holds for every string, so a violation indicates an implementation defect");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("lyndon-lz: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("lyndon-lz: {e}");
            ExitCode::from(2)
        }
    }
}
