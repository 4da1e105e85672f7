//! Command-line front end.

mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;
use fuzzideal::Error;

use config::Cli;

/// Exit status for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidSpec(_) => 2,
        Error::SizeLimit { .. } | Error::CorpusTooLarge { .. } => 3,
        Error::FuzzyAxiom { .. }
        | Error::InvalidChain { .. }
        | Error::ValueOutOfRange(_)
        | Error::NotAnIdeal(_)
        | Error::ElementOutOfRange(_) => 4,
        Error::ConstantIdeal => 5,
        Error::CheckFailed(_) => 6,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(commands::Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(commands::Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
