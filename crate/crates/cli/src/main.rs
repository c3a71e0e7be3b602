//! Single entry point: seal, open, hash, kat, bench, simulate, gen-dataset.
//!
//! Exit codes: 0 success, 1 authentication or known-answer failure, 2 usage
//! error, 3 parse or I/O error. Keys are accepted only as hex flag values or
//! `env:NAME` references, never positionally.

mod args;
mod commands;
mod io_util;

use clap::Parser;

use args::{Cli, Command};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    AuthFailure = 1,
    Usage = 2,
    ParseIo = 3,
}

pub struct CliError {
    code: ExitCode,
    message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: String) -> Self {
        CliError { code, message }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Seal(args) => commands::cmd_seal(args),
        Command::Open(args) => commands::cmd_open(args),
        Command::Hash(args) => commands::cmd_hash(args),
        Command::Kat(args) => commands::cmd_kat(args),
        Command::Bench(args) => commands::cmd_bench(args),
        Command::Simulate(args) => commands::cmd_simulate(args),
        Command::GenDataset(args) => commands::cmd_gen_dataset(args),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {}", err.message);
        std::process::exit(err.code as i32);
    }
}
