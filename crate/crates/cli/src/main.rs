//! `sumsets`: enumerate restricted sumsets, check the polynomial identities
//! behind their lower bounds, and verify those bounds on small families.
//!
//! Exit codes: 0 when everything checked passes, 1 when a bound or identity
//! fails, 2 on bad input or an I/O error, 3 when a resource cap stopped part
//! of the work.

mod args;
mod commands;
mod identities;
mod literal;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// How a run ended, in increasing order of severity among successful runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    CapHit,
    Violation,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Violation => 1,
            Status::CapHit => 3,
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(msg) | Failure::Resource(msg) => f.write_str(msg),
        }
    }
}

impl From<sumset_core::Error> for Failure {
    fn from(e: sumset_core::Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Identities(a) => identities::run(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Sweep(a) => commands::sweep(&a),
    };
    match result {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
