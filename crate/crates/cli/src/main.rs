//! `qdilog` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage or parameter error,
//! 3 domain or pole error, 4 non-convergence.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use output::{emit, CmdResult, Exit};

fn run(cli: Cli) -> CmdResult<Exit> {
    let (text, out, exit) = match &cli.command {
        Command::Eval(a) => (commands::eval(a)?, &a.common.out, Exit::Ok),
        Command::Verify(a) => {
            let (text, pass) = commands::verify(a)?;
            (text, &a.common.out, if pass { Exit::Ok } else { Exit::Failed })
        }
        Command::Expand(a) => (commands::expand(a)?, &a.common.out, Exit::Ok),
        Command::Integral(a) => (commands::integral(a)?, &a.common.out, Exit::Ok),
        Command::Crossover(a) => (commands::crossover(a)?, &a.common.out, Exit::Ok),
    };
    emit(&text, out.as_deref())?;
    Ok(exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Usage as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(exit) => ExitCode::from(exit as u8),
        Err(f) => {
            eprintln!("qdilog: {f}");
            ExitCode::from(f.exit as u8)
        }
    }
}
