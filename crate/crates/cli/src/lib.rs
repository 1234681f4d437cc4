//! Command-line driver: argument grammar, file formats and subcommands.
//!
//! Exit codes: 0 on success, 1 on input or validation errors, 2 when a
//! verification step fails.

pub mod args;
pub mod commands;
pub mod error;
pub mod io;

use std::io::Write;

pub use args::{Cli, Command};
pub use error::CliError;

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Gorenstein(a) => commands::cmd_gorenstein(a, out, err),
        Command::Stick(a) => commands::cmd_stick(a, out, err),
        Command::Hf(a) => commands::cmd_hf(a, out, err),
        Command::CheckSi(a) => commands::cmd_check_si(a, out, err),
        Command::Hadamard(a) => commands::cmd_hadamard(a, out, err),
    }
}
