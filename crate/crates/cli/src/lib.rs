//! Command-line experiments on top of `matconc-core`: argument parsing,
//! deterministic parallel trial execution and CSV output.
//!
//! Each run writes its CSV to `--out` (or standard output) and two lines to
//! standard error: the full flag set, then a one-line summary. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, every check passed |
//! | 1 | usage or parse error |
//! | 2 | an inequality check failed |
//! | 3 | numeric failure (non-convergence, overflow) |
//! | 4 | I/O failure |

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod family;
pub mod runner;
pub mod table;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::Cli;
use crate::error::{CliError, CliResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code. CSV goes to `stdout` unless `--out` names a file.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    let command = &cli.command;
    if writeln!(stderr, "{}", command.echo()).is_err() {
        return EXIT_IO;
    }
    match execute(command, stdout) {
        Ok((summary, violations)) => {
            if writeln!(stderr, "{summary}").is_err() {
                return EXIT_IO;
            }
            if violations > 0 {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &args::Command, stdout: &mut dyn Write) -> CliResult<(String, usize)> {
    let outcome = commands::execute(command)?;
    let mut buf = Vec::new();
    table::emit_table(&outcome.columns(), &outcome.rows, &mut buf)?;
    match command.common().out.as_deref() {
        Some(path) if path.as_os_str() != "-" => {
            let mut file = BufWriter::new(File::create(path).map_err(CliError::Io)?);
            file.write_all(&buf)?;
            file.flush()?;
        }
        _ => {
            stdout.write_all(&buf)?;
            stdout.flush()?;
        }
    }
    Ok((outcome.summary, outcome.violations))
}
