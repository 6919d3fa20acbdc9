//! Table-producing subcommands.
//!
//! Rows are evaluated in parallel and emitted in grid order. A row whose
//! evaluation fails is still written, with empty values and the error in its
//! `status` column, and the command then exits with a numerical failure.

pub mod cable;
pub mod differint;
pub mod specfun;

use crate::error::CliError;
use crate::table::Table;

/// Status column value for rows that evaluated cleanly.
pub const OK: &str = "ok";

pub(crate) fn finish(table: &Table, failures: usize, output: &crate::cli::OutputArgs) -> Result<(), CliError> {
    table.write(output.format, output.out.as_deref())?;
    if failures > 0 {
        Err(CliError::Numerical(format!(
            "{failures} row(s) failed; see the status column"
        )))
    } else {
        Ok(())
    }
}
