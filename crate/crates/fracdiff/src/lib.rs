//! Command-line front end for `fracdiff-core`: grid evaluation of
//! differintegrals, special functions and the RC cable model, with CSV or
//! JSON tables, plus the `verify` runner for the library's invariant suites.

// `!(x > 0.0)` guards are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod commands;
pub mod error;
pub mod grid;
pub mod table;
pub mod tolerances;
pub mod verify;

pub use error::CliError;
