//! Command-line driver for `bnskein`: JSON formats for algebras, cobordisms,
//! tunneling graphs and functor graphs, and deterministic JSON reports.

pub mod commands;
pub mod error;
pub mod formats;
pub mod report;

pub use commands::{run, Cli, Command, Outcome};
pub use error::{CliError, Result};
