//! Standard-library companion to `unit-shapes-core`: JSON and CSV formats,
//! seeded random sampling, the verification suites and the `unit-shapes`
//! command-line tool.

pub mod cli;
mod error;
pub mod export;
pub mod io;
pub mod sampling;
pub mod suites;

pub use error::CliError;
