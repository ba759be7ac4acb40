//! Library backing the `qgem` binary: config schema and loading, sweep
//! execution, engine comparison, and the JSON analysis report.

pub mod compare;
pub mod config;
pub mod report;
pub mod sweep;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Config parse/validation problems; exit code 1.
    #[error("{0}")]
    Validation(String),
    /// Engine failures during computation; exit code 2.
    #[error("{0}")]
    Compute(String),
    /// Engine comparison exceeded tolerance; exit code 3.
    #[error("engine comparison failed: {0}")]
    ComparisonFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Compute(_) => 2,
            CliError::ComparisonFailed(_) => 3,
        }
    }
}
