//! Standard-library companion to `tiltlab-core`: file formats, the catalog
//! cache, command implementations, and the self-check suite backing the
//! `tiltlab` binary.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod cache;
pub mod checks;
pub mod commands;
pub mod formats;

use std::fmt;

/// Errors surfaced to the command line, each mapped to a process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Flags or arguments are malformed or combined wrongly (exit 1).
    Usage(String),
    /// Input files or values are invalid, or an operation's precondition
    /// fails (exit 2).
    Input(String),
    /// The self-check suite found at least one violated property (exit 3).
    CheckFailed(usize),
}

impl CliError {
    /// The process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::CheckFailed(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Input(m) => write!(f, "{m}"),
            CliError::CheckFailed(n) => write!(f, "{n} check(s) failed"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tiltlab_core::Error> for CliError {
    fn from(e: tiltlab_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("io error: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("json error: {e}"))
    }
}

/// Result alias for the command layer.
pub type CliResult<T> = Result<T, CliError>;
