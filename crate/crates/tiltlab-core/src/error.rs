//! Error type shared by all modules of the core crate.

use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-arithmetic workbench.
///
/// Every variant captures a human-readable description of the violated
/// precondition; operations never panic on caller mistakes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Structurally invalid input (sizes, unknown vertices, malformed data).
    InvalidInput(String),
    /// The input is valid data but violates a documented precondition
    /// (e.g. the Euler form is nonzero where a square system is required).
    Precondition(String),
    /// The operation is only defined for Dynkin-type quivers.
    NotDynkin(String),
    /// An internal invariant that should be unreachable for valid inputs was
    /// violated (e.g. a mutation division failed to be exact).
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotDynkin(msg) => write!(f, "not a Dynkin quiver: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
