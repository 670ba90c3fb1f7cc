//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial, permutation, or group text.
    Parse(String),
    /// A specialization vector with the wrong number of entries.
    Arity { expected: usize, got: usize },
    /// Input outside an operation's domain (constant polynomial, non-subgroup, ...).
    Domain(String),
    /// A hard cap was exceeded (group order, degree, retries, compute budget).
    CapExceeded(String),
    /// Certified arithmetic could not reach the requested precision.
    Precision(String),
    /// An internal cross-check failed; indicates a bug, not bad input.
    Inconsistent(String),
}

impl Error {
    /// Process exit code for the CLI: 2 usage, 3 budget/precision, 4 broken invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Arity { .. } | Error::Domain(_) => 2,
            Error::CapExceeded(_) | Error::Precision(_) => 3,
            Error::Inconsistent(_) => 4,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Arity { expected, got } => {
                write!(f, "expected {expected} specialization values, got {got}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::CapExceeded(msg) => write!(f, "cap exceeded: {msg}"),
            Error::Precision(msg) => write!(f, "precision exhausted: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
