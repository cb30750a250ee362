//! Error taxonomy shared by every module.
//!
//! Errors are grouped by how a front end should react: `Domain` and
//! `ArityMismatch` are caller mistakes, `Capacity` means an exact-enumeration
//! cap was exceeded, and the rest are runtime conditions.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument values (bad n/k, invalid moments, bad level, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact-enumeration or table-size cap would be exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Kernel arity does not match the data it is applied to.
    #[error("arity mismatch: kernel expects {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// A statistic degenerated (zero variance where a correlation or ratio is needed).
    #[error("degenerate statistic: {0}")]
    Degenerate(String),

    /// Unknown registry name (statistic/kernel/law/template).
    #[error("unknown {kind} {name:?}; available: {available}")]
    UnknownName {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 validation, 3 capacity, 4 runtime.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::ArityMismatch { .. }
            | Error::UnknownName { .. }
            | Error::Parse(_) => 2,
            Error::Capacity(_) => 3,
            Error::Degenerate(_) | Error::Io(_) => 4,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
