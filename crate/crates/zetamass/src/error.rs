//! Error type shared by every module.
//!
//! The three variants mirror the process exit-code protocol of the CLI:
//! `Input` -> 2, `Computation` -> 3, `CheckFailed` -> 4.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data (files, parameters).
    #[error("input error: {0}")]
    Input(String),
    /// A computation could not be carried out (pole hit, divergence,
    /// non-convergence, violated precondition discovered mid-computation).
    #[error("computation error: {0}")]
    Computation(String),
    /// An assertion-style check ran fine but failed (e.g. a functional
    /// equation check requested on the command line).
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn computation(msg: impl Into<String>) -> Self {
        Error::Computation(msg.into())
    }
    pub fn check_failed(msg: impl Into<String>) -> Self {
        Error::CheckFailed(msg.into())
    }

    /// Process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::Computation(_) => 3,
            Error::CheckFailed(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
