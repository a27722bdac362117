//! Error taxonomy shared by every evaluator.
//!
//! The split matters to callers: `Domain` and `Pole` mean the request was
//! outside a representation's validity region (a refusal, not a failure),
//! `NonConvergence` means the request was admissible but the configured
//! precision budget ran out, and `TheoremContradiction` is reserved for the
//! verification harness finding a sample that violates a proven sign claim.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input outside the validity region of the requested representation.
    #[error("domain: {0}")]
    Domain(String),

    /// Evaluation at (or numerically indistinguishable from) a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// Precision budget exhausted before the tail/error bound met tolerance.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// A verification sample contradicts a proven statement.
    #[error("theorem contradiction: {0}")]
    TheoremContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TheoremContradiction(_) => 1,
            Error::Domain(_) | Error::Pole(_) => 2,
            Error::NonConvergence(_) => 3,
        }
    }
}
