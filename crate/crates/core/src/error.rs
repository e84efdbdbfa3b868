use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The computation would exceed a declared size or iteration cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The working precision is too low to produce a certified answer.
    /// Retrying with more bits is expected to succeed.
    #[error("insufficient precision: {0}")]
    Precision(String),

    /// A bracketing root solve did not see a sign change.
    #[error("root not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
