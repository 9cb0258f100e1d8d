use thiserror::Error;

/// Errors for malformed input data and violated preconditions.
///
/// Failed *verification* (a structurally well-formed table that violates an
/// axiom) is not an error; verifiers return reports instead. An `Error` means
/// the input could not be interpreted at all, or an operation was invoked on
/// data whose preconditions do not hold.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A table or diagram is structurally malformed (wrong shape, entry out
    /// of range, dangling semi-arc).
    #[error("structural error: {0}")]
    Structure(String),

    /// An operation required verified input and verification failed.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
