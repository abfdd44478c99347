use thiserror::Error;

/// Errors raised by the orbline library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the argument of zero is undefined")]
    ZeroArgument,

    #[error("invalid weight type: {0}")]
    InvalidWeights(String),

    #[error("expected {expected} components, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("value does not belong to this weight type")]
    SpecMismatch,

    #[error("tau must lie in the upper half plane, got {0}")]
    NotUpperHalfPlane(String),

    #[error("not a valid phase direction: {0}")]
    InvalidPhase(String),

    #[error("charge assignment is missing basis element {0}")]
    MissingCharge(String),

    #[error("weight type is {0}, expected wild")]
    NotWild(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
