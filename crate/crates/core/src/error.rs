use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a limit ordinal")]
    NotALimit(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("{0} is not a member of the tree")]
    NotMember(String),
    #[error("{0} is not a maximal node")]
    NotMaximal(String),
    #[error("bounds are taken at different epsilons")]
    MixedEpsilon,
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Overflow(_) | Error::SizeBound(_) => 3,
            _ => 1,
        }
    }
}
