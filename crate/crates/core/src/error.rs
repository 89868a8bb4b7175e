use thiserror::Error;

use crate::af::{ArgumentId, Semantics};
use crate::iaf::{UncertainElement, Violation};
use crate::verification::VerificationStatus;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument name `{0}`: expected [A-Za-z_][A-Za-z0-9_]*")]
    InvalidName(String),

    #[error("argument `{0}` is not part of the frame")]
    UnknownArgument(ArgumentId),

    #[error("invalid frame: {}", join_violations(.0))]
    InvalidFrame(Vec<Violation>),

    #[error("{what} of size {size} exceeds the enumeration cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("element {0} is not uncertain in this frame")]
    NotUncertain(UncertainElement),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("strong relevance is undefined: no partial completion attains {0}")]
    UnreachableStatus(VerificationStatus),

    #[error("no fast path for {0} semantics")]
    FastPathUnsupported(Semantics),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::NotUncertain(_)
            | Error::Precondition(_)
            | Error::UnreachableStatus(_)
            | Error::FastPathUnsupported(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
