use thiserror::Error;

/// Broad classes of failure, used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Contract,
    TheoremViolation,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("irrational spectrum: {0} does not split over the rationals")]
    IrrationalSpectrum(String),
    #[error("subspace is not invariant under the matrix")]
    NotInvariant,
    #[error("matrix is singular")]
    Singular,
    #[error("integrability violated: {0}")]
    Integrability(String),
    #[error("kernel sum is not direct")]
    NonDirectKernelSum,
    #[error("invalid segment: {0}")]
    InvalidSegment(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::TheoremViolation(_) | Error::Internal(_) => ErrorKind::TheoremViolation,
            _ => ErrorKind::Contract,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
