use bnskein_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{0}")]
    Structure(String),
    #[error("degenerate pairing: the Gram matrix is not invertible over {0}")]
    DegeneratePairing(String),
    #[error("axiom {axiom} fails: {witness}")]
    Axiom { axiom: String, witness: String },
    #[error("step {index}: {reason}")]
    InvalidStep { index: usize, reason: String },
    #[error("vertex {0} has no path into the terminal set")]
    NotTerminal(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn structure(msg: impl Into<String>) -> Error {
    Error::Structure(msg.into())
}
