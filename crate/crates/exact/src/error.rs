use thiserror::Error;

use crate::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("mixed ring operands: {left} and {right}")]
    MixedRing { left: Ring, right: Ring },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operation requires {expected} scalars, got {got}")]
    WrongRing { expected: &'static str, got: Ring },
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not invertible over {0}")]
    NotInvertible(Ring),
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
}

pub type Result<T, E = ExactError> = std::result::Result<T, E>;
