use thiserror::Error;

use crate::text::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("ring mismatch: `{0}` vs `{1}`")]
    RingMismatch(String, String),
    #[error("both operands are zero")]
    BothZero,
    #[error("operand must be nonzero")]
    ZeroOperand,
    #[error("matrix not invertible over skew field")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid ring specification: {0}")]
    InvalidRing(String),
    #[error("invalid degree sequence: {0}")]
    InvalidDegrees(String),
    #[error("rank deficiency or bad input: {0}")]
    RankDeficiency(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
