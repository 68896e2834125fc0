use crate::exactalg::MultiPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("expected {0} variables, got {1}")]
    LengthMismatch(usize, usize),
    #[error("inexact division, remainder {0}")]
    NonZeroRemainder(Box<MultiPoly>),
    #[error("singular interpolation system: no pivot for column {column} (r = {r})")]
    Singular { column: String, r: String },
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not semisymmetric: {0}")]
    NotSemisymmetric(String),
    #[error("r = {0} is not admissible: {1}")]
    InadmissibleR(String, String),
    #[error("denominator of {1} vanishes at r = {0}")]
    Pole(String, String),
    #[error("identity does not hold: {0}")]
    Mismatch(String),
    #[error("internal consistency check failed: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}
