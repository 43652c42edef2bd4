use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown field descriptor {0:?}")]
    UnknownField(String),
    #[error("coordinate vector has length {got}, algebra has dimension {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("coefficient algebra has zero divisors")]
    ZeroDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("composition collapses the denominator to zero")]
    DegenerateComposition,
    #[error("resultant of two zero polynomials")]
    ZeroResultant,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Verification(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
