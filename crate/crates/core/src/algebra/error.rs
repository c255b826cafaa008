use thiserror::Error;

/// A syntax error with the byte offset at which it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {}: {message}", .offset + 1)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("variable sets differ ({left} vs {right} variables)")]
    VariableMismatch { left: usize, right: usize },
    #[error("truncation orders differ ({left} vs {right})")]
    TruncationMismatch { left: usize, right: usize },
    #[error("free algebras differ in alphabet or truncation")]
    ShapeMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    MissingCoordinate { expected: usize, got: usize },
    #[error("variable x{} out of range for {nvars} variables", .var + 1)]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
