use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("pole: denominator vanishes at {0}")]
    Pole(String),

    #[error("inexact polynomial division (nonzero remainder)")]
    InexactDivision,

    #[error("negative argument {0} to double factorial")]
    NegativeDoubleFactorial(i64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("selector out of bounds: {0}")]
    SelectorOutOfBounds(String),

    #[error("parameter out of range for {formula}: {reason}")]
    ParameterRange { formula: String, reason: String },

    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("region outside the combinatorial domain: {0}")]
    Domain(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("grid outside statement domain: {0}")]
    Grid(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn range_error(formula: &str, reason: impl Into<String>) -> Error {
    Error::ParameterRange {
        formula: formula.to_string(),
        reason: reason.into(),
    }
}
