//! Error types shared across the engine.

use std::fmt;

/// Errors from polynomial and Gröbner-level operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EngineError {
    /// Operands live in different fields or different variable sets.
    IncompatibleOperands,
    /// A graded-only operation received an inhomogeneous input.
    Inhomogeneous,
    UnknownVariable(String),
    /// GCD requested over a prime field (only supported over Q).
    UnsupportedField(String),
    AllZeroInput,
    GradeOverflow,
    DegreeMismatch(String),
    NotASyzygy(String),
    Validation(String),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::IncompatibleOperands => {
                write!(f, "operands have different fields or variable sets")
            }
            EngineError::Inhomogeneous => write!(f, "input is not homogeneous"),
            EngineError::UnknownVariable(v) => write!(f, "unknown variable '{v}'"),
            EngineError::UnsupportedField(m) => write!(f, "unsupported field: {m}"),
            EngineError::AllZeroInput => write!(f, "all components are zero"),
            EngineError::GradeOverflow => write!(f, "wedge product exceeds the number of variables"),
            EngineError::DegreeMismatch(m) => write!(f, "degree mismatch: {m}"),
            EngineError::NotASyzygy(m) => write!(f, "not a syzygy: {m}"),
            EngineError::Validation(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for EngineError {}

/// A parse failure with the byte offset of the offending token.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}
