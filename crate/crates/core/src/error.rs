use thiserror::Error;

/// Errors raised by the exact-arithmetic and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term must be 1 or -1, found {0}")]
    NonUnitConstant(String),
    #[error("inexact division in {0}")]
    InexactDivision(String),
    #[error("height {j} lies outside the band 0 <= y < {k}")]
    BandViolation { j: i64, k: usize },
    #[error("index ({row}, {col}) lies above the diagonal")]
    IndexOutOfTriangle { row: usize, col: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
