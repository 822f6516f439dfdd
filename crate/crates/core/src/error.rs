use thiserror::Error;

/// Errors reported by index construction, queries, and (de)serialization.
#[derive(Debug, Error)]
pub enum LceError {
    #[error("position {pos} is out of range for a text of length {n}")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("sampling rate {tau} is outside 1..={n}")]
    InvalidTau { tau: usize, n: usize },

    #[error("offset {offset} must be below the sampling rate {tau}")]
    InvalidOffset { offset: usize, tau: usize },

    #[error("symbol {symbol} at index {index} is outside 1..={sigma}")]
    InvalidSymbol { index: usize, symbol: u32, sigma: u32 },

    #[error("position {pos} occurs more than once")]
    DuplicatePosition { pos: usize },

    #[error("position {pos} is not congruent to {offset} modulo {step}")]
    OffGrid { pos: usize, step: usize, offset: usize },

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("malformed index file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, LceError>;
