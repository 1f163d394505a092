use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("word length {len} outside supported range 1..={max}")]
    LengthOutOfRange { len: usize, max: usize },

    #[error("invalid {alphabet} digit {digit:?}")]
    InvalidDigit { alphabet: &'static str, digit: char },

    #[error("binary word of odd length {0} has no Gray preimage")]
    OddLength(usize),

    #[error("family parameters r1={r1}, r2={r2} give k={k}, above the cap {max_k}")]
    ParamsOutOfRange {
        r1: u32,
        r2: u32,
        k: u32,
        max_k: u32,
    },

    #[error("{what}: {size} exceeds the cap {cap}")]
    TooLarge {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("row reduction found dependent rows: expected type 4^{expected_k1}2^{expected_k2}, got 4^{k1}2^{k2}")]
    DependentRows {
        expected_k1: usize,
        expected_k2: usize,
        k1: usize,
        k2: usize,
    },

    #[error("code does not contain the zero word")]
    ZeroWordAbsent,

    #[error("rank strategy not applicable: {0}")]
    StrategyInapplicable(&'static str),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
