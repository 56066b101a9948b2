use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty word")]
    EmptyWord,

    #[error("word of length {0} exceeds the 64-coordinate cap")]
    WordTooLong(usize),

    #[error("invalid character {ch:?} at position {pos} (expected 0 or 1)")]
    BadChar { ch: char, pos: usize },

    #[error("bits {bits:#x} do not fit in a word of length {len}")]
    BitsOutOfRange { bits: u64, len: usize },

    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("vertex set over length {0} is too large to materialize")]
    TooLarge(usize),

    #[error("anchor {0} is not a vertex of the graph")]
    AnchorNotInGraph(String),

    #[error("series denominator must have constant term +1 or -1")]
    NonUnitDenominator,

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
