use std::fmt;
use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { position: usize, found: char },

    #[error("malformed run-length encoding: {0}")]
    MalformedEncoding(String),

    #[error("a-count {x} out of range (text has {total_a} a's)")]
    OutOfRange { x: u64, total_a: u64 },

    #[error("position {index} out of range 0..={len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("select rank {rank} out of range 1..={count}")]
    SelectOutOfRange { rank: usize, count: usize },

    #[error("text of length {len} exceeds oracle bound {bound}")]
    OracleBound { len: usize, bound: usize },

    #[error("not an index file: {0}")]
    Format(String),

    #[error("corrupt index: {0} check failed")]
    CorruptIndex(IndexCheck),

    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Invariant checks performed when loading a persisted index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexCheck {
    Truncated,
    TrailingBytes,
    LengthSum,
    ListSize,
    MinOrder,
    MaxOrder,
    MinBoundary,
    MaxBoundary,
    MinRange,
    MaxRange,
}

impl IndexCheck {
    pub fn name(self) -> &'static str {
        match self {
            IndexCheck::Truncated => "truncated",
            IndexCheck::TrailingBytes => "trailing-bytes",
            IndexCheck::LengthSum => "n = total_a + total_b",
            IndexCheck::ListSize => "list-size",
            IndexCheck::MinOrder => "l_min sorted",
            IndexCheck::MaxOrder => "l_max sorted",
            IndexCheck::MinBoundary => "l_min ends at total_a",
            IndexCheck::MaxBoundary => "l_max starts at 0",
            IndexCheck::MinRange => "l_min within totals",
            IndexCheck::MaxRange => "l_max ends at total_b",
        }
    }
}

impl fmt::Display for IndexCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
