use thiserror::Error;

/// Errors raised by path, word, and tableau operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("frame ({m},{n}) is not coprime")]
    NotCoprime { m: u64, n: u64 },

    #[error("frame dimensions must be positive, got ({m},{n})")]
    EmptyFrame { m: u64, n: u64 },

    #[error("frame ({m},{n}) is not a Fuss frame of the requested kind")]
    NotFuss { m: u64, n: u64 },

    #[error("word has length {found}, expected {expected}")]
    WrongLength { expected: usize, found: usize },

    #[error("word has {found_north} North-type letters, expected {expected_north}")]
    WrongStepCounts {
        expected_north: usize,
        found_north: usize,
    },

    #[error("unexpected symbol {symbol:?} at index {index}")]
    InvalidSymbol { symbol: char, index: usize },

    /// `prefix` is the length of the first prefix whose endpoint has negative rank.
    #[error("path drops below the diagonal after prefix of length {prefix}")]
    BelowDiagonal { prefix: usize },

    #[error("words belong to different frames")]
    FrameMismatch,

    #[error("SW/EN pair is not realised by a common sweep preimage")]
    InconsistentPair,

    #[error("no sweep preimage found by exhaustive search")]
    SearchExhausted,

    #[error("filling stalled while placing label {label}")]
    PrematureStall { label: usize },

    #[error("tableau walk is not a single cycle")]
    NotSingleCycle,

    #[error("row constraint violated at position {j}")]
    RowConstraintViolated { j: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau has a single column; nothing to reduce")]
    TooNarrow,

    #[error("rank {rank} is not a vertex rank of the path")]
    RankNotPresent { rank: i64 },

    #[error("cut rank {rank} is not below {bound}")]
    RankTooLarge { rank: i64, bound: i64 },

    #[error("enumeration of a ({m},{n}) frame is too large")]
    TooLarge { m: u64, n: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
