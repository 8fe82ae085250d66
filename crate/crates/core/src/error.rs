use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pattern is empty")]
    EmptyPattern,

    #[error("invalid symbol {symbol:?} at index {index}")]
    InvalidSymbol { index: usize, symbol: char },

    #[error("invalid pattern length {0}; must be at least 1")]
    InvalidLength(usize),

    #[error("index {index} is below the pattern length {length}")]
    InvalidIndex { index: usize, length: usize },

    #[error("horizon {horizon} is below the required minimum {minimum}")]
    InvalidHorizon { horizon: usize, minimum: usize },

    #[error("string length {requested} exceeds the enumeration ceiling {ceiling}")]
    TooLarge { requested: usize, ceiling: usize },

    #[error("exact {type_name} arithmetic overflowed while computing {context}")]
    Overflow {
        type_name: &'static str,
        context: &'static str,
    },

    #[error("a simulated game exceeded {cap} tosses without completing the pattern")]
    GameLengthCap { cap: u64 },

    #[error("subtraction would produce a negative dyadic value")]
    NegativeResult,

    #[error("trial count must be at least 1")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
