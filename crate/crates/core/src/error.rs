use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
}

/// Malformed graph6 text or canonical-code bytes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("format error at byte {offset}: {message}")]
pub struct FormatError {
    pub offset: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> FormatError {
        FormatError { offset, message: message.into() }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeckError {
    #[error("card size {k} exceeds vertex count {n}")]
    CardTooLarge { n: usize, k: usize },
    #[error("aggregate count {total} is not divisible by {divisor}; the deck is inconsistent")]
    Divisibility { total: u64, divisor: u64 },
    #[error("pattern has {pattern} vertices but cards have only {k}")]
    PatternTooLarge { pattern: usize, k: usize },
    #[error("pattern graphs are limited to 6 vertices, got {0}")]
    PatternUnsupported(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("card degree multiset {0:?} matches no distance class")]
    Class(Vec<usize>),
    #[error("card has {got} vertices, expected {expected}")]
    CardSize { expected: usize, got: usize },
    #[error("multiplicities sum to {got}, expected C({n},{k}) = {expected}")]
    Multiplicity { n: usize, k: usize, got: u64, expected: u64 },
    #[error("invalid deck: {0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("unsupported range: {0}")]
    Range(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconError {
    #[error("card admits no {r}-regular completion: {reason}")]
    InfeasibleCard { r: usize, reason: String },
    #[error("deck has no cards")]
    EmptyDeck,
    #[error("deck is not the (n-2)-deck of a 3-regular graph")]
    NotCubic,
    #[error(transparent)]
    Deck(#[from] DeckError),
    #[error(transparent)]
    Gen(#[from] GenError),
}
