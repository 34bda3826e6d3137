use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("matrix entry is not an integer")]
    NonIntegerEntry,

    #[error("graph is disconnected: vertex {0} is unreachable")]
    Disconnected(usize),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("empty source set for BFS")]
    EmptySourceSet,

    #[error("cells do not form a partition of the vertex set")]
    NotAPartition,

    #[error("malformed intersection array: {0}")]
    MalformedArray(String),

    #[error("zero denominator in polynomial reconstruction")]
    ZeroDenominator,

    #[error("recurrence index must be at least 1")]
    IndexTooSmall,

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("unknown fixture: {0}")]
    UnknownFixture(String),

    #[error("fixture {0} failed validation: {1}")]
    FixtureInvalid(String, String),

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error(transparent)]
    EdgeList(#[from] EdgeListError),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Decoding errors for the graph6 format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("invalid graph6 character {byte:#04x} at position {pos}")]
    BadCharacter { pos: usize, byte: u8 },

    #[error("graph6 string ends before the bit stream is complete")]
    Truncated,

    #[error("unexpected trailing characters after the bit stream")]
    TrailingGarbage,

    #[error("nonzero padding bits at end of bit stream")]
    NonzeroPadding,

    #[error("graph order {0} not supported")]
    UnsupportedSize(u64),

    #[error("empty graph6 input")]
    Empty,
}

/// Parsing errors for the plain edge-list format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {0}: self-loop")]
    SelfLoop(usize),

    #[error("line {0}: duplicate edge")]
    DuplicateEdge(usize),

    #[error("line {0}: expected two integer tokens")]
    BadTokens(usize),

    #[error("line {0}: non-integer token {1:?}")]
    NonInteger(usize, String),

    #[error("line {0}: vertex id exceeds declared n")]
    VertexOutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
