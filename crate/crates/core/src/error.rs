use thiserror::Error;

/// Errors raised while building or decoding graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: byte {byte:#04x} at position {pos} is outside 63..=126")]
    Graph6Char { pos: usize, byte: u8 },
    #[error("graph6: {found} bytes where {expected} were expected (trailing data)")]
    Graph6Trailing { expected: usize, found: usize },
    #[error("graph of order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge list line {line}: cannot parse {token:?}")]
    EdgeListToken { line: usize, token: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("permutation of length {found} does not act on {expected} points")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image array is not a bijection on 0..{n}")]
    NotBijection { n: usize },
    #[error("graph of order {n} exceeds the enumeration limit {limit}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("graph with {m} edges exceeds the exhaustive colouring limit {limit}")]
    ColouringLimit { m: usize, limit: usize },
    #[error("invalid colouring: {0}")]
    Colouring(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no 2-colouring breaks every small automorphism of {graph6}")]
    TheoremFalsified { graph6: String },
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
