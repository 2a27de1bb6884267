use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("operation requires at least {required} vertices, graph has {actual}")]
    TooFewVertices { required: usize, actual: usize },
    #[error("vertex {0} is not a member of the given set")]
    NotInSet(usize),
    #[error("cut side must be a proper nonempty vertex subset")]
    InvalidCut,
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("small-graph enumeration supports 1 <= n <= 7, got {0}")]
    EnumerationRange(usize),
    #[error("labeling has {labels} entries but graph has {n} vertices")]
    LengthMismatch { labels: usize, n: usize },
    #[error("invalid label {0}; labels are 0, 1 or 2")]
    InvalidLabel(u8),
    #[error("exhaustive oracle refuses graphs with more than {limit} vertices (got {n})")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("graph6 cannot encode {0} vertices")]
    Graph6TooLarge(usize),
    #[error("line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {message}")]
    InvalidParams { family: String, message: String },
    #[error("invalid embedding metadata: {0}")]
    InvalidEmbedding(String),
    #[error("vertex {0} is in V-minus; the critical-vertex construction does not apply")]
    VertexInMinus(usize),
    #[error("Euler characteristic {0} is outside the formula's range (chi <= 1)")]
    ChiOutOfRange(i64),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
