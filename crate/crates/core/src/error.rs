use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("ghost edge ({0}, {1}): pattern edge image is not an edge of the host")]
    GhostEdge(usize, usize),

    #[error("unsupported colouring: {0}")]
    UnsupportedColouring(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("cost guard: {0}")]
    CostGuard(String),

    #[error("enumeration cap exceeded: estimated {estimate} nodes, cap {cap}")]
    CapExceeded { estimate: u128, cap: u128 },

    #[error("replacement pair ({0}, {1}) is not an edge of the host")]
    GhostReplacement(usize, usize),

    #[error("no exchange candidate for pattern vertex {vertex} with {ghosts} ghost edges left")]
    NoCandidate { vertex: usize, ghosts: usize },

    #[error("ghost edge touches protected pattern vertex {0}")]
    ProtectedGhost(usize),

    #[error("stale gadget: {0}")]
    StaleGadget(String),

    #[error("no copy of the pattern could be constructed in the host")]
    NoCopy,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
