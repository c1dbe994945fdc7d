use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point count {0} is not a positive multiple of 4")]
    BadPointCount(usize),
    #[error("malformed matching: {0}")]
    MalformedMatching(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("grading elements live on different pointed matched circles")]
    CircleMismatch,
    #[error("double cosets belong to different grading sets")]
    GradingSetMismatch,
    #[error("coset representative is only defined up to a central ambiguity")]
    IndeterminateCoset,
    #[error("no element of the coset has the requested homology class")]
    NoSolution,
    #[error("closed diagram has no boundary")]
    ClosedDiagramHasNoBoundary,
    #[error("domain does not connect the given generators")]
    NotConnecting,
    #[error("no rational domain connects {from} to {to}")]
    NoConnectingDomain { from: String, to: String },
    #[error("no rational domain connects {from} to {to}")]
    NoRationalDomain { from: String, to: String },
    #[error("relative grading is not determined: a periodic domain has nonzero Maslov index")]
    IndeterminateGrading,
    #[error("boundaries do not match for gluing: {0}")]
    BoundaryMismatch(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("unknown algebra word {0:?}")]
    UnknownWord(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("unknown algebra element {0:?}")]
    UnknownAlgebraElement(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}
