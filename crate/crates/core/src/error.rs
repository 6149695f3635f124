use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph not connected")]
    NotConnected,
    #[error("edge {edge}: endpoint {vertex} out of range (vertex count {count})")]
    EndpointOutOfRange { edge: usize, vertex: usize, count: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is not simple")]
    NotSimple,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no periodicity")]
    NoPeriodicity,
    #[error("labels do not span Z^d")]
    LabelsDoNotSpan,
    #[error("label image is a proper sublattice")]
    ProperSublattice,
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("singular matrix: {0}")]
    Singular(&'static str),
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("degenerate harmonic image")]
    DegenerateHarmonicImage,
    #[error("girth exceeds cap {0}")]
    GirthExceedsCap(usize),
    #[error("degenerate vertex {0}")]
    DegenerateVertex(usize),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("inconsistent orientation at vertex {0}")]
    InconsistentOrientation(usize),
    #[error("inconsistent counts: {0}")]
    InconsistentCounts(String),
    #[error("no constraints")]
    NoConstraints,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
    #[error("unsupported dimension {0} for this format")]
    UnsupportedDimension(usize),
}

impl Error {
    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Singular(_)
                | Error::NotPositiveDefinite
                | Error::DegenerateHarmonicImage
                | Error::GirthExceedsCap(_)
                | Error::DegenerateVertex(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
