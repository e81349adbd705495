use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("polygon size {0} is too small (need at least {1})")]
    PolygonTooSmall(usize, usize),
    #[error("invalid diagonal {0}-{1} of the {2}-gon")]
    InvalidDiagonal(usize, usize, usize),
    #[error("diagonal {0} is not in the triangulation")]
    DiagonalNotPresent(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("invalid point configuration: {0}")]
    InvalidConfiguration(String),
    #[error("coincident points")]
    CoincidentPoints,
    #[error("singular affine map")]
    SingularMap,
    #[error("dimension < 1")]
    DimensionTooSmall,
    #[error("parameters do not define a polytope")]
    NotAPolytope,
    #[error("parameters not suitable: inequality x_{i} - x_{j} <= f({i},{j}) is {reason}")]
    UnsuitableParameters { i: usize, j: usize, reason: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
