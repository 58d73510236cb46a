use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational")]
    NotRational,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("the convex hull of the columns contains the origin")]
    OriginInHull,
    #[error("interpolation system is singular")]
    SingularSystem,
    #[error("interpolation samples are inconsistent (samples straddle a chamber wall)")]
    InconsistentSamples,
    #[error("interpolation failed after {0} attempts")]
    InterpolationFailed(usize),
    #[error("point is not generic: it lies on the hyperplane with normal {normal:?}")]
    NonGeneric { normal: Vec<i64> },
    #[error("point lies on a chamber wall with normal {normal:?}")]
    OnWall { normal: Vec<i64> },
    #[error("point is outside the open cone spanned by the columns")]
    OutsideCone,
    #[error("chamber enumeration is only supported for s <= 2 (got s = {0}); supply a witness")]
    UnsupportedDimension(usize),
    #[error("matrix is not {0}-prime")]
    NotKPrime(usize),
    #[error("quasi-polynomial value has a non-rational residue")]
    ImaginaryResidue,
    #[error("quasi-polynomial value {0} is not a nonnegative integer")]
    NotCount(String),
    #[error("point is outside the closure of the chamber of validity")]
    OutsideClosure,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("polytope is degenerate: right-hand side is not in the open cone")]
    DegeneratePolytope,
    #[error("internal mismatch: {0}")]
    Mismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}
