use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("cannot parse shape from {0:?}")]
    Parse(String),
    #[error("parts {0:?} are not a weakly decreasing list of positive integers")]
    NotDecreasing(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("ambient variable counts differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("polynomial is not symmetric in x: leading exponent {0:?} is not a partition")]
    NonSymmetric(Vec<u32>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("column {0} is not a descent")]
    NotADescent(usize),
    #[error("descent at column {0} joins two mixed columns and cannot be resolved")]
    UnresolvableMM(usize),
    #[error("columns of the filling are not weakly increasing at column {0}")]
    NotColumnWeak(usize),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FillingError {
    #[error("entry {0} is outside the supported range 1..=63")]
    EntryOutOfRange(u32),
    #[error("filling does not match shape {0}")]
    ShapeMismatch(String),
    #[error("empty cell at row {0}, column {1}")]
    EmptyCell(usize, usize),
    #[error("rows or columns fail to weakly increase at row {0}, column {1}")]
    NotIncreasing(usize, usize),
    #[error("cannot parse filling: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("component containing {node} has {count} highest-weight nodes")]
    SourceCount { node: String, count: usize },
    #[error("statistics vary inside the component containing {0}")]
    StatisticMismatch(String),
    #[error("highest weight {0:?} is not a partition")]
    NonPartitionWeight(Vec<u32>),
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("the zero polynomial has no Newton polytope")]
    ZeroPolynomial,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmegaError {
    #[error("{vars} variables cannot resolve degree {degree}; need at least as many variables as the degree")]
    InsufficientVariables { vars: usize, degree: usize },
}

/// Umbrella error for callers that mix modules.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Filling(#[from] FillingError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Omega(#[from] OmegaError),
}
