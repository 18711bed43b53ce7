use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("degenerate interpolation nodes")]
    DegenerateNodes,
    #[error("series has {0} factors (1 - t) in its denominator; expected exactly one")]
    NotSimplePoleAtOne(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("substitution produces a negative exponent {0} in the denominator")]
    NegativeExponent(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("no input points")]
    Empty,
    #[error("point {index} has length {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("linear form has length {found}, expected {expected}")]
    FormDimension { expected: usize, found: usize },
    #[error("{0}")]
    Violations(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("cover relations contain a cycle through element {0}")]
    Cycle(usize),
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}
