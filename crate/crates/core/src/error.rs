use thiserror::Error;

use crate::ifs::FamilyTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid side lengths a={a}, b={b}: {reason}")]
    InvalidParams { a: f64, b: f64, reason: String },

    #[error("degenerate triangle for a={a}, b={b} (vertex radicand {radicand:e} <= 0)")]
    DegenerateTriangle { a: f64, b: f64, radicand: f64 },

    #[error("{family} is not defined for a={a}, b={b}: requires {requirement}")]
    FamilyDomainViolation {
        family: FamilyTag,
        a: f64,
        b: f64,
        requirement: &'static str,
    },

    #[error("affine map is singular (det = {det:e})")]
    SingularMap { det: f64 },

    #[error("consistency check failed: {identity} (residual {residual:e})")]
    ConsistencyFailure { identity: String, residual: f64 },

    #[error("invalid scaling ratio {value} at position {index}: must lie in [0, 1)")]
    InvalidRatio { index: usize, value: f64 },

    #[error("no sign change of the Moran objective on (0, {upper}]; need at least two positive ratios")]
    BracketFailure { upper: f64 },

    #[error("bisection stopped with residual {residual:e} above tolerance {tol:e}")]
    NoConvergence { residual: f64, tol: f64 },

    #[error("finite-difference stencil at ({a}, {b}) leaves the {family} domain")]
    DomainEdge { family: FamilyTag, a: f64, b: f64 },

    #[error("depth {requested} exceeds the cap of {cap}")]
    DepthCap { requested: usize, cap: usize },

    #[error("point set is empty")]
    EmptySet,

    #[error("bad viewport or raster size: {0}")]
    BadViewport(String),

    #[error("word has length {actual}, expected {expected}")]
    WordLengthMismatch { expected: usize, actual: usize },

    #[error("invalid word or address: {0}")]
    InvalidWord(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o failure: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
