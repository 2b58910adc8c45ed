use thiserror::Error;

use crate::exactla::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,

    #[error("{0} is not an eigenvalue of the graph")]
    NotAnEigenvalue(Rational),

    #[error("vertex set {vertices} is not a {lambda}-star set")]
    NotAStarSet { lambda: Rational, vertices: String },

    #[error("tableau entry at row {row}, column {col} is zero and cannot be a pivot")]
    ZeroPivot { row: String, col: String },

    #[error("more than {cap} star sets found; raise the enumeration cap")]
    CapExceeded { cap: usize },

    #[error("star-set catalog is incomplete (enumeration cap was hit)")]
    IncompleteCatalog,

    #[error("spectrum has {residual_degree} irrational eigenvalue(s); a full star partition needs a rational spectrum")]
    UnsupportedSpectrum { residual_degree: usize },

    #[error("graph has isolated vertices; {requirement} requires none")]
    IsolatedVertices { requirement: &'static str },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph order {n} exceeds the configured maximum {max}")]
    Size { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    Index { vertex: usize, n: usize },

    #[error("unknown graph name '{0}'")]
    UnknownName(String),

    #[error("graph on {n} vertices exceeds the exhaustive isomorphism limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("not a strongly regular graph: {0}")]
    NotSrg(String),

    #[error("spectrum is not rational ({residual_degree} irrational eigenvalue(s))")]
    IrrationalSpectrum { residual_degree: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
