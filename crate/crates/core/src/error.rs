use alloc::string::String;

/// Errors raised by graph construction and the distance computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("weight {value} at ({row}, {col}) is outside [0, 1]")]
    WeightOutOfRange { row: usize, col: usize, value: f64 },
    #[error("diagonal entry {value} at vertex {vertex} must be zero")]
    SelfLoop { vertex: usize, value: f64 },
    #[error("undirected adjacency is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("expected a directed graph")]
    ExpectedDirected,
    #[error("expected an undirected graph")]
    ExpectedUndirected,
    #[error("graphs have different vertex counts ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("graphs differ in directedness")]
    DirectednessMismatch,
    #[error("graph has weights other than 0 and 1")]
    Weighted,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("collection needs at least {0} graphs")]
    CollectionTooSmall(usize),
    #[error("collection mixes vertex counts or directedness")]
    HeterogeneousCollection,
    #[error("n = {n} exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("process exhausted at step {step}: no legal edit left")]
    ProcessExhausted { step: usize },
    #[error("eigenvalue {value} is negative beyond the snapping threshold")]
    NegativeEigenvalue { value: f64 },
    #[error("symmetric eigensolver did not converge")]
    NoConvergence,
    #[error("root of the normalization equation could not be bracketed")]
    BracketNotFound,
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// True for failures of the numerical machinery rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NegativeEigenvalue { .. } | Error::NoConvergence | Error::BracketNotFound | Error::Numerical(_)
        )
    }

    /// True for malformed graph data (as opposed to well-formed data used in
    /// a way the operation does not allow).
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::NoVertices
                | Error::NotSquare { .. }
                | Error::WeightOutOfRange { .. }
                | Error::SelfLoop { .. }
                | Error::Asymmetric { .. }
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
