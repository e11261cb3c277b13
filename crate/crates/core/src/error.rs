use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),

    #[error("fiber {0} is not in the interior of the polytope")]
    FiberNotInterior(String),

    #[error("weight vector has a zero entry at facet {0}")]
    ZeroWeight(usize),

    #[error("holonomy has a zero entry at coordinate {0}")]
    ZeroHolonomy(usize),

    #[error("holonomy coordinate {0} is not unitary")]
    NotUnitary(usize),

    #[error("polytope has no monotone fiber")]
    NoMonotoneFiber,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors raised by the mathematics rather than by malformed input.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::FiberNotInterior(_)
                | Error::ZeroWeight(_)
                | Error::ZeroHolonomy(_)
                | Error::NotUnitary(_)
                | Error::NoMonotoneFiber
                | Error::Inconsistent(_)
        )
    }
}
