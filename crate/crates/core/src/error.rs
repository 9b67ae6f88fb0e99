use thiserror::Error;

/// Errors raised by the constructors and algorithms of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a noncrossing partition: {0}")]
    NotNoncrossing(String),
    #[error("({i},{j}) is not an inversion of {of}")]
    NotAnInversion { i: usize, j: usize, of: String },
    #[error("{0} is not quasigrassmannian")]
    NotQuasiGrassmannian(String),
    #[error("mismatched shapes: {0}")]
    ShapeMismatch(String),
    #[error("n = {n} exceeds the enumeration bound {bound} (set QGRASS_MAX_N to raise it)")]
    BoundExceeded { n: usize, bound: usize },
    #[error("polynomial is not quasisymmetric in {0} variables")]
    NotQuasisymmetric(usize),
    #[error("need at least {needed} variables, got {got}")]
    InsufficientVariables { needed: usize, got: usize },
    #[error("linear system is infeasible: {0}")]
    Infeasible(String),
    #[error("Le diagram is not noncrossing")]
    CrossingLeDiagram,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
