use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra {family}_{rank}")]
    InvalidAlgebra { family: String, rank: usize },

    #[error("node {node} is outside 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("weight has {got} coordinates, algebra has rank {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("rigged configuration has {got} rigged partitions, algebra has rank {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("string lengths must be positive")]
    ZeroLengthString,

    #[error("multiplicity array entry ({node}, {width}) must have positive width")]
    ZeroWidth { node: usize, width: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("operation requires type A, got {0}")]
    NotTypeA(String),

    #[error("invalid type-A tuple: {0}")]
    InvalidTuple(String),

    #[error("configuration does not have the requested weight: {0}")]
    WeightMismatch(String),

    #[error("element is not in RC(L)")]
    NotInRc,

    #[error("crystal generation exceeded the vertex cap of {cap}")]
    VertexCapExceeded { cap: usize },

    #[error("promotion failed: {0}")]
    Promotion(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}
