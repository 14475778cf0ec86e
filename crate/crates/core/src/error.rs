use alloc::string::String;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidField(u64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the maps do not compose to zero")]
    NotAComplex,
    #[error("the map does not commute with the differentials")]
    NotAChainMap,
    #[error("multiplication by x{} and x{} does not commute at {sigma}", .i + 1, .j + 1)]
    NotCommutative { sigma: Subset, i: usize, j: usize },
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,
    #[error("exponent at byte {position} must be positive")]
    NonPositiveExponent { position: usize },
    #[error("the ideal is not squarefree")]
    NotSquarefree,
    #[error("{0} is not a face of the complex")]
    NotAFace(Subset),
    #[error("the void complex has no Stanley-Reisner ring")]
    VoidComplex,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("vertex {vertex} lies outside the ground set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{count} variables exceed the supported maximum of {max}")]
    TooManyVariables { count: usize, max: usize },
    #[error("rings differ: {0}")]
    RingMismatch(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
