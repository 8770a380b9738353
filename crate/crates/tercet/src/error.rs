//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two scalars (or a matrix and a scalar) live in different field contexts.
    #[error("field context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not invertible modulo {1}")]
    NonInvertible(String, u32),

    #[error("cannot parse {0:?} as a scalar: {1}")]
    ScalarParse(String, String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,

    #[error("duplicate point: {0}")]
    DuplicatePoint(String),

    #[error("the zero form is not allowed")]
    ZeroForm,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("coefficient count {got} does not match degree {degree} (expected {expected})")]
    BadCoefficientCount {
        degree: u32,
        expected: usize,
        got: usize,
    },

    #[error("decomposition term {0} has a zero coefficient")]
    ZeroLambda(usize),

    #[error("decomposition must have at least one term")]
    EmptyDecomposition,

    #[error("decomposition sums to the zero form")]
    DegenerateDecomposition,

    #[error("contraction degree {a} out of range 1..={max}")]
    ContractionDegree { a: u32, max: u32 },

    #[error("curve degree must be at least 1")]
    CurveDegree,

    #[error("split is inconsistent with the point set: {0}")]
    InconsistentSplit(String),

    #[error("point sets of the two decompositions are identical")]
    IdenticalPointSets,

    #[error("decomposition does not reproduce the form")]
    DecompositionMismatch,

    #[error("operation requires a prime-field context")]
    RequiresPrimeField,

    #[error("empty point set")]
    EmptyPointSet,

    #[error("subset budget exceeded: {needed} determinant tests needed, cap is {cap}")]
    CapExceeded { needed: u128, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
