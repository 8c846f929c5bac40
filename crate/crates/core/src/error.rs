use crate::num::{Int, Rat};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix columns do not generate Z^d (Smith diagonal {diagonal:?})")]
    NotFull { diagonal: Vec<Int> },
    #[error("column cone contains a line (positive relation {relation:?})")]
    NotPointed { relation: Vec<Rat> },
    #[error("sub-lattice generators are not in the rational span of the ambient generators")]
    SpanViolation,
    #[error("sub-lattice generators do not lie in the ambient lattice")]
    NotSublattice,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("weight vector is degenerate for this matrix")]
    DegenerateWeight,
    #[error("weight is not generic: face {face:?} is not a simplex")]
    NonGenericWeight { face: Vec<usize> },
    #[error("face {face:?} is not in the umbrella")]
    FaceNotInUmbrella { face: Vec<usize> },
    #[error("term order is not a global order (weight {weight:?})")]
    NonGlobalOrder { weight: Vec<Rat> },
    #[error("kernel vector is not primitive (gcd {gcd})")]
    NonPrimitiveKernel { gcd: Int },
    #[error("corank is {corank}, expected 1")]
    CorankNotOne { corank: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("resonant parameter: exponent difference {difference:?} is integral")]
    ResonantParameter { difference: Vec<Rat> },
    #[error("operator has no terms")]
    EmptyOperator,
    #[error("slope conversion is singular at s_L = {0}")]
    SingularConversion(Rat),
    #[error("parameter lists intersect modulo 1 at {0}")]
    ListsIntersect(Rat),
    #[error("expected lengths m = m' (regular case), got m' = {m_prime}, m = {m}")]
    NotRegularCase { m_prime: usize, m: usize },
    #[error("expected m' > m (confluent case), got m' = {m_prime}, m = {m}")]
    NotConfluentCase { m_prime: usize, m: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotFull { .. } => "NotFull",
            Error::NotPointed { .. } => "NotPointed",
            Error::SpanViolation => "SpanViolation",
            Error::NotSublattice => "NotSublattice",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::DegenerateWeight => "DegenerateWeight",
            Error::NonGenericWeight { .. } => "NonGenericWeight",
            Error::FaceNotInUmbrella { .. } => "FaceNotInUmbrella",
            Error::NonGlobalOrder { .. } => "NonGlobalOrder",
            Error::NonPrimitiveKernel { .. } => "NonPrimitiveKernel",
            Error::CorankNotOne { .. } => "CorankNotOne",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::ResonantParameter { .. } => "ResonantParameter",
            Error::EmptyOperator => "EmptyOperator",
            Error::SingularConversion(_) => "SingularConversion",
            Error::ListsIntersect(_) => "ListsIntersect",
            Error::NotRegularCase { .. } => "NotRegularCase",
            Error::NotConfluentCase { .. } => "NotConfluentCase",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Overflow(_) => "Overflow",
        }
    }
}
