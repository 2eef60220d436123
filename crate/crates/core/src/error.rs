use thiserror::Error;

use crate::weyl::Weight;

/// Errors produced by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(√2,√5)")]
    DivisionByZero,

    #[error("generator index {0} is outside 1..=4")]
    InvalidGenerator(usize),

    #[error("weight {0} is not dominant")]
    NotDominant(Box<Weight>),

    #[error("weight {0} has no cells (zero weight)")]
    ZeroWeight(Box<Weight>),

    #[error("weight {0} is not a uniform (0/1) pattern")]
    NotUniform(Box<Weight>),

    #[error("vertex {vertex} is not in the orbit of {weight}")]
    NotInOrbit { weight: Box<Weight>, vertex: Box<Weight> },

    #[error("point set is degenerate: affine rank {rank} < 3")]
    DegenerateHull { rank: usize },

    #[error("cannot parse field scalar from {0:?}")]
    ParseScalar(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
