use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidRootSystem {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse root system type {0:?}")]
    ParseRootSystem(String),
    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has length {got}, expected rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },
    #[error("Weyl group has more than {bound} elements")]
    WeylBoundExceeded { bound: usize },
    #[error("element length {length} exceeds the reduced-word bound {bound}")]
    WordLengthBoundExceeded { length: usize, bound: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("lengths are not additive: l(w1 w2) = {product}, l(w1) + l(w2) = {sum}")]
    NotLengthAdditive { product: usize, sum: usize },
    #[error("commutator exponent requested for i = j = {0}")]
    SameIndex(usize),
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("rank {rank} exceeds the M-group bound {bound}")]
    RankBoundExceeded { rank: usize, bound: usize },
    #[error("|M/Z(M)| = {0} is not a perfect square")]
    NonSquareIndex(u64),
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("matrix is not a rotation")]
    NotRotation,
    #[error("square root not representable exactly in the scalar type")]
    Inexact,
    #[error("Gamma function pole at {0}")]
    GammaPole(f64),
    #[error("quadrature precondition violated: {0}")]
    QuadraturePrecondition(&'static str),
    #[error("quadrature did not converge within {subdivisions} subdivisions (error estimate {error_estimate:e})")]
    NoConvergence {
        subdivisions: usize,
        error_estimate: f64,
    },
    #[error("c-function has a pole at this parameter")]
    Pole,
    #[error("c-function vanishes at this parameter")]
    Zero,
    #[error("pole and zero collide in the c-factor product")]
    Indeterminate,
    #[error("table too large: {0} elements")]
    TableTooLarge(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
