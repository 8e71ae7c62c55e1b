//! Error type shared by every module of the engine.

use thiserror::Error;

/// All domain failures surfaced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ranks and degrees vectors disagree in length or are empty.
    #[error("ranks and degrees must have equal nonzero length (got {ranks} ranks, {degrees} degrees)")]
    LengthMismatch { ranks: usize, degrees: usize },

    /// Total rank and degree share a factor; slopes would be ambiguous.
    #[error("total rank {rank} and total degree {degree} must be coprime (gcd = {gcd})")]
    NotCoprime { rank: i64, degree: i64, gcd: i64 },

    /// The engine computes over the projective line only.
    #[error("only genus 0 is supported (got genus {0})")]
    UnsupportedGenus(u32),

    /// Two adjacent nodes both have rank above one.
    #[error("composition {composition:?} is not argyle: adjacent nodes {left_index} and {right_index} both have rank > 1")]
    NotArgyle {
        composition: Vec<u32>,
        left_index: usize,
        right_index: usize,
    },

    /// An admissible labelling reached the edge of the enumeration window.
    #[error("enumeration window boundary touched by admissible degree vector {0:?}")]
    WindowBoundary(Vec<i64>),

    /// A summand degree landed exactly on the total slope.
    #[error("summand degree {degree} equals the total slope {slope}; impossible for coprime labels")]
    SlopeCollision { degree: i64, slope: String },

    /// A requested stratum has no points.
    #[error("empty stratum: {0}")]
    EmptyStratum(String),

    /// The Morse index came out negative.
    #[error("negative Morse index {0}")]
    NegativeMorseIndex(i64),

    /// A class that must count points acquired a negative coefficient.
    #[error("class has a negative coefficient {value} at q^{power}")]
    NegativeClass { power: usize, value: String },

    /// The brute force enumeration would exceed its budget.
    #[error("oracle budget exceeded: {needed} tuples > budget {budget}")]
    OracleBudget { needed: u128, budget: u64 },

    /// The oracle works over prime fields only.
    #[error("oracle modulus {0} is not prime")]
    NotPrime(u64),

    /// Lagrange interpolation produced a non-integer coefficient.
    #[error("interpolation through the samples is not an integer polynomial")]
    NonIntegralInterpolation,

    /// Too few samples for the requested degree bound.
    #[error("need at least {needed} samples for degree bound {degree}, got {got}")]
    NotEnoughSamples {
        needed: usize,
        degree: usize,
        got: usize,
    },

    /// A splitting type failed validation.
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),

    /// The stability system has no unique solution.
    #[error("stability system is singular")]
    SingularSystem,

    /// Two independent computations of the same quantity disagreed.
    #[error("{quantity}: independent routes disagree ({first} vs {second})")]
    RouteMismatch {
        quantity: String,
        first: String,
        second: String,
    },

    /// A solved parameter vector fails one of its defining equations.
    #[error("solution leaves a nonzero residual in equation {row}")]
    NonzeroResidual { row: usize },

    /// Catch-all for malformed input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
