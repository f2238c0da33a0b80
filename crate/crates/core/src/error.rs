//! Error type shared across the crate.

use crate::range::TimeRange;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid time range: start {start} must be <= end {end}")]
    InvalidRange { start: u64, end: u64 },

    #[error("time range end {0} is too large")]
    RangeTooLarge(u64),

    #[error("range [{start}, {end}] lies outside a domain of {n_points} points")]
    RangeOutsideDomain { start: u64, end: u64, n_points: u64 },

    #[error("time domain must contain at least one point")]
    EmptyDomain,

    #[error("alpha must lie in [0, 1], got {0}")]
    InvalidAlpha(f64),

    #[error("recall is undefined: the set of real anomaly ranges is empty")]
    EmptyGroundTruth,

    #[error("precision is undefined: the set of predicted anomaly ranges is empty")]
    EmptyPrediction,

    #[error("classical {metric} is undefined: denominator is zero")]
    ZeroDenominator { metric: &'static str },

    #[error("bias position {index} out of range for length {length}")]
    PositionOutOfRange { index: u64, length: u64 },

    #[error("overlap part {part:?} lies outside the scored range {range:?}")]
    PartOutsideRange { part: TimeRange, range: TimeRange },

    #[error("overlap parts must be pairwise disjoint")]
    OverlappingParts,

    #[error(
        "custom bias weight must be positive and finite, got {value} \
         at position {index} of length {length}"
    )]
    InvalidBiasWeight { value: f64, index: u64, length: u64 },

    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
}
