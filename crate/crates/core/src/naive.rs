//! Reference evaluation engine.
//!
//! Every scored range is compared against every range on the opposite side,
//! and the overlap-size function is evaluated with its per-point loop. This
//! is the straightforward O(N_r x N_p) realization of the scoring model and
//! serves as the correctness baseline for the sweep engine.

use crate::bias::{omega_single, BiasKind, GammaKind};
use crate::config::MetricConfig;
use crate::error::{Error, Result};
use crate::range::TimeRange;
use crate::RangeScores;

/// 1 if `real` shares at least one point with any predicted range, else 0.
pub fn existence_reward(real: &TimeRange, predicted: &[TimeRange]) -> f64 {
    if predicted.iter().any(|p| real.overlap(p).is_some()) {
        1.0
    } else {
        0.0
    }
}

/// Scaling for fragmented detection: 1 when `target` overlaps at most one
/// range of `others`, otherwise `gamma(x)` for `x` distinct overlapping ranges.
pub fn cardinality_factor(target: &TimeRange, others: &[TimeRange], gamma: &GammaKind) -> f64 {
    let x = others.iter().filter(|o| target.overlap(o).is_some()).count();
    gamma.factor(x)
}

/// Cumulative size/position/cardinality reward for `target` against `others`.
pub fn overlap_reward(
    target: &TimeRange,
    others: &[TimeRange],
    gamma: &GammaKind,
    bias: &BiasKind,
) -> Result<f64> {
    let mut sum = 0.0;
    for other in others {
        sum += omega_single(target, target.overlap(other), bias)?;
    }
    // the disjoint per-range fractions cannot exceed 1 in exact arithmetic;
    // cap accumulated rounding
    let sum = sum.min(1.0);
    Ok(cardinality_factor(target, others, gamma) * sum)
}

/// Recall earned by a single real range.
pub fn single_range_recall(
    real: &TimeRange,
    predicted: &[TimeRange],
    cfg: &MetricConfig,
) -> Result<f64> {
    let alpha = cfg.alpha();
    let existence = existence_reward(real, predicted);
    let reward = overlap_reward(real, predicted, cfg.recall_gamma(), cfg.recall_bias())?;
    Ok(alpha * existence + (1.0 - alpha) * reward)
}

/// Precision earned by a single predicted range. There is no existence term:
/// merely touching a real anomaly is too low a bar for prediction quality.
pub fn single_range_precision(
    predicted: &TimeRange,
    real: &[TimeRange],
    cfg: &MetricConfig,
) -> Result<f64> {
    overlap_reward(predicted, real, cfg.precision_gamma(), cfg.precision_bias())
}

/// Average of [`single_range_recall`] over all real ranges.
pub fn range_recall(real: &[TimeRange], predicted: &[TimeRange], cfg: &MetricConfig) -> Result<f64> {
    if real.is_empty() {
        return Err(Error::EmptyGroundTruth);
    }
    let mut total = 0.0;
    for r in real {
        total += single_range_recall(r, predicted, cfg)?;
    }
    Ok(total / real.len() as f64)
}

/// Average of [`single_range_precision`] over all predicted ranges.
pub fn range_precision(
    real: &[TimeRange],
    predicted: &[TimeRange],
    cfg: &MetricConfig,
) -> Result<f64> {
    if predicted.is_empty() {
        return Err(Error::EmptyPrediction);
    }
    let mut total = 0.0;
    for p in predicted {
        total += single_range_precision(p, real, cfg)?;
    }
    Ok(total / predicted.len() as f64)
}

/// Both metrics; fails when either side is empty.
pub fn evaluate(real: &[TimeRange], predicted: &[TimeRange], cfg: &MetricConfig) -> Result<RangeScores> {
    Ok(RangeScores {
        recall: range_recall(real, predicted, cfg)?,
        precision: range_precision(real, predicted, cfg)?,
    })
}
