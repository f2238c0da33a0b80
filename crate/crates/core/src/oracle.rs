//! Brute-force per-point reference implementations, intended for validation
//! and test suites.
//!
//! Everything here enumerates individual timestamps and re-states the scoring
//! rules from scratch; nothing calls into the engine or bias code paths, so
//! these functions stay meaningful as an independent cross-check. They are
//! O(points) or worse and not meant for production scoring.

use std::collections::HashSet;

use crate::bias::{BiasKind, GammaKind};
use crate::config::MetricConfig;
use crate::range::TimeRange;

/// Every covered timestamp, as a set.
pub fn point_set(ranges: &[TimeRange]) -> HashSet<u64> {
    let mut points = HashSet::new();
    for r in ranges {
        for t in r.start()..=r.end() {
            points.insert(t);
        }
    }
    points
}

/// Positional weight restated independently of `BiasKind::weight`.
fn weight(kind: &BiasKind, index: u64, length: u64) -> f64 {
    match kind {
        BiasKind::Flat => 1.0,
        BiasKind::Front => (length - index + 1) as f64,
        BiasKind::Back => index as f64,
        BiasKind::Middle => {
            if (index as f64) <= (length as f64) / 2.0 {
                index as f64
            } else {
                (length - index + 1) as f64
            }
        }
        // a custom hook is caller-provided data, not engine code
        BiasKind::Custom(f) => f(index, length),
    }
}

fn gamma_value(kind: &GammaKind, x: usize) -> f64 {
    match kind {
        GammaKind::One => 1.0,
        GammaKind::Reciprocal => 1.0 / x as f64,
        GammaKind::Custom(f) => f(x).clamp(0.0, 1.0),
    }
}

/// Weighted covered fraction of `range`, walking every point and testing
/// membership in `covered`.
pub fn omega_by_points(range: &TimeRange, covered: &HashSet<u64>, kind: &BiasKind) -> f64 {
    let length = range.len();
    let mut mine = 0.0;
    let mut max = 0.0;
    for i in 1..=length {
        let w = weight(kind, i, length);
        max += w;
        if covered.contains(&(range.start() + i - 1)) {
            mine += w;
        }
    }
    mine / max
}

/// Recall of one real range, restated literally: existence from total overlap
/// size, a per-prediction weighted overlap sum, and a distinct-overlap count
/// driving the cardinality factor.
pub fn single_range_recall(
    real: &TimeRange,
    predicted: &[TimeRange],
    cfg: &MetricConfig,
) -> f64 {
    let mut overlap_points: u64 = 0;
    let mut distinct = 0usize;
    let mut omega_sum = 0.0;
    for p in predicted {
        let shared = point_set(std::slice::from_ref(p))
            .into_iter()
            .filter(|t| real.contains(*t))
            .collect::<HashSet<u64>>();
        if !shared.is_empty() {
            distinct += 1;
        }
        overlap_points += shared.len() as u64;
        omega_sum += omega_by_points(real, &shared, cfg.recall_bias());
    }
    let existence = if overlap_points >= 1 { 1.0 } else { 0.0 };
    let factor = if distinct <= 1 {
        1.0
    } else {
        gamma_value(cfg.recall_gamma(), distinct)
    };
    cfg.alpha() * existence + (1.0 - cfg.alpha()) * factor * omega_sum
}

/// Precision of one predicted range; same structure with no existence term.
pub fn single_range_precision(
    predicted: &TimeRange,
    real: &[TimeRange],
    cfg: &MetricConfig,
) -> f64 {
    let mut distinct = 0usize;
    let mut omega_sum = 0.0;
    for r in real {
        let shared = point_set(std::slice::from_ref(r))
            .into_iter()
            .filter(|t| predicted.contains(*t))
            .collect::<HashSet<u64>>();
        if !shared.is_empty() {
            distinct += 1;
        }
        omega_sum += omega_by_points(predicted, &shared, cfg.precision_bias());
    }
    let factor = if distinct <= 1 {
        1.0
    } else {
        gamma_value(cfg.precision_gamma(), distinct)
    };
    factor * omega_sum
}

/// Mean single-range recall; `None` when there is no ground truth.
pub fn range_recall(real: &[TimeRange], predicted: &[TimeRange], cfg: &MetricConfig) -> Option<f64> {
    if real.is_empty() {
        return None;
    }
    let total: f64 = real
        .iter()
        .map(|r| single_range_recall(r, predicted, cfg))
        .sum();
    Some(total / real.len() as f64)
}

/// Mean single-range precision; `None` when there are no predictions.
pub fn range_precision(
    real: &[TimeRange],
    predicted: &[TimeRange],
    cfg: &MetricConfig,
) -> Option<f64> {
    if predicted.is_empty() {
        return None;
    }
    let total: f64 = predicted
        .iter()
        .map(|p| single_range_precision(p, real, cfg))
        .sum();
    Some(total / predicted.len() as f64)
}

/// Confusion counts by raw point enumeration.
pub fn classical_counts_by_points(
    real: &[TimeRange],
    predicted: &[TimeRange],
) -> crate::classical::ConfusionCounts {
    let r = point_set(real);
    let p = point_set(predicted);
    crate::classical::ConfusionCounts::new(
        r.intersection(&p).count() as u64,
        p.difference(&r).count() as u64,
        r.difference(&p).count() as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::range::RangeSeries;

    #[test]
    fn oracle_reproduces_frozen_examples() {
        let real = RangeSeries::from_pairs(&[(1, 5), (11, 15)]).unwrap();
        let pred = RangeSeries::from_pairs(&[(2, 3), (13, 14), (16, 17)]).unwrap();
        let cfg = MetricConfig::default().with_gamma(GammaKind::Reciprocal);
        let recall = range_recall(real.ranges(), pred.ranges(), &cfg).unwrap();
        assert!((recall - 0.4).abs() < 1e-12);
        let precision = range_precision(real.ranges(), pred.ranges(), &cfg).unwrap();
        assert!((precision - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn oracle_counts_match_interval_arithmetic() {
        let real = RangeSeries::from_pairs(&[(1, 3), (6, 8)]).unwrap();
        let pred = RangeSeries::from_pairs(&[(1, 2), (6, 6), (10, 11)]).unwrap();
        assert_eq!(
            classical_counts_by_points(real.ranges(), pred.ranges()),
            crate::classical::ConfusionCounts::new(3, 2, 3)
        );
    }
}
