//! Classical point-based precision/recall, F-beta, and the unit-range view
//! that connects point scoring to range scoring.

use crate::error::{Error, Result};
use crate::range::{RangeSeries, TimeRange};

/// Point-level confusion counts between two label sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConfusionCounts {
    pub true_positives: u64,
    pub false_positives: u64,
    pub false_negatives: u64,
}

impl ConfusionCounts {
    pub fn new(true_positives: u64, false_positives: u64, false_negatives: u64) -> Self {
        Self { true_positives, false_positives, false_negatives }
    }

    /// Counts computed by interval arithmetic over sorted disjoint ranges;
    /// no per-point enumeration.
    pub fn from_ranges(real: &[TimeRange], predicted: &[TimeRange]) -> Self {
        let mut tp: u64 = 0;
        let mut i = 0;
        let mut j = 0;
        while i < real.len() && j < predicted.len() {
            if let Some(o) = real[i].overlap(&predicted[j]) {
                tp += o.len();
            }
            if real[i].end() <= predicted[j].end() {
                i += 1;
            } else {
                j += 1;
            }
        }
        let real_points: u64 = real.iter().map(TimeRange::len).sum();
        let predicted_points: u64 = predicted.iter().map(TimeRange::len).sum();
        Self {
            true_positives: tp,
            false_positives: predicted_points - tp,
            false_negatives: real_points - tp,
        }
    }

    pub fn precision(&self) -> Result<f64> {
        let denom = self.true_positives + self.false_positives;
        if denom == 0 {
            return Err(Error::ZeroDenominator { metric: "precision" });
        }
        Ok(self.true_positives as f64 / denom as f64)
    }

    pub fn recall(&self) -> Result<f64> {
        let denom = self.true_positives + self.false_negatives;
        if denom == 0 {
            return Err(Error::ZeroDenominator { metric: "recall" });
        }
        Ok(self.true_positives as f64 / denom as f64)
    }
}

/// Expands a normalized series into one unit range per covered point, in
/// order. Consecutive units stay distinct ranges; they are deliberately not
/// re-merged.
pub fn to_unit_ranges(series: &RangeSeries) -> Vec<TimeRange> {
    let mut units = Vec::with_capacity(series.total_points() as usize);
    for r in series {
        for t in r.start()..=r.end() {
            units.push(TimeRange::unit(t));
        }
    }
    units
}

/// Weighted harmonic mean of precision and recall; `beta` is the relative
/// importance of recall. Defined as 0 when both inputs are 0.
pub fn f_beta(precision: f64, recall: f64, beta: f64) -> f64 {
    debug_assert!(beta > 0.0, "beta must be positive");
    if precision == 0.0 && recall == 0.0 {
        return 0.0;
    }
    let b2 = beta * beta;
    (1.0 + b2) * precision * recall / (b2 * precision + recall)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(s: u64, e: u64) -> TimeRange {
        TimeRange::new(s, e).unwrap()
    }

    fn series(pairs: &[(u64, u64)]) -> RangeSeries {
        RangeSeries::from_pairs(pairs).unwrap()
    }

    #[test]
    fn unit_expansion() {
        assert_eq!(
            to_unit_ranges(&series(&[(1, 3)])),
            vec![tr(1, 1), tr(2, 2), tr(3, 3)]
        );
        assert!(to_unit_ranges(&RangeSeries::empty()).is_empty());
        assert_eq!(to_unit_ranges(&series(&[(5, 5)])), vec![tr(5, 5)]);
    }

    #[test]
    fn counts_by_interval_arithmetic() {
        let real = series(&[(1, 3), (5, 5), (7, 8)]);
        let pred = series(&[(2, 3), (6, 6), (7, 8)]);
        let c = ConfusionCounts::from_ranges(real.ranges(), pred.ranges());
        assert_eq!(c, ConfusionCounts::new(4, 1, 2));

        let real = series(&[(1, 3), (6, 8)]);
        let pred = series(&[(1, 2), (6, 6), (10, 11)]);
        let c = ConfusionCounts::from_ranges(real.ranges(), pred.ranges());
        assert_eq!(c, ConfusionCounts::new(3, 2, 3));
        assert_eq!(c.precision().unwrap(), 0.6);
        assert_eq!(c.recall().unwrap(), 0.5);

        let same = series(&[(2, 4), (9, 12)]);
        let c = ConfusionCounts::from_ranges(same.ranges(), same.ranges());
        assert_eq!(c.false_positives, 0);
        assert_eq!(c.false_negatives, 0);
    }

    #[test]
    fn degenerate_denominators() {
        let c = ConfusionCounts::new(0, 5, 5);
        assert_eq!(c.precision().unwrap(), 0.0);
        assert_eq!(c.recall().unwrap(), 0.0);

        let c = ConfusionCounts::new(0, 0, 3);
        assert_eq!(
            c.precision(),
            Err(Error::ZeroDenominator { metric: "precision" })
        );
        assert_eq!(c.recall().unwrap(), 0.0);

        let c = ConfusionCounts::new(0, 4, 0);
        assert_eq!(c.recall(), Err(Error::ZeroDenominator { metric: "recall" }));
    }

    #[test]
    fn f_beta_values() {
        assert!((f_beta(0.6, 0.5, 1.0) - 6.0 / 11.0).abs() < 1e-15);
        for x in [0.0, 0.25, 0.7, 1.0] {
            for beta in [0.5, 1.0, 2.0] {
                assert!((f_beta(x, x, beta) - x).abs() < 1e-12);
            }
        }
        assert_eq!(f_beta(1.0, 1.0, 0.5), 1.0);
        assert_eq!(f_beta(0.0, 0.0, 1.0), 0.0);
        assert_eq!(f_beta(0.0, 0.9, 1.0), 0.0);
        // beta != 1 weighs the two sides differently
        assert_ne!(f_beta(0.2, 0.8, 2.0), f_beta(0.8, 0.2, 2.0));
        assert!(f_beta(0.2, 0.8, 2.0) > f_beta(0.8, 0.2, 2.0));
    }
}
