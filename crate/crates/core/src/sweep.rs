//! Optimized evaluation engine.
//!
//! A single simultaneous pass over both range sets (ordered by start) visits
//! exactly the non-empty pairwise intersections, and the overlap-size
//! function is evaluated in closed form for built-in bias kinds. Cost is
//! O(N_r + N_p) cursor steps plus one O(1) step per overlapping pair; a range
//! is retired as soon as its end precedes the surviving end on the other
//! side. Scoring streams over the pairs without materializing them, since
//! pairs for a given range always arrive consecutively.

use crate::bias::{omega_closed_form_part, BiasKind, GammaKind};
use crate::config::MetricConfig;
use crate::error::{Error, Result};
use crate::range::TimeRange;
use crate::RangeScores;

/// All non-empty intersections between two sorted disjoint range sets, indexed
/// from both sides. Each intersection appears exactly once per side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OverlapAssignment {
    by_real: Vec<Vec<(usize, TimeRange)>>,
    by_predicted: Vec<Vec<(usize, TimeRange)>>,
}

impl OverlapAssignment {
    /// Overlaps of real range `i` as `(predicted index, intersection)` pairs,
    /// ascending by predicted index.
    pub fn of_real(&self, i: usize) -> &[(usize, TimeRange)] {
        &self.by_real[i]
    }

    /// Overlaps of predicted range `j` as `(real index, intersection)` pairs.
    pub fn of_predicted(&self, j: usize) -> &[(usize, TimeRange)] {
        &self.by_predicted[j]
    }

    pub fn n_real(&self) -> usize {
        self.by_real.len()
    }

    pub fn n_predicted(&self) -> usize {
        self.by_predicted.len()
    }

    /// Total number of overlapping pairs.
    pub fn pair_count(&self) -> usize {
        self.by_real.iter().map(Vec::len).sum()
    }
}

/// Cursor loop shared by the materialized and streaming paths. Emits every
/// intersecting pair in timeline order; both indices are non-decreasing
/// across calls.
fn sweep_with<F>(real: &[TimeRange], predicted: &[TimeRange], mut emit: F) -> Result<()>
where
    F: FnMut(usize, usize, TimeRange) -> Result<()>,
{
    let mut i = 0;
    let mut j = 0;
    while i < real.len() && j < predicted.len() {
        if let Some(part) = real[i].overlap(&predicted[j]) {
            emit(i, j, part)?;
        }
        // retire the range that ends first; on a tie neither can overlap
        // anything further on the other side
        if real[i].end() <= predicted[j].end() {
            i += 1;
        } else {
            j += 1;
        }
    }
    Ok(())
}

/// Single simultaneous sweep over both sets, collecting every intersecting
/// pair. Inputs must be sorted by start and pairwise disjoint within each set.
pub fn paired_sweep(real: &[TimeRange], predicted: &[TimeRange]) -> OverlapAssignment {
    let mut assignment = OverlapAssignment {
        by_real: vec![Vec::new(); real.len()],
        by_predicted: vec![Vec::new(); predicted.len()],
    };
    sweep_with(real, predicted, |i, j, part| {
        assignment.by_real[i].push((j, part));
        assignment.by_predicted[j].push((i, part));
        Ok(())
    })
    .expect("materializing emit cannot fail");
    assignment
}

/// Per-range score accumulator for one side of the sweep. Ranges that never
/// overlap anything score zero and need no flush.
struct SideScore<'a> {
    targets: &'a [TimeRange],
    gamma: &'a GammaKind,
    bias: &'a BiasKind,
    alpha: f64,
    /// (target index, distinct overlap count, omega sum) of the open target.
    open: Option<(usize, usize, f64)>,
    total: f64,
}

impl<'a> SideScore<'a> {
    fn new(targets: &'a [TimeRange], gamma: &'a GammaKind, bias: &'a BiasKind, alpha: f64) -> Self {
        Self { targets, gamma, bias, alpha, open: None, total: 0.0 }
    }

    fn add(&mut self, idx: usize, part: &TimeRange) -> Result<()> {
        let omega = omega_closed_form_part(&self.targets[idx], part, self.bias)?;
        match &mut self.open {
            Some((open_idx, count, sum)) if *open_idx == idx => {
                *count += 1;
                *sum += omega;
            }
            _ => {
                self.flush();
                self.open = Some((idx, 1, omega));
            }
        }
        Ok(())
    }

    fn flush(&mut self) {
        if let Some((_, count, sum)) = self.open.take() {
            let existence = 1.0;
            let reward = self.gamma.factor(count) * sum.min(1.0);
            self.total += self.alpha * existence + (1.0 - self.alpha) * reward;
        }
    }

    fn finish(mut self) -> f64 {
        self.flush();
        self.total / self.targets.len() as f64
    }
}

/// Recall over `real`, computed from one sweep. Matches the reference engine
/// to well below 1e-9.
pub fn range_recall(real: &[TimeRange], predicted: &[TimeRange], cfg: &MetricConfig) -> Result<f64> {
    if real.is_empty() {
        return Err(Error::EmptyGroundTruth);
    }
    let mut scorer = SideScore::new(real, cfg.recall_gamma(), cfg.recall_bias(), cfg.alpha());
    sweep_with(real, predicted, |i, _, part| scorer.add(i, &part))?;
    Ok(scorer.finish())
}

/// Precision over `predicted`, computed from one sweep.
pub fn range_precision(
    real: &[TimeRange],
    predicted: &[TimeRange],
    cfg: &MetricConfig,
) -> Result<f64> {
    if predicted.is_empty() {
        return Err(Error::EmptyPrediction);
    }
    let mut scorer = SideScore::new(predicted, cfg.precision_gamma(), cfg.precision_bias(), 0.0);
    sweep_with(real, predicted, |_, j, part| scorer.add(j, &part))?;
    Ok(scorer.finish())
}

/// Both metrics from a single sweep; fails when either side is empty.
pub fn evaluate(real: &[TimeRange], predicted: &[TimeRange], cfg: &MetricConfig) -> Result<RangeScores> {
    if real.is_empty() {
        return Err(Error::EmptyGroundTruth);
    }
    if predicted.is_empty() {
        return Err(Error::EmptyPrediction);
    }
    let mut recall = SideScore::new(real, cfg.recall_gamma(), cfg.recall_bias(), cfg.alpha());
    let mut precision = SideScore::new(predicted, cfg.precision_gamma(), cfg.precision_bias(), 0.0);
    sweep_with(real, predicted, |i, j, part| {
        recall.add(i, &part)?;
        precision.add(j, &part)
    })?;
    Ok(RangeScores {
        recall: recall.finish(),
        precision: precision.finish(),
    })
}
