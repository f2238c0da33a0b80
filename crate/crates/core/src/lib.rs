//! Range-aware precision and recall for time-series anomaly detection.
//!
//! Classical precision/recall treat labels as independent points, which
//! misrepresents detectors whose anomalies span intervals: a prediction can
//! partially overlap a real anomaly, touch it in several fragments, or hit
//! only its tail. This crate scores sets of anomaly *ranges* directly:
//!
//! - **existence**: credit for touching a real anomaly at all, weighted by
//!   `alpha`;
//! - **size and position**: a normalized overlap fraction, weighted by a
//!   positional bias (flat, front, back, middle, or custom);
//! - **cardinality**: a penalty when one range is covered by several
//!   fragments.
//!
//! With unit-size ranges, `alpha = 0`, no cardinality penalty, and flat bias,
//! the scores reduce exactly to classical point-based precision and recall
//! (see [`classical`]).
//!
//! Two engines produce identical results: [`naive`] compares every pair of
//! ranges with per-point weight loops (the readable reference), and [`sweep`]
//! does one ordered pass with closed-form weight sums (the fast default).
//! [`oracle`] holds independent brute-force re-implementations for
//! validation, and [`synth`] generates seeded test instances and scaling
//! benchmarks.
//!
//! ```
//! use rangescore::{Engine, GammaKind, MetricConfig, RangeSeries};
//!
//! let real = RangeSeries::from_pairs(&[(1, 5), (11, 15)]).unwrap();
//! let predicted = RangeSeries::from_pairs(&[(2, 3), (13, 14), (16, 17)]).unwrap();
//! let cfg = MetricConfig::default().with_gamma(GammaKind::Reciprocal);
//!
//! let scores = Engine::Fast
//!     .evaluate(real.ranges(), predicted.ranges(), &cfg)
//!     .unwrap();
//! assert!((scores.recall - 0.4).abs() < 1e-9);
//! assert!((scores.precision - 2.0 / 3.0).abs() < 1e-9);
//! ```

pub mod bias;
pub mod classical;
pub mod config;
pub mod error;
pub mod naive;
pub mod oracle;
pub mod range;
pub mod sweep;
pub mod synth;

pub use bias::{omega, omega_closed_form, BiasKind, GammaKind};
pub use classical::{f_beta, to_unit_ranges, ConfusionCounts};
pub use config::MetricConfig;
pub use error::{Error, Result};
pub use range::{RangeSeries, TimeDomain, TimeRange};
pub use sweep::{paired_sweep, OverlapAssignment};

/// Recall and precision for one evaluated instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeScores {
    pub recall: f64,
    pub precision: f64,
}

/// Evaluation engine selector.
///
/// Both engines implement the same model; `Naive` is the all-pairs reference
/// and `Fast` the sweep-based production path. All scoring functions take
/// slices of ranges sorted by start and pairwise disjoint within each slice —
/// exactly what [`RangeSeries::ranges`] yields. Adjacent-but-distinct ranges
/// (such as a unit-range expansion) are also valid input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Naive,
    Fast,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Self::Naive => "naive",
            Self::Fast => "fast",
        }
    }

    pub fn range_recall(
        self,
        real: &[TimeRange],
        predicted: &[TimeRange],
        cfg: &MetricConfig,
    ) -> Result<f64> {
        match self {
            Self::Naive => naive::range_recall(real, predicted, cfg),
            Self::Fast => sweep::range_recall(real, predicted, cfg),
        }
    }

    pub fn range_precision(
        self,
        real: &[TimeRange],
        predicted: &[TimeRange],
        cfg: &MetricConfig,
    ) -> Result<f64> {
        match self {
            Self::Naive => naive::range_precision(real, predicted, cfg),
            Self::Fast => sweep::range_precision(real, predicted, cfg),
        }
    }

    /// Both metrics at once; fails when either side is empty.
    pub fn evaluate(
        self,
        real: &[TimeRange],
        predicted: &[TimeRange],
        cfg: &MetricConfig,
    ) -> Result<RangeScores> {
        match self {
            Self::Naive => naive::evaluate(real, predicted, cfg),
            Self::Fast => sweep::evaluate(real, predicted, cfg),
        }
    }
}
