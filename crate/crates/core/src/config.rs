//! Metric configuration: the existence weight and the per-metric choice of
//! cardinality and positional-bias functions.

use crate::bias::{BiasKind, GammaKind};
use crate::error::{Error, Result};

/// Tunable parameters for range-based recall and precision.
///
/// `alpha` weighs the existence reward against the overlap reward and applies
/// to recall only; precision structurally has no existence term. The
/// cardinality and bias functions can differ between the two metrics.
///
/// The default configuration is `alpha = 0`, no cardinality penalty, and flat
/// bias on both sides.
#[derive(Debug, Clone)]
pub struct MetricConfig {
    alpha: f64,
    recall_gamma: GammaKind,
    recall_bias: BiasKind,
    precision_gamma: GammaKind,
    precision_bias: BiasKind,
}

impl Default for MetricConfig {
    fn default() -> Self {
        Self {
            alpha: 0.0,
            recall_gamma: GammaKind::One,
            recall_bias: BiasKind::Flat,
            precision_gamma: GammaKind::One,
            precision_bias: BiasKind::Flat,
        }
    }
}

impl MetricConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        Self::default().with_alpha(alpha)
    }

    pub fn with_alpha(mut self, alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidAlpha(alpha));
        }
        self.alpha = alpha;
        Ok(self)
    }

    /// Sets the cardinality function for both metrics.
    pub fn with_gamma(mut self, gamma: GammaKind) -> Self {
        self.recall_gamma = gamma.clone();
        self.precision_gamma = gamma;
        self
    }

    pub fn with_recall_gamma(mut self, gamma: GammaKind) -> Self {
        self.recall_gamma = gamma;
        self
    }

    pub fn with_precision_gamma(mut self, gamma: GammaKind) -> Self {
        self.precision_gamma = gamma;
        self
    }

    pub fn with_recall_bias(mut self, bias: BiasKind) -> Self {
        self.recall_bias = bias;
        self
    }

    pub fn with_precision_bias(mut self, bias: BiasKind) -> Self {
        self.precision_bias = bias;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn recall_gamma(&self) -> &GammaKind {
        &self.recall_gamma
    }

    pub fn recall_bias(&self) -> &BiasKind {
        &self.recall_bias
    }

    pub fn precision_gamma(&self) -> &GammaKind {
        &self.precision_gamma
    }

    pub fn precision_bias(&self) -> &BiasKind {
        &self.precision_bias
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_bounds_are_enforced() {
        assert!(MetricConfig::new(0.0).is_ok());
        assert!(MetricConfig::new(1.0).is_ok());
        assert_eq!(MetricConfig::new(1.5).unwrap_err(), Error::InvalidAlpha(1.5));
        assert_eq!(
            MetricConfig::new(-0.1).unwrap_err(),
            Error::InvalidAlpha(-0.1)
        );
        assert!(MetricConfig::new(f64::NAN).is_err());
    }

    #[test]
    fn builder_sets_both_gamma_sides() {
        let cfg = MetricConfig::default().with_gamma(GammaKind::Reciprocal);
        assert_eq!(cfg.recall_gamma().name(), "reciprocal");
        assert_eq!(cfg.precision_gamma().name(), "reciprocal");
    }

    #[test]
    fn configs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<MetricConfig>();
        assert_send_sync::<GammaKind>();
        assert_send_sync::<crate::bias::BiasKind>();
        // holds for custom hooks as long as the hook itself is Send + Sync
        let cfg = MetricConfig::default()
            .with_gamma(GammaKind::custom(|x| 1.0 / x as f64))
            .with_recall_bias(crate::bias::BiasKind::custom(|i, _| i as f64));
        std::thread::scope(|s| {
            for _ in 0..2 {
                s.spawn(|| {
                    assert_eq!(cfg.recall_gamma().factor(4), 0.25);
                });
            }
        });
    }
}
