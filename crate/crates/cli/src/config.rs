//! Flag resolution: defaults, presets, and validation.

use rangescore::{BiasKind, Engine, GammaKind, MetricConfig};

use crate::args::EvaluateArgs;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiasName {
    Flat,
    Front,
    Back,
    Middle,
}

impl BiasName {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "flat" => Ok(Self::Flat),
            "front" => Ok(Self::Front),
            "back" => Ok(Self::Back),
            "middle" => Ok(Self::Middle),
            other => Err(CliError::config(format!(
                "unknown bias '{other}' (expected flat, front, back or middle)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Flat => "flat",
            Self::Front => "front",
            Self::Back => "back",
            Self::Middle => "middle",
        }
    }

    pub fn kind(self) -> BiasKind {
        match self {
            Self::Flat => BiasKind::Flat,
            Self::Front => BiasKind::Front,
            Self::Back => BiasKind::Back,
            Self::Middle => BiasKind::Middle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaName {
    One,
    Reciprocal,
}

impl GammaName {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "one" => Ok(Self::One),
            "reciprocal" => Ok(Self::Reciprocal),
            other => Err(CliError::config(format!(
                "unknown gamma '{other}' (expected one or reciprocal)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::One => "one",
            Self::Reciprocal => "reciprocal",
        }
    }

    pub fn kind(self) -> GammaKind {
        match self {
            Self::One => GammaKind::One,
            Self::Reciprocal => GammaKind::Reciprocal,
        }
    }
}

/// Application profiles: front-biased recall, flat precision, no cardinality
/// penalty, and a beta matching the profile's false-positive/false-negative
/// emphasis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    NabStandard,
    NabLowFp,
    NabLowFn,
}

impl Preset {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "nab-standard" => Ok(Self::NabStandard),
            "nab-low-fp" => Ok(Self::NabLowFp),
            "nab-low-fn" => Ok(Self::NabLowFn),
            other => Err(CliError::config(format!(
                "unknown preset '{other}' (expected nab-standard, nab-low-fp or nab-low-fn)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::NabStandard => "nab-standard",
            Self::NabLowFp => "nab-low-fp",
            Self::NabLowFn => "nab-low-fn",
        }
    }

    fn beta(self) -> f64 {
        match self {
            Self::NabStandard => 1.0,
            Self::NabLowFp => 0.5,
            Self::NabLowFn => 2.0,
        }
    }
}

/// Fully resolved scoring configuration.
#[derive(Debug, Clone)]
pub struct ResolvedConfig {
    pub alpha: f64,
    pub gamma: GammaName,
    pub recall_biases: Vec<BiasName>,
    pub precision_biases: Vec<BiasName>,
    pub betas: Vec<f64>,
    pub engine: Engine,
    pub preset: Option<Preset>,
    pub predictions_as_points: bool,
}

impl ResolvedConfig {
    /// Core config for one (recall bias, precision bias) combination.
    pub fn metric_config(&self, recall_bias: BiasName, precision_bias: BiasName) -> MetricConfig {
        MetricConfig::new(self.alpha)
            .expect("alpha validated at resolution")
            .with_gamma(self.gamma.kind())
            .with_recall_bias(recall_bias.kind())
            .with_precision_bias(precision_bias.kind())
    }
}

fn dedup_in_order<T: PartialEq + Copy>(values: Vec<T>) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(values.len());
    for v in values {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Applies defaults, then the preset, then explicit flags.
pub fn resolve_config(args: &EvaluateArgs) -> Result<ResolvedConfig, CliError> {
    let preset = args.preset.as_deref().map(Preset::parse).transpose()?;

    // defaults: no existence reward, no cardinality penalty, flat bias on
    // both sides, F1 only, fast engine
    let mut alpha = 0.0;
    let mut gamma = GammaName::One;
    let mut recall_biases = vec![BiasName::Flat];
    let mut precision_biases = vec![BiasName::Flat];
    let mut betas = vec![1.0];

    if let Some(p) = preset {
        recall_biases = vec![BiasName::Front];
        precision_biases = vec![BiasName::Flat];
        betas = vec![p.beta()];
    }

    if let Some(a) = args.alpha {
        if !(0.0..=1.0).contains(&a) {
            return Err(CliError::config(format!("alpha must lie in [0, 1], got {a}")));
        }
        alpha = a;
    }
    if let Some(g) = args.gamma.as_deref() {
        gamma = GammaName::parse(g)?;
    }
    if !args.recall_bias.is_empty() {
        recall_biases = args
            .recall_bias
            .iter()
            .map(|s| BiasName::parse(s))
            .collect::<Result<_, _>>()?;
    }
    if !args.precision_bias.is_empty() {
        precision_biases = args
            .precision_bias
            .iter()
            .map(|s| BiasName::parse(s))
            .collect::<Result<_, _>>()?;
    }
    if !args.beta.is_empty() {
        for &b in &args.beta {
            if !(b.is_finite() && b > 0.0) {
                return Err(CliError::config(format!("beta must be positive, got {b}")));
            }
        }
        betas = args.beta.clone();
    }
    let engine = match args.engine.as_deref() {
        None => Engine::Fast,
        Some("fast") => Engine::Fast,
        Some("naive") => Engine::Naive,
        Some(other) => {
            return Err(CliError::config(format!(
                "unknown engine '{other}' (expected naive or fast)"
            )))
        }
    };

    Ok(ResolvedConfig {
        alpha,
        gamma,
        recall_biases: dedup_in_order(recall_biases),
        precision_biases: dedup_in_order(precision_biases),
        betas: {
            let mut seen: Vec<f64> = Vec::new();
            for b in betas {
                if !seen.iter().any(|s| s == &b) {
                    seen.push(b);
                }
            }
            seen
        },
        engine,
        preset,
        predictions_as_points: args.predictions_as_points,
    })
}
