//! Evaluation reports: the JSON document, the human-readable rendering, and
//! the plot-data rows.

use serde::Serialize;

/// Scoring configuration echoed into every report. Input paths and label
/// format are deliberately excluded so that the same labels produce the same
/// report regardless of how they were stored.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub alpha: f64,
    pub gamma: String,
    pub recall_biases: Vec<String>,
    pub precision_biases: Vec<String>,
    pub betas: Vec<f64>,
    pub engine: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    pub predictions_as_points: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BiasScore {
    pub bias: String,
    /// `None` means the metric is undefined for this input (see
    /// `undefined_metrics`).
    pub value: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FBetaScore {
    pub beta: f64,
    pub recall_bias: String,
    pub precision_bias: String,
    pub value: f64,
    /// True when an undefined precision or recall was substituted with 0.
    pub undefined_inputs: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalFBeta {
    pub beta: f64,
    pub value: f64,
    pub undefined_inputs: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalScores {
    pub true_positives: u64,
    pub false_positives: u64,
    pub false_negatives: u64,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f_beta: Vec<ClassicalFBeta>,
}

/// Full result of scoring one (real, predicted) pair.
#[derive(Debug, Clone, Serialize)]
pub struct EvaluationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dataset: Option<String>,
    pub config: ConfigEcho,
    pub n_points: u64,
    pub n_real_ranges: usize,
    pub n_real_ranges_raw: usize,
    pub n_predicted_ranges: usize,
    pub n_predicted_ranges_raw: usize,
    pub classical: ClassicalScores,
    pub range_recall: Vec<BiasScore>,
    pub range_precision: Vec<BiasScore>,
    pub f_beta: Vec<FBetaScore>,
    pub undefined_metrics: Vec<String>,
    pub warnings: Vec<String>,
    pub wall_time_secs: f64,
}

/// Beta rendered without a trailing ".0" for round values: 1, 0.5, 2.
pub fn fmt_beta(beta: f64) -> String {
    if beta == beta.trunc() && beta.abs() < 1e9 {
        format!("{}", beta as i64)
    } else {
        format!("{beta}")
    }
}

fn fmt_score(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.6}"),
        None => "undefined".to_string(),
    }
}

impl EvaluationReport {
    /// Fixed-layout text rendering; scores carry six decimal places.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.dataset {
            Some(name) => out.push_str(&format!("Evaluation report: {name}\n")),
            None => out.push_str("Evaluation report\n"),
        }
        out.push_str(&format!("  n_points:          {}\n", self.n_points));
        out.push_str(&format!(
            "  real ranges:       {} (raw {})\n",
            self.n_real_ranges, self.n_real_ranges_raw
        ));
        out.push_str(&format!(
            "  predicted ranges:  {} (raw {})\n",
            self.n_predicted_ranges, self.n_predicted_ranges_raw
        ));
        out.push_str(&format!("  engine:            {}\n", self.config.engine));
        out.push_str(&format!("  alpha:             {:.6}\n", self.config.alpha));
        out.push_str(&format!("  gamma:             {}\n", self.config.gamma));
        if let Some(p) = &self.config.preset {
            out.push_str(&format!("  preset:            {p}\n"));
        }
        if self.config.predictions_as_points {
            out.push_str("  predictions scored as individual points\n");
        }

        out.push_str("\nClassical (point-based)\n");
        out.push_str(&format!(
            "  tp: {}  fp: {}  fn: {}\n",
            self.classical.true_positives,
            self.classical.false_positives,
            self.classical.false_negatives
        ));
        out.push_str(&format!(
            "  precision:         {}\n",
            fmt_score(self.classical.precision)
        ));
        out.push_str(&format!(
            "  recall:            {}\n",
            fmt_score(self.classical.recall)
        ));
        for f in &self.classical.f_beta {
            let flag = if f.undefined_inputs { "  [undefined inputs]" } else { "" };
            out.push_str(&format!(
                "  F(beta={}):         {:.6}{}\n",
                fmt_beta(f.beta),
                f.value,
                flag
            ));
        }

        out.push_str("\nRange-based\n");
        for s in &self.range_recall {
            out.push_str(&format!(
                "  recall[{}]:{}{}\n",
                s.bias,
                " ".repeat(10usize.saturating_sub(s.bias.len())),
                fmt_score(s.value)
            ));
        }
        for s in &self.range_precision {
            out.push_str(&format!(
                "  precision[{}]:{}{}\n",
                s.bias,
                " ".repeat(7usize.saturating_sub(s.bias.len())),
                fmt_score(s.value)
            ));
        }
        for f in &self.f_beta {
            let flag = if f.undefined_inputs { "  [undefined inputs]" } else { "" };
            out.push_str(&format!(
                "  F(beta={})[{}/{}]: {:.6}{}\n",
                fmt_beta(f.beta),
                f.recall_bias,
                f.precision_bias,
                f.value,
                flag
            ));
        }

        if !self.warnings.is_empty() {
            out.push_str("\nWarnings\n");
            for w in &self.warnings {
                out.push_str(&format!("  {w}\n"));
            }
        }

        out.push_str(&format!("\nwall_time_secs: {:.6}\n", self.wall_time_secs));
        out
    }

    /// `(metric, value)` rows for bar-chart rendering; undefined metrics are
    /// omitted.
    pub fn plot_rows(&self) -> Vec<(String, f64)> {
        let mut rows = Vec::new();
        if let Some(p) = self.classical.precision {
            rows.push(("classical_precision".to_string(), p));
        }
        if let Some(r) = self.classical.recall {
            rows.push(("classical_recall".to_string(), r));
        }
        for f in &self.classical.f_beta {
            if !f.undefined_inputs {
                rows.push((format!("classical_f_{}", fmt_beta(f.beta)), f.value));
            }
        }
        for s in &self.range_recall {
            if let Some(v) = s.value {
                rows.push((format!("range_recall_{}", s.bias), v));
            }
        }
        for s in &self.range_precision {
            if let Some(v) = s.value {
                rows.push((format!("range_precision_{}", s.bias), v));
            }
        }
        for f in &self.f_beta {
            if !f.undefined_inputs {
                rows.push((
                    format!(
                        "range_f_{}_{}_{}",
                        fmt_beta(f.beta),
                        f.recall_bias,
                        f.precision_bias
                    ),
                    f.value,
                ));
            }
        }
        rows
    }
}
