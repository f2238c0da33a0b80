//! Command-line argument definitions.
//!
//! Value validation beyond basic typing happens in [`crate::config`] so that
//! bad values (unknown bias names, alpha out of range) are reported as
//! configuration errors rather than usage errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "rangescore",
    version,
    about = "Range-aware precision/recall evaluator for time-series anomaly labels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score a prediction label file against a ground-truth label file
    Evaluate(EvaluateArgs),
    /// Generate synthetic label data and engine benchmarks
    #[command(subcommand)]
    Synth(SynthCommand),
}

#[derive(Debug, Args, Default)]
pub struct EvaluateArgs {
    /// Ground-truth label file
    #[arg(long, required_unless_present = "manifest", conflicts_with = "manifest")]
    pub real: Option<PathBuf>,

    /// Prediction label file
    #[arg(long, required_unless_present = "manifest", conflicts_with = "manifest")]
    pub pred: Option<PathBuf>,

    /// Batch mode: CSV manifest with a name,real,pred header
    #[arg(long)]
    pub manifest: Option<PathBuf>,

    /// Label file format: ranges | points
    #[arg(long, default_value = "ranges")]
    pub format: String,

    /// Existence-reward weight for recall, in [0, 1]
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Cardinality function for both metrics: one | reciprocal
    #[arg(long)]
    pub gamma: Option<String>,

    /// Recall positional bias, repeatable: flat | front | back | middle
    #[arg(long = "recall-bias")]
    pub recall_bias: Vec<String>,

    /// Precision positional bias, repeatable: flat | front | back | middle
    #[arg(long = "precision-bias")]
    pub precision_bias: Vec<String>,

    /// F-score beta, repeatable; must be positive
    #[arg(long)]
    pub beta: Vec<f64>,

    /// Configuration preset: nab-standard | nab-low-fp | nab-low-fn
    #[arg(long)]
    pub preset: Option<String>,

    /// Evaluation engine: naive | fast
    #[arg(long)]
    pub engine: Option<String>,

    /// Write the machine-readable JSON report here
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Write a dataset,metric,value CSV score table here
    #[arg(long = "emit-plot-data")]
    pub emit_plot_data: Option<PathBuf>,

    /// Score every predicted range as its individual points
    #[arg(long = "predictions-as-points")]
    pub predictions_as_points: bool,

    /// Use the larger domain when the two files disagree on n_points
    #[arg(long = "allow-domain-mismatch")]
    pub allow_domain_mismatch: bool,
}

#[derive(Debug, Subcommand)]
pub enum SynthCommand {
    /// Generate a random (real, predicted) label pair
    Gen(GenArgs),
    /// Generate mirrored front-predicted / back-predicted scenarios
    PositionalPair(PositionalPairArgs),
    /// Time the naive and fast engines across instance sizes
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Number of points in the time domain
    #[arg(long)]
    pub domain: u64,

    /// Number of real anomaly ranges
    #[arg(long)]
    pub count: usize,

    /// Number of predicted ranges (random policy only; defaults to --count)
    #[arg(long = "pred-count")]
    pub pred_count: Option<usize>,

    #[arg(long = "min-len", default_value_t = 1)]
    pub min_len: u64,

    #[arg(long = "max-len", default_value_t = 10)]
    pub max_len: u64,

    /// Prediction placement: random | front=F | back=F | fragmented=K
    #[arg(long, default_value = "random")]
    pub policy: String,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Output label format: ranges | points
    #[arg(long, default_value = "ranges")]
    pub format: String,

    #[arg(long = "real-out")]
    pub real_out: PathBuf,

    #[arg(long = "pred-out")]
    pub pred_out: PathBuf,
}

#[derive(Debug, Args)]
pub struct PositionalPairArgs {
    /// Number of points in the time domain
    #[arg(long)]
    pub domain: u64,

    /// Number of real anomaly ranges
    #[arg(long)]
    pub count: usize,

    #[arg(long = "min-len", default_value_t = 4)]
    pub min_len: u64,

    #[arg(long = "max-len", default_value_t = 10)]
    pub max_len: u64,

    /// Fraction of each real range the predictions cover, in (0, 1]
    #[arg(long)]
    pub fraction: f64,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Output label format: ranges | points
    #[arg(long, default_value = "ranges")]
    pub format: String,

    /// Directory for real.csv, front.csv and back.csv
    #[arg(long = "out-dir")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated, strictly ascending range counts per side
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,

    #[arg(long, default_value_t = 50_000)]
    pub domain: u64,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Timed samples per engine and size (the median is reported)
    #[arg(long, default_value_t = 5)]
    pub samples: usize,

    /// Minimum milliseconds per timed sample
    #[arg(long = "min-sample-ms", default_value_t = 30)]
    pub min_sample_ms: u64,

    /// Write the timing CSV here (defaults to stdout)
    #[arg(long)]
    pub output: Option<PathBuf>,
}
