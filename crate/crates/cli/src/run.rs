//! Command implementations.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use rangescore::classical::{f_beta, to_unit_ranges, ConfusionCounts};
use rangescore::synth::{cost_benchmark, positional_pair, BenchmarkConfig, PlacementPolicy, ScenarioSpec};
use rangescore::{Error as CoreError, RangeSeries, TimeDomain, TimeRange};

use crate::args::{BenchArgs, EvaluateArgs, GenArgs, PositionalPairArgs, SynthCommand};
use crate::config::{resolve_config, ResolvedConfig};
use crate::error::CliError;
use crate::labels::{parse_labels, resolve_domain, write_points, write_ranges, LabelFormat, ParsedLabels};
use crate::report::{
    fmt_beta, BiasScore, ClassicalFBeta, ClassicalScores, ConfigEcho, EvaluationReport, FBetaScore,
};

/// Maps an engine result onto the report convention: empty-side errors mean
/// "undefined", anything else is a real failure.
fn score_or_none(result: Result<f64, CoreError>) -> Result<Option<f64>, CliError> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(CoreError::EmptyGroundTruth) | Err(CoreError::EmptyPrediction) => Ok(None),
        Err(other) => Err(CliError::config(other.to_string())),
    }
}

/// Scores one (real, predicted) pair under a resolved configuration.
pub fn evaluate_pair(
    dataset: Option<String>,
    real: &ParsedLabels,
    pred: &ParsedLabels,
    cfg: &ResolvedConfig,
    domain: TimeDomain,
) -> Result<EvaluationReport, CliError> {
    for labels in [real, pred] {
        domain
            .validate(&labels.series)
            .map_err(|e| CliError::DomainMismatch(e.to_string()))?;
    }

    let real_ranges = real.series.ranges();
    let scored_pred: Vec<TimeRange> = if cfg.predictions_as_points {
        to_unit_ranges(&pred.series)
    } else {
        pred.series.ranges().to_vec()
    };

    let started = Instant::now();
    let mut undefined: Vec<String> = Vec::new();

    let counts = ConfusionCounts::from_ranges(real_ranges, pred.series.ranges());
    let classical_precision = counts.precision().ok();
    let classical_recall = counts.recall().ok();
    if classical_precision.is_none() {
        undefined.push("classical_precision".into());
    }
    if classical_recall.is_none() {
        undefined.push("classical_recall".into());
    }
    let mut classical_fbeta = Vec::with_capacity(cfg.betas.len());
    for &beta in &cfg.betas {
        let undefined_inputs = classical_precision.is_none() || classical_recall.is_none();
        let value = f_beta(
            classical_precision.unwrap_or(0.0),
            classical_recall.unwrap_or(0.0),
            beta,
        );
        if undefined_inputs {
            undefined.push(format!("classical_f_{}", fmt_beta(beta)));
        }
        classical_fbeta.push(ClassicalFBeta { beta, value, undefined_inputs });
    }

    let mut recall_scores = Vec::with_capacity(cfg.recall_biases.len());
    for &bias in &cfg.recall_biases {
        let metric_cfg = cfg.metric_config(bias, cfg.precision_biases[0]);
        let value = score_or_none(cfg.engine.range_recall(real_ranges, &scored_pred, &metric_cfg))?;
        if value.is_none() {
            undefined.push(format!("range_recall_{}", bias.as_str()));
        }
        recall_scores.push(BiasScore { bias: bias.as_str().into(), value });
    }

    let mut precision_scores = Vec::with_capacity(cfg.precision_biases.len());
    for &bias in &cfg.precision_biases {
        let metric_cfg = cfg.metric_config(cfg.recall_biases[0], bias);
        let value =
            score_or_none(cfg.engine.range_precision(real_ranges, &scored_pred, &metric_cfg))?;
        if value.is_none() {
            undefined.push(format!("range_precision_{}", bias.as_str()));
        }
        precision_scores.push(BiasScore { bias: bias.as_str().into(), value });
    }

    let mut fbeta_scores = Vec::new();
    for &beta in &cfg.betas {
        for (ri, &rb) in cfg.recall_biases.iter().enumerate() {
            for (pi, &pb) in cfg.precision_biases.iter().enumerate() {
                let recall = recall_scores[ri].value;
                let precision = precision_scores[pi].value;
                let undefined_inputs = recall.is_none() || precision.is_none();
                let value = f_beta(precision.unwrap_or(0.0), recall.unwrap_or(0.0), beta);
                if undefined_inputs {
                    undefined.push(format!(
                        "range_f_{}_{}_{}",
                        fmt_beta(beta),
                        rb.as_str(),
                        pb.as_str()
                    ));
                }
                fbeta_scores.push(FBetaScore {
                    beta,
                    recall_bias: rb.as_str().into(),
                    precision_bias: pb.as_str().into(),
                    value,
                    undefined_inputs,
                });
            }
        }
    }
    let wall_time_secs = started.elapsed().as_secs_f64();

    let mut warnings = real.warnings.clone();
    warnings.extend(pred.warnings.iter().cloned());

    Ok(EvaluationReport {
        dataset,
        config: ConfigEcho {
            alpha: cfg.alpha,
            gamma: cfg.gamma.as_str().into(),
            recall_biases: cfg.recall_biases.iter().map(|b| b.as_str().into()).collect(),
            precision_biases: cfg.precision_biases.iter().map(|b| b.as_str().into()).collect(),
            betas: cfg.betas.clone(),
            engine: cfg.engine.name().into(),
            preset: cfg.preset.map(|p| p.as_str().into()),
            predictions_as_points: cfg.predictions_as_points,
        },
        n_points: domain.n_points(),
        n_real_ranges: real.series.len(),
        n_real_ranges_raw: real.raw_count,
        n_predicted_ranges: scored_pred.len(),
        n_predicted_ranges_raw: pred.raw_count,
        classical: ClassicalScores {
            true_positives: counts.true_positives,
            false_positives: counts.false_positives,
            false_negatives: counts.false_negatives,
            precision: classical_precision,
            recall: classical_recall,
            f_beta: classical_fbeta,
        },
        range_recall: recall_scores,
        range_precision: precision_scores,
        f_beta: fbeta_scores,
        undefined_metrics: undefined,
        warnings,
        wall_time_secs,
    })
}

struct ManifestEntry {
    name: String,
    real: PathBuf,
    pred: PathBuf,
}

fn parse_manifest(path: &Path) -> Result<Vec<ManifestEntry>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut header_seen = false;
    let mut entries = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line != "name,real,pred" {
                return Err(CliError::ParseLine {
                    path: path.display().to_string(),
                    line: line_no,
                    message: format!("expected header 'name,real,pred', found '{line}'"),
                });
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 || fields.iter().any(|f| f.is_empty()) {
            return Err(CliError::ParseLine {
                path: path.display().to_string(),
                line: line_no,
                message: format!("expected three comma-separated fields, found '{line}'"),
            });
        }
        entries.push(ManifestEntry {
            name: fields[0].to_string(),
            real: base.join(fields[1]),
            pred: base.join(fields[2]),
        });
    }
    if !header_seen {
        return Err(CliError::ParseFile {
            path: path.display().to_string(),
            message: "missing 'name,real,pred' header".into(),
        });
    }
    if entries.is_empty() {
        return Err(CliError::ParseFile {
            path: path.display().to_string(),
            message: "manifest contains no rows".into(),
        });
    }
    Ok(entries)
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn run_evaluate(args: &EvaluateArgs) -> Result<(), CliError> {
    let cfg = resolve_config(args)?;
    let format = LabelFormat::parse(&args.format)?;

    let reports: Vec<EvaluationReport> = if let Some(manifest_path) = &args.manifest {
        let entries = parse_manifest(manifest_path)?;
        let results: Vec<Result<EvaluationReport, CliError>> = entries
            .par_iter()
            .map(|entry| {
                let real = parse_labels(&entry.real, format)?;
                let pred = parse_labels(&entry.pred, format)?;
                let domain = resolve_domain(&real, &pred, args.allow_domain_mismatch)?;
                evaluate_pair(Some(entry.name.clone()), &real, &pred, &cfg, domain)
            })
            .collect();
        results.into_iter().collect::<Result<_, _>>()?
    } else {
        let real_path = args.real.as_ref().expect("clap enforces --real");
        let pred_path = args.pred.as_ref().expect("clap enforces --pred");
        let real = parse_labels(real_path, format)?;
        let pred = parse_labels(pred_path, format)?;
        let domain = resolve_domain(&real, &pred, args.allow_domain_mismatch)?;
        vec![evaluate_pair(None, &real, &pred, &cfg, domain)?]
    };

    let mut text = String::new();
    for (i, report) in reports.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        text.push_str(&report.render_text());
    }
    print!("{text}");

    if let Some(path) = &args.output {
        let mut json = if args.manifest.is_some() {
            serde_json::to_string_pretty(&reports)
        } else {
            serde_json::to_string_pretty(&reports[0])
        }
        .expect("reports serialize");
        json.push('\n');
        fs::write(path, json).map_err(|source| CliError::OutputIo {
            path: path.display().to_string(),
            source,
        })?;
    }

    if let Some(path) = &args.emit_plot_data {
        let fallback = args.real.as_deref().map(file_stem);
        let mut csv = String::from("dataset,metric,value\n");
        for report in &reports {
            let name = report
                .dataset
                .clone()
                .or_else(|| fallback.clone())
                .unwrap_or_else(|| "dataset".into());
            for (metric, value) in report.plot_rows() {
                csv.push_str(&format!("{name},{metric},{value:.6}\n"));
            }
        }
        fs::write(path, csv).map_err(|source| CliError::OutputIo {
            path: path.display().to_string(),
            source,
        })?;
    }

    Ok(())
}

fn parse_policy(text: &str) -> Result<PlacementPolicy, CliError> {
    if text == "random" {
        return Ok(PlacementPolicy::Random);
    }
    if let Some(v) = text.strip_prefix("front=") {
        let f: f64 = v
            .parse()
            .map_err(|_| CliError::config(format!("invalid fraction '{v}'")))?;
        return Ok(PlacementPolicy::FrontAligned(f));
    }
    if let Some(v) = text.strip_prefix("back=") {
        let f: f64 = v
            .parse()
            .map_err(|_| CliError::config(format!("invalid fraction '{v}'")))?;
        return Ok(PlacementPolicy::BackAligned(f));
    }
    if let Some(v) = text.strip_prefix("fragmented=") {
        let k: usize = v
            .parse()
            .map_err(|_| CliError::config(format!("invalid fragment count '{v}'")))?;
        return Ok(PlacementPolicy::Fragmented(k));
    }
    Err(CliError::config(format!(
        "unknown policy '{text}' (expected random, front=F, back=F or fragmented=K)"
    )))
}

fn write_series(
    format: LabelFormat,
    path: &Path,
    series: &RangeSeries,
    n_points: u64,
) -> Result<(), CliError> {
    match format {
        LabelFormat::Ranges => write_ranges(path, series, n_points),
        LabelFormat::Points => write_points(path, series, n_points),
    }
}

pub fn run_synth(cmd: &SynthCommand) -> Result<(), CliError> {
    match cmd {
        SynthCommand::Gen(a) => synth_gen(a),
        SynthCommand::PositionalPair(a) => synth_positional_pair(a),
        SynthCommand::Bench(a) => synth_bench(a),
    }
}

fn synth_gen(args: &GenArgs) -> Result<(), CliError> {
    let format = LabelFormat::parse(&args.format)?;
    let spec = ScenarioSpec {
        n_points: args.domain,
        n_real: args.count,
        real_len: (args.min_len, args.max_len),
        n_predicted: args.pred_count,
        pred_len: None,
        policy: parse_policy(&args.policy)?,
        seed: args.seed,
    };
    let (real, pred) = spec.generate().map_err(|e| CliError::config(e.to_string()))?;
    write_series(format, &args.real_out, &real, args.domain)?;
    write_series(format, &args.pred_out, &pred, args.domain)?;
    println!(
        "wrote {} real ranges to {} and {} predicted ranges to {}",
        real.len(),
        args.real_out.display(),
        pred.len(),
        args.pred_out.display()
    );
    Ok(())
}

fn synth_positional_pair(args: &PositionalPairArgs) -> Result<(), CliError> {
    let format = LabelFormat::parse(&args.format)?;
    let pair = positional_pair(
        args.domain,
        args.count,
        (args.min_len, args.max_len),
        args.fraction,
        args.seed,
    )
    .map_err(|e| CliError::config(e.to_string()))?;
    fs::create_dir_all(&args.out_dir).map_err(|source| CliError::OutputIo {
        path: args.out_dir.display().to_string(),
        source,
    })?;
    let real_path = args.out_dir.join("real.csv");
    let front_path = args.out_dir.join("front.csv");
    let back_path = args.out_dir.join("back.csv");
    write_series(format, &real_path, &pair.real, args.domain)?;
    write_series(format, &front_path, &pair.front, args.domain)?;
    write_series(format, &back_path, &pair.back, args.domain)?;
    println!(
        "wrote {} mirrored ranges to {}, {} and {}",
        pair.real.len(),
        real_path.display(),
        front_path.display(),
        back_path.display()
    );
    Ok(())
}


fn synth_bench(args: &BenchArgs) -> Result<(), CliError> {
    let mut cfg = BenchmarkConfig::new(args.sizes.clone());
    cfg.n_points = args.domain;
    cfg.seed = args.seed;
    cfg.samples = args.samples;
    cfg.min_sample = Duration::from_millis(args.min_sample_ms);
    let records = cost_benchmark(&cfg).map_err(|e| CliError::config(e.to_string()))?;

    let mut csv = String::from("n_ranges,engine,median_secs\n");
    for r in &records {
        csv.push_str(&format!("{},{},{:.9}\n", r.n_ranges, r.engine.name(), r.median_secs));
    }
    match &args.output {
        Some(path) => {
            fs::write(path, &csv).map_err(|source| CliError::OutputIo {
                path: path.display().to_string(),
                source,
            })?;
            println!("wrote {} timing rows to {}", records.len(), path.display());
        }
        None => print!("{csv}"),
    }
    Ok(())
}
