//! Label file parsing and writing.
//!
//! Two formats are supported, both UTF-8 CSV with LF or CRLF line endings:
//!
//! - **ranges**: header `start,end`, one inclusive interval per row. An
//!   optional comment line `# n_points=N` declares the domain length; without
//!   it the domain is inferred from the largest end timestamp.
//! - **points**: header `label`, one `0`/`1` row per timestamp; the row index
//!   is the timestamp and the row count is the domain length. Maximal runs of
//!   `1` become single ranges.

use std::fmt;
use std::fs;
use std::path::Path;

use rangescore::{RangeSeries, TimeDomain, TimeRange};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelFormat {
    Ranges,
    Points,
}

impl LabelFormat {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "ranges" => Ok(Self::Ranges),
            "points" => Ok(Self::Points),
            other => Err(CliError::config(format!(
                "unknown label format '{other}' (expected 'ranges' or 'points')"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Ranges => "ranges",
            Self::Points => "points",
        }
    }
}

impl fmt::Display for LabelFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One parsed label file.
#[derive(Debug, Clone)]
pub struct ParsedLabels {
    pub series: RangeSeries,
    /// Domain length stated by the file itself (directive or row count).
    pub declared_points: Option<u64>,
    /// Smallest domain that can hold the series: largest end + 1.
    pub min_points: u64,
    /// Ranges before normalization (file rows, or runs for point files).
    pub raw_count: usize,
    pub warnings: Vec<String>,
}

pub fn parse_labels(path: &Path, format: LabelFormat) -> Result<ParsedLabels, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    match format {
        LabelFormat::Ranges => parse_ranges(path, &text),
        LabelFormat::Points => parse_points(path, &text),
    }
}

fn line_error(path: &Path, line: usize, message: impl Into<String>) -> CliError {
    CliError::ParseLine {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

fn file_error(path: &Path, message: impl Into<String>) -> CliError {
    CliError::ParseFile {
        path: path.display().to_string(),
        message: message.into(),
    }
}

fn parse_ranges(path: &Path, text: &str) -> Result<ParsedLabels, CliError> {
    let mut declared: Option<u64> = None;
    let mut header_seen = false;
    let mut raw: Vec<TimeRange> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("n_points") {
                let value = rest.trim_start().strip_prefix('=').ok_or_else(|| {
                    line_error(path, line_no, "expected '# n_points=N'")
                })?;
                let n: u64 = value.trim().parse().map_err(|_| {
                    line_error(path, line_no, format!("invalid n_points value '{}'", value.trim()))
                })?;
                if let Some(prev) = declared {
                    if prev != n {
                        return Err(line_error(
                            path,
                            line_no,
                            format!("conflicting n_points directives ({prev} vs {n})"),
                        ));
                    }
                }
                declared = Some(n);
            }
            continue;
        }
        if !header_seen {
            if line != "start,end" {
                return Err(line_error(
                    path,
                    line_no,
                    format!("expected header 'start,end', found '{line}'"),
                ));
            }
            header_seen = true;
            continue;
        }
        let mut fields = line.split(',');
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a.trim(), b.trim()),
            _ => {
                return Err(line_error(
                    path,
                    line_no,
                    format!("expected two comma-separated fields, found '{line}'"),
                ))
            }
        };
        let start: u64 = a
            .parse()
            .map_err(|_| line_error(path, line_no, format!("invalid timestamp '{a}'")))?;
        let end: u64 = b
            .parse()
            .map_err(|_| line_error(path, line_no, format!("invalid timestamp '{b}'")))?;
        let range = TimeRange::new(start, end)
            .map_err(|e| line_error(path, line_no, e.to_string()))?;
        if let Some(n) = declared {
            if range.end() >= n {
                return Err(line_error(
                    path,
                    line_no,
                    format!("range [{start}, {end}] lies outside the declared domain of {n} points"),
                ));
            }
        }
        raw.push(range);
    }

    if !header_seen {
        return Err(file_error(path, "missing 'start,end' header"));
    }

    let series = RangeSeries::new(raw.iter().copied());
    let mut warnings = Vec::new();
    if series.len() < raw.len() {
        warnings.push(format!(
            "{}: {} input ranges merged into {} (overlapping or adjacent rows)",
            path.display(),
            raw.len(),
            series.len()
        ));
    }
    let min_points = series.max_end().map_or(0, |e| e + 1);
    Ok(ParsedLabels {
        series,
        declared_points: declared,
        min_points,
        raw_count: raw.len(),
        warnings,
    })
}

fn parse_points(path: &Path, text: &str) -> Result<ParsedLabels, CliError> {
    let mut header_seen = false;
    let mut labels: Vec<bool> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line != "label" {
                return Err(line_error(
                    path,
                    line_no,
                    format!("expected header 'label', found '{line}'"),
                ));
            }
            header_seen = true;
            continue;
        }
        match line {
            "0" => labels.push(false),
            "1" => labels.push(true),
            other => {
                return Err(line_error(
                    path,
                    line_no,
                    format!("expected '0' or '1', found '{other}'"),
                ))
            }
        }
    }

    if !header_seen {
        return Err(file_error(path, "missing 'label' header"));
    }
    if labels.is_empty() {
        return Err(file_error(path, "point file contains no label rows"));
    }

    let n = labels.len() as u64;
    let series = RangeSeries::from_binary_labels(labels);
    Ok(ParsedLabels {
        raw_count: series.len(),
        min_points: n,
        declared_points: Some(n),
        series,
        warnings: Vec::new(),
    })
}

/// Domain agreement rule for one (real, predicted) file pair. Declared
/// lengths must match; inferred lengths are lower bounds and never conflict
/// on their own. With `allow_mismatch` the larger domain wins.
pub fn resolve_domain(
    real: &ParsedLabels,
    pred: &ParsedLabels,
    allow_mismatch: bool,
) -> Result<TimeDomain, CliError> {
    let required = real.min_points.max(pred.min_points);
    let n = match (real.declared_points, pred.declared_points) {
        (Some(a), Some(b)) if a == b => a,
        (Some(a), Some(b)) => {
            if !allow_mismatch {
                return Err(CliError::DomainMismatch(format!(
                    "files declare {a} and {b} points"
                )));
            }
            a.max(b)
        }
        (Some(a), None) | (None, Some(a)) => {
            if required > a {
                if !allow_mismatch {
                    return Err(CliError::DomainMismatch(format!(
                        "declared domain of {a} points does not cover ranges up to point {}",
                        required - 1
                    )));
                }
                required
            } else {
                a
            }
        }
        (None, None) => required,
    };
    TimeDomain::new(n).map_err(|_| {
        CliError::DomainMismatch("both label files are empty and declare no domain".into())
    })
}

pub fn write_ranges(path: &Path, series: &RangeSeries, n_points: u64) -> Result<(), CliError> {
    let mut out = String::new();
    out.push_str(&format!("# n_points={n_points}\n"));
    out.push_str("start,end\n");
    for r in series {
        out.push_str(&format!("{},{}\n", r.start(), r.end()));
    }
    fs::write(path, out).map_err(|source| CliError::OutputIo {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_points(path: &Path, series: &RangeSeries, n_points: u64) -> Result<(), CliError> {
    let mut out = String::with_capacity(n_points as usize * 2 + 8);
    out.push_str("label\n");
    let mut ranges = series.iter().peekable();
    for t in 0..n_points {
        while ranges.peek().is_some_and(|r| r.end() < t) {
            ranges.next();
        }
        let inside = ranges.peek().is_some_and(|r| r.contains(t));
        out.push_str(if inside { "1\n" } else { "0\n" });
    }
    fs::write(path, out).map_err(|source| CliError::OutputIo {
        path: path.display().to_string(),
        source,
    })
}
