//! Seeded generators for random range sets, mirrored positional scenarios,
//! and the engine cost-comparison harness.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::MetricConfig;
use crate::error::{Error, Result};
use crate::range::{RangeSeries, TimeRange};
use crate::Engine;

/// How predicted ranges are placed relative to the real ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlacementPolicy {
    /// Independent random ranges, like the real side.
    Random,
    /// The first `ceil(f * len)` points of each real range.
    FrontAligned(f64),
    /// The last `ceil(f * len)` points of each real range.
    BackAligned(f64),
    /// Up to `k` evenly spaced single-point predictions inside each real range.
    Fragmented(usize),
}

/// Parameters for one generated (real, predicted) instance.
///
/// Output is deterministic for a fixed spec; generated sets always satisfy
/// the series invariants directly (gaps of at least one free point), so
/// normalization never merges anything.
#[derive(Debug, Clone)]
pub struct ScenarioSpec {
    pub n_points: u64,
    pub n_real: usize,
    /// Inclusive bounds on real range lengths.
    pub real_len: (u64, u64),
    /// Predicted range count for the random policy; defaults to `n_real`.
    pub n_predicted: Option<usize>,
    /// Predicted length bounds for the random policy; defaults to `real_len`.
    pub pred_len: Option<(u64, u64)>,
    pub policy: PlacementPolicy,
    pub seed: u64,
}

impl ScenarioSpec {
    pub fn random(n_points: u64, n_real: usize, real_len: (u64, u64), seed: u64) -> Self {
        Self {
            n_points,
            n_real,
            real_len,
            n_predicted: None,
            pred_len: None,
            policy: PlacementPolicy::Random,
            seed,
        }
    }

    pub fn generate(&self) -> Result<(RangeSeries, RangeSeries)> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let real_ranges = random_ranges(&mut rng, self.n_points, self.n_real, self.real_len)?;
        let real = RangeSeries::new(real_ranges);
        debug_assert_eq!(real.len(), self.n_real);
        let predicted = match self.policy {
            PlacementPolicy::Random => {
                let count = self.n_predicted.unwrap_or(self.n_real);
                let len = self.pred_len.unwrap_or(self.real_len);
                RangeSeries::new(random_ranges(&mut rng, self.n_points, count, len)?)
            }
            PlacementPolicy::FrontAligned(f) => aligned_predictions(&real, f, Side::Front)?,
            PlacementPolicy::BackAligned(f) => aligned_predictions(&real, f, Side::Back)?,
            PlacementPolicy::Fragmented(pieces) => fragmented_predictions(&real, pieces)?,
        };
        Ok((real, predicted))
    }
}

const PLACEMENT_ATTEMPTS: usize = 10_000;

/// Draws `count` ranges with uniform starts, rejecting candidates that come
/// within one point of an already placed range.
fn random_ranges(
    rng: &mut ChaCha8Rng,
    n_points: u64,
    count: usize,
    (min_len, max_len): (u64, u64),
) -> Result<Vec<TimeRange>> {
    if min_len == 0 || min_len > max_len {
        return Err(Error::InfeasibleSpec(format!(
            "invalid length bounds [{min_len}, {max_len}]"
        )));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let needed = count as u128 * min_len as u128 + 2 * (count as u128 - 1);
    if max_len > n_points || needed > n_points as u128 {
        return Err(Error::InfeasibleSpec(format!(
            "{count} ranges of length >= {min_len} do not fit in {n_points} points"
        )));
    }
    let mut placed: Vec<TimeRange> = Vec::with_capacity(count);
    for _ in 0..count {
        let mut attempts = 0;
        loop {
            attempts += 1;
            if attempts > PLACEMENT_ATTEMPTS {
                return Err(Error::InfeasibleSpec(format!(
                    "could not place {count} ranges in {n_points} points \
                     after {PLACEMENT_ATTEMPTS} attempts"
                )));
            }
            let len = rng.random_range(min_len..=max_len);
            let start = rng.random_range(0..=n_points - len);
            let end = start + len - 1;
            let idx = placed.partition_point(|r| r.start() < start);
            let clear_left = idx == 0 || placed[idx - 1].end() + 2 <= start;
            let clear_right = idx == placed.len() || end + 2 <= placed[idx].start();
            if clear_left && clear_right {
                placed.insert(idx, TimeRange::new(start, end)?);
                break;
            }
        }
    }
    Ok(placed)
}

#[derive(Clone, Copy)]
enum Side {
    Front,
    Back,
}

/// Covered point count for a fraction of a range, at least 1.
fn coverage_count(fraction: f64, len: u64) -> u64 {
    let x = fraction * len as f64;
    let nearest = x.round();
    let c = if (x - nearest).abs() < 1e-9 { nearest } else { x.ceil() };
    (c as u64).clamp(1, len)
}

fn check_fraction(fraction: f64) -> Result<()> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::InfeasibleSpec(format!(
            "coverage fraction must lie in (0, 1], got {fraction}"
        )));
    }
    Ok(())
}

fn aligned_predictions(real: &RangeSeries, fraction: f64, side: Side) -> Result<RangeSeries> {
    check_fraction(fraction)?;
    let mut out = Vec::with_capacity(real.len());
    for r in real {
        let c = coverage_count(fraction, r.len());
        let pred = match side {
            Side::Front => TimeRange::new(r.start(), r.start() + c - 1)?,
            Side::Back => TimeRange::new(r.end() - c + 1, r.end())?,
        };
        out.push(pred);
    }
    Ok(RangeSeries::new(out))
}

/// Evenly spaced unit predictions; spacing stays >= 2 so the pieces remain
/// distinct ranges.
fn fragmented_predictions(real: &RangeSeries, pieces: usize) -> Result<RangeSeries> {
    if pieces == 0 {
        return Err(Error::InfeasibleSpec(
            "fragment count must be at least 1".into(),
        ));
    }
    let mut out = Vec::new();
    for r in real {
        let len = r.len();
        let k = (pieces as u64).min(len.div_ceil(2)).max(1);
        if k == 1 {
            out.push(TimeRange::unit(r.start() + (len - 1) / 2));
            continue;
        }
        let step = (len - 1) as f64 / (k - 1) as f64;
        for t in 0..k {
            let offset = (t as f64 * step).round() as u64;
            out.push(TimeRange::unit(r.start() + offset));
        }
    }
    Ok(RangeSeries::new(out))
}

/// A shared real set with front-aligned and back-aligned prediction variants.
///
/// The real set is symmetric under reversal of the domain, and within each
/// real range the two prediction sets mirror each other, so reversing the
/// whole timeline maps one scenario exactly onto the other.
#[derive(Debug, Clone)]
pub struct PositionalPair {
    pub n_points: u64,
    pub real: RangeSeries,
    pub front: RangeSeries,
    pub back: RangeSeries,
}

/// Builds the mirrored front/back scenario pair.
pub fn positional_pair(
    n_points: u64,
    count: usize,
    len_bounds: (u64, u64),
    fraction: f64,
    seed: u64,
) -> Result<PositionalPair> {
    check_fraction(fraction)?;
    if count == 0 {
        return Err(Error::InfeasibleSpec("range count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (min_len, max_len) = len_bounds;

    // an odd count needs one self-mirrored range straddling the midpoint
    let center = if count % 2 == 1 {
        let drawn = if min_len == max_len {
            min_len
        } else {
            rng.random_range(min_len..=max_len)
        };
        // center start (n - len) / 2 must be exact: len and n share parity
        let len = if drawn % 2 == n_points % 2 {
            drawn
        } else if drawn < max_len {
            drawn + 1
        } else if drawn > min_len {
            drawn - 1
        } else {
            return Err(Error::InfeasibleSpec(format!(
                "no center range length in [{min_len}, {max_len}] matches \
                 the parity of {n_points} points"
            )));
        };
        if len > n_points {
            return Err(Error::InfeasibleSpec(
                "center range does not fit in the domain".into(),
            ));
        }
        let start = (n_points - len) / 2;
        Some(TimeRange::new(start, start + len - 1)?)
    } else {
        None
    };

    // left half, kept clear of both the center range and its own mirror image
    let left_end_limit = match center {
        Some(c) => {
            if c.start() < 2 && count > 1 {
                return Err(Error::InfeasibleSpec(
                    "domain too small for ranges beside the center".into(),
                ));
            }
            c.start().saturating_sub(2)
        }
        None => (n_points.saturating_sub(3)) / 2,
    };
    let left = random_ranges(&mut rng, left_end_limit + 1, count / 2, len_bounds)?;

    let mut all = left.clone();
    if let Some(c) = center {
        all.push(c);
    }
    for r in &left {
        all.push(TimeRange::new(n_points - 1 - r.end(), n_points - 1 - r.start())?);
    }
    let real = RangeSeries::new(all);
    if real.len() != count {
        return Err(Error::InfeasibleSpec(
            "mirrored ranges collided; domain too small".into(),
        ));
    }

    let front = aligned_predictions(&real, fraction, Side::Front)?;
    let back = aligned_predictions(&real, fraction, Side::Back)?;
    Ok(PositionalPair { n_points, real, front, back })
}

/// Parameters for the engine scaling comparison.
#[derive(Debug, Clone)]
pub struct BenchmarkConfig {
    /// Range counts per side, strictly ascending.
    pub sizes: Vec<usize>,
    pub n_points: u64,
    pub len_bounds: (u64, u64),
    pub seed: u64,
    /// Timed samples per engine and size; the median is reported.
    pub samples: usize,
    /// Minimum duration of one sample; short runs are repeated to reach it.
    pub min_sample: Duration,
}

impl BenchmarkConfig {
    pub fn new(sizes: Vec<usize>) -> Self {
        Self {
            sizes,
            n_points: 50_000,
            len_bounds: (1, 1),
            seed: 42,
            samples: 5,
            min_sample: Duration::from_millis(30),
        }
    }
}

/// One timed measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n_ranges: usize,
    pub engine: Engine,
    pub median_secs: f64,
}

/// Times both engines on identical random instances of each size.
///
/// Evaluations run sequentially to keep the timer free of interference; the
/// reported value is the median of per-run times.
pub fn cost_benchmark(cfg: &BenchmarkConfig) -> Result<Vec<BenchRecord>> {
    if cfg.sizes.is_empty() || cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InfeasibleSpec(
            "benchmark sizes must be non-empty and strictly ascending".into(),
        ));
    }
    if cfg.samples == 0 {
        return Err(Error::InfeasibleSpec("samples must be at least 1".into()));
    }
    let metric_cfg = MetricConfig::default();
    let mut records = Vec::with_capacity(cfg.sizes.len() * 2);
    for &size in &cfg.sizes {
        let seed = cfg.seed ^ (size as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        let spec = ScenarioSpec::random(cfg.n_points, size, cfg.len_bounds, seed);
        let (real, predicted) = spec.generate()?;
        for engine in [Engine::Naive, Engine::Fast] {
            let median_secs = time_engine(
                engine,
                real.ranges(),
                predicted.ranges(),
                &metric_cfg,
                cfg.samples,
                cfg.min_sample,
            );
            records.push(BenchRecord { n_ranges: size, engine, median_secs });
        }
    }
    Ok(records)
}

fn time_engine(
    engine: Engine,
    real: &[TimeRange],
    predicted: &[TimeRange],
    cfg: &MetricConfig,
    samples: usize,
    min_sample: Duration,
) -> f64 {
    let run = || {
        let scores = engine
            .evaluate(real, predicted, cfg)
            .expect("benchmark instances have both sides non-empty");
        scores.recall + scores.precision
    };
    let mut sink = 0.0;
    sink += run(); // warm-up
    let start = Instant::now();
    sink += run();
    let once = start.elapsed();
    let reps = if once >= min_sample {
        1
    } else {
        (min_sample.as_secs_f64() / once.as_secs_f64().max(1e-9)).ceil() as usize
    };
    let mut times = Vec::with_capacity(samples);
    for _ in 0..samples {
        let start = Instant::now();
        for _ in 0..reps {
            sink += run();
        }
        times.push(start.elapsed().as_secs_f64() / reps as f64);
    }
    std::hint::black_box(sink);
    times.sort_by(f64::total_cmp);
    if samples % 2 == 1 {
        times[samples / 2]
    } else {
        (times[samples / 2 - 1] + times[samples / 2]) / 2.0
    }
}
