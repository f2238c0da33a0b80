//! Positional-bias weights, the normalized overlap-size function, and the
//! cardinality scaling function.
//!
//! The overlap-size function assigns every position of a scored range a
//! positive weight and returns (weight of covered positions) / (weight of
//! all positions). [`omega`] evaluates it with a literal per-point loop;
//! [`omega_closed_form`] produces the same value from O(1) arithmetic-series
//! sums per covered segment.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::range::TimeRange;

/// Positional weight profile across the points of a range.
///
/// Positions are 1-based within the range: position 1 is the earliest point.
/// Built-in kinds return weights >= 1.
#[derive(Clone)]
pub enum BiasKind {
    /// Every position weighs the same.
    Flat,
    /// Earlier positions weigh more: weight `len - i + 1` at position `i`.
    Front,
    /// Later positions weigh more: weight `i` at position `i`.
    Back,
    /// Positions near the middle weigh more.
    Middle,
    /// User-supplied weight of `(position, length)`. The hook must return a
    /// positive, finite weight for every `1 <= position <= length` and must
    /// be safe to call from multiple threads concurrently.
    Custom(Arc<dyn Fn(u64, u64) -> f64 + Send + Sync>),
}

impl BiasKind {
    pub fn custom<F>(f: F) -> Self
    where
        F: Fn(u64, u64) -> f64 + Send + Sync + 'static,
    {
        Self::Custom(Arc::new(f))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Flat => "flat",
            Self::Front => "front",
            Self::Back => "back",
            Self::Middle => "middle",
            Self::Custom(_) => "custom",
        }
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self, Self::Custom(_))
    }

    /// Weight of position `index` (1-based) in a range of length `length`.
    pub fn weight(&self, index: u64, length: u64) -> Result<f64> {
        if index == 0 || index > length {
            return Err(Error::PositionOutOfRange { index, length });
        }
        match self {
            Self::Flat => Ok(1.0),
            Self::Front => Ok((length - index + 1) as f64),
            Self::Back => Ok(index as f64),
            // literal comparison index <= length/2, kept in integers
            Self::Middle => {
                if 2 * index <= length {
                    Ok(index as f64)
                } else {
                    Ok((length - index + 1) as f64)
                }
            }
            Self::Custom(f) => {
                let w = f(index, length);
                if w.is_finite() && w > 0.0 {
                    Ok(w)
                } else {
                    Err(Error::InvalidBiasWeight { value: w, index, length })
                }
            }
        }
    }
}

impl fmt::Debug for BiasKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Scaling applied when a range is covered by `x >= 2` distinct ranges.
#[derive(Clone)]
pub enum GammaKind {
    /// No penalty for fragmentation.
    One,
    /// `1 / x`.
    Reciprocal,
    /// User-supplied factor of the overlap-range count. Values outside
    /// `[0, 1]` are clamped (with a logged warning); the hook must be safe
    /// to call from multiple threads concurrently.
    Custom(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

impl GammaKind {
    pub fn custom<F>(f: F) -> Self
    where
        F: Fn(usize) -> f64 + Send + Sync + 'static,
    {
        Self::Custom(Arc::new(f))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::One => "one",
            Self::Reciprocal => "reciprocal",
            Self::Custom(_) => "custom",
        }
    }

    /// Factor for an overlap-range count `x`. Counts below 2 always yield 1.
    pub fn factor(&self, x: usize) -> f64 {
        if x <= 1 {
            return 1.0;
        }
        match self {
            Self::One => 1.0,
            Self::Reciprocal => 1.0 / x as f64,
            Self::Custom(f) => {
                let v = f(x);
                if (0.0..=1.0).contains(&v) {
                    v
                } else {
                    log::warn!("custom cardinality factor {v} for x={x} clamped to [0, 1]");
                    if v.is_nan() {
                        0.0
                    } else {
                        v.clamp(0.0, 1.0)
                    }
                }
            }
        }
    }
}

impl fmt::Debug for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Weighted fraction of `range` covered by `parts`, in `[0, 1]`.
///
/// Every part must lie inside `range` and parts must be pairwise disjoint
/// (adjacency is fine). Evaluated with the literal per-point loop.
pub fn omega(range: &TimeRange, parts: &[TimeRange], kind: &BiasKind) -> Result<f64> {
    let sorted = checked_parts(range, parts)?;
    omega_loop(range, &sorted, kind)
}

/// Same value as [`omega`], computed in closed form for built-in kinds.
///
/// Custom kinds fall back to the per-point loop, since no closed form can be
/// assumed for an arbitrary hook.
pub fn omega_closed_form(range: &TimeRange, parts: &[TimeRange], kind: &BiasKind) -> Result<f64> {
    let sorted = checked_parts(range, parts)?;
    if !kind.is_builtin() {
        return omega_loop(range, &sorted, kind);
    }
    let len = u128::from(range.len());
    let mut covered: u128 = 0;
    for part in &sorted {
        // 1-based positions of the part within the range
        let a = u128::from(part.start() - range.start()) + 1;
        let b = u128::from(part.end() - range.start()) + 1;
        covered += segment_weight(kind, a, b, len);
    }
    let total = total_weight(kind, len);
    Ok(((covered as f64) / (total as f64)).min(1.0))
}

/// Validates parts and returns them sorted by start.
fn checked_parts(range: &TimeRange, parts: &[TimeRange]) -> Result<Vec<TimeRange>> {
    let mut sorted = parts.to_vec();
    sorted.sort();
    for (i, part) in sorted.iter().enumerate() {
        if part.start() < range.start() || part.end() > range.end() {
            return Err(Error::PartOutsideRange { part: *part, range: *range });
        }
        if i > 0 && part.start() <= sorted[i - 1].end() {
            return Err(Error::OverlappingParts);
        }
    }
    Ok(sorted)
}

/// Per-point evaluation; `parts` must be validated and sorted.
pub(crate) fn omega_loop(range: &TimeRange, parts: &[TimeRange], kind: &BiasKind) -> Result<f64> {
    let length = range.len();
    let mut covered_weight = 0.0;
    let mut total_weight = 0.0;
    let mut p = 0;
    for offset in 0..length {
        let t = range.start() + offset;
        let w = kind.weight(offset + 1, length)?;
        total_weight += w;
        while p < parts.len() && parts[p].end() < t {
            p += 1;
        }
        if p < parts.len() && parts[p].start() <= t {
            covered_weight += w;
        }
    }
    Ok((covered_weight / total_weight).min(1.0))
}

/// Loop evaluation over at most one part, without allocating.
pub(crate) fn omega_single(
    range: &TimeRange,
    part: Option<TimeRange>,
    kind: &BiasKind,
) -> Result<f64> {
    match part {
        Some(p) => omega_loop(range, std::slice::from_ref(&p), kind),
        None => omega_loop(range, &[], kind),
    }
}

/// Closed-form evaluation of one part known to lie inside `range`, without
/// allocating. Custom kinds fall back to the loop.
pub(crate) fn omega_closed_form_part(
    range: &TimeRange,
    part: &TimeRange,
    kind: &BiasKind,
) -> Result<f64> {
    if !kind.is_builtin() {
        return omega_loop(range, std::slice::from_ref(part), kind);
    }
    debug_assert!(part.start() >= range.start() && part.end() <= range.end());
    let len = u128::from(range.len());
    let a = u128::from(part.start() - range.start()) + 1;
    let b = u128::from(part.end() - range.start()) + 1;
    let covered = segment_weight(kind, a, b, len);
    Ok(((covered as f64) / (total_weight(kind, len) as f64)).min(1.0))
}

/// Sum of i for i in a..=b.
fn arith_sum(a: u128, b: u128) -> u128 {
    if a > b {
        return 0;
    }
    (a + b) * (b - a + 1) / 2
}

/// Total weight of positions a..=b (1-based, within 1..=len) for a built-in kind.
fn segment_weight(kind: &BiasKind, a: u128, b: u128, len: u128) -> u128 {
    match kind {
        BiasKind::Flat => b - a + 1,
        // weight len - i + 1 over [a, b]
        BiasKind::Front => (b - a + 1) * (2 * len + 2 - a - b) / 2,
        BiasKind::Back => arith_sum(a, b),
        BiasKind::Middle => {
            // weight i up to m = len/2, weight len - i + 1 after
            let m = len / 2;
            let low = arith_sum(a, b.min(m));
            let high = {
                let x = a.max(m + 1);
                if x > b {
                    0
                } else {
                    (len + 1) * (b - x + 1) - arith_sum(x, b)
                }
            };
            low + high
        }
        BiasKind::Custom(_) => unreachable!("custom kinds use the loop path"),
    }
}

/// Total weight of all positions of a length-`len` range for a built-in kind.
fn total_weight(kind: &BiasKind, len: u128) -> u128 {
    match kind {
        BiasKind::Flat => len,
        BiasKind::Front | BiasKind::Back => len * (len + 1) / 2,
        BiasKind::Middle => {
            let m = len / 2;
            if len.is_multiple_of(2) {
                m * (m + 1)
            } else {
                (m + 1) * (m + 1)
            }
        }
        BiasKind::Custom(_) => unreachable!("custom kinds use the loop path"),
    }
}
