//! Time ranges, normalized range collections, and the time domain they live in.

use crate::error::{Error, Result};

/// A closed interval of integer timestamps. `[start, end]` with
/// `start <= end`; a unit range has `start == end` and length 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TimeRange {
    start: u64,
    end: u64,
}

impl TimeRange {
    pub fn new(start: u64, end: u64) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidRange { start, end });
        }
        // keep len() = end - start + 1 free of overflow
        if end == u64::MAX {
            return Err(Error::RangeTooLarge(end));
        }
        Ok(Self { start, end })
    }

    /// Single-point range at `t`.
    pub fn unit(t: u64) -> Self {
        Self { start: t, end: t }
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn end(&self) -> u64 {
        self.end
    }

    /// Number of points covered, always >= 1; a range is never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u64 {
        self.end - self.start + 1
    }

    pub fn contains(&self, t: u64) -> bool {
        self.start <= t && t <= self.end
    }

    /// Intersection with `other`, or `None` when the ranges share no point.
    /// Adjacency is not overlap: `[1,5]` and `[6,9]` are disjoint.
    pub fn overlap(&self, other: &TimeRange) -> Option<TimeRange> {
        let start = self.start.max(other.start);
        let end = self.end.min(other.end);
        (start <= end).then_some(TimeRange { start, end })
    }
}

/// An ordered set of disjoint, non-adjacent time ranges.
///
/// Construction normalizes arbitrary input: ranges are sorted by start and
/// any overlapping or adjacent ranges are merged, so two consecutive entries
/// always satisfy `next.start() > prev.end() + 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RangeSeries {
    ranges: Vec<TimeRange>,
}

impl RangeSeries {
    /// Normalizing constructor: sorts and merges overlapping or adjacent input.
    pub fn new(ranges: impl IntoIterator<Item = TimeRange>) -> Self {
        let mut input: Vec<TimeRange> = ranges.into_iter().collect();
        input.sort();
        let mut merged: Vec<TimeRange> = Vec::with_capacity(input.len());
        for r in input {
            match merged.last_mut() {
                Some(last) if r.start <= last.end.saturating_add(1) => {
                    last.end = last.end.max(r.end);
                }
                _ => merged.push(r),
            }
        }
        Self { ranges: merged }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Convenience constructor from `(start, end)` pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        let ranges: Vec<TimeRange> = pairs
            .iter()
            .map(|&(s, e)| TimeRange::new(s, e))
            .collect::<Result<_>>()?;
        Ok(Self::new(ranges))
    }

    /// Run-length conversion of a binary label sequence: each maximal run of
    /// `true` at indices `i..j` becomes the range `[i, j]`.
    pub fn from_binary_labels(labels: impl IntoIterator<Item = bool>) -> Self {
        let mut ranges = Vec::new();
        let mut run_start: Option<u64> = None;
        let mut idx: u64 = 0;
        for label in labels {
            if label && run_start.is_none() {
                run_start = Some(idx);
            } else if !label {
                if let Some(s) = run_start.take() {
                    ranges.push(TimeRange { start: s, end: idx - 1 });
                }
            }
            idx += 1;
        }
        if let Some(s) = run_start {
            ranges.push(TimeRange { start: s, end: idx - 1 });
        }
        // already sorted, disjoint and non-adjacent by construction
        Self { ranges }
    }

    pub fn ranges(&self) -> &[TimeRange] {
        &self.ranges
    }

    /// Number of ranges in the set.
    pub fn len(&self) -> usize {
        self.ranges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranges.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TimeRange> {
        self.ranges.iter()
    }

    /// Total number of covered points across all ranges.
    pub fn total_points(&self) -> u64 {
        self.ranges.iter().map(TimeRange::len).sum()
    }

    /// Largest covered timestamp, if any.
    pub fn max_end(&self) -> Option<u64> {
        self.ranges.last().map(TimeRange::end)
    }
}

impl FromIterator<TimeRange> for RangeSeries {
    fn from_iter<I: IntoIterator<Item = TimeRange>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl<'a> IntoIterator for &'a RangeSeries {
    type Item = &'a TimeRange;
    type IntoIter = std::slice::Iter<'a, TimeRange>;

    fn into_iter(self) -> Self::IntoIter {
        self.ranges.iter()
    }
}

/// The evaluated time axis: points `0 ..= n_points - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeDomain {
    n_points: u64,
}

impl TimeDomain {
    pub fn new(n_points: u64) -> Result<Self> {
        if n_points == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(Self { n_points })
    }

    pub fn n_points(&self) -> u64 {
        self.n_points
    }

    /// Checks that every range of `series` lies within the domain.
    pub fn validate(&self, series: &RangeSeries) -> Result<()> {
        for r in series {
            if r.end >= self.n_points {
                return Err(Error::RangeOutsideDomain {
                    start: r.start,
                    end: r.end,
                    n_points: self.n_points,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(s: u64, e: u64) -> TimeRange {
        TimeRange::new(s, e).unwrap()
    }

    #[test]
    fn range_rejects_inverted_bounds() {
        assert_eq!(
            TimeRange::new(5, 3),
            Err(Error::InvalidRange { start: 5, end: 3 })
        );
        assert_eq!(tr(2, 2).len(), 1);
        assert_eq!(tr(1, 5).len(), 5);
    }

    #[test]
    fn overlap_basic_cases() {
        assert_eq!(tr(1, 5).overlap(&tr(3, 8)), Some(tr(3, 5)));
        assert_eq!(tr(1, 5).overlap(&tr(6, 9)), None);
        assert_eq!(tr(2, 2).overlap(&tr(2, 2)), Some(tr(2, 2)));
        // single shared endpoint
        assert_eq!(tr(1, 5).overlap(&tr(5, 9)), Some(tr(5, 5)));
    }

    #[test]
    fn series_merges_overlapping_and_adjacent() {
        let s = RangeSeries::from_pairs(&[(6, 9), (3, 5)]).unwrap();
        assert_eq!(s.ranges(), &[tr(3, 9)]);

        let s = RangeSeries::from_pairs(&[(1, 4), (3, 7), (9, 9)]).unwrap();
        assert_eq!(s.ranges(), &[tr(1, 7), tr(9, 9)]);

        let s = RangeSeries::from_pairs(&[(1, 2), (4, 5)]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.total_points(), 4);
    }

    #[test]
    fn binary_labels_to_runs() {
        let s = RangeSeries::from_binary_labels([false, true, true, false, true]);
        assert_eq!(s.ranges(), &[tr(1, 2), tr(4, 4)]);
        assert!(RangeSeries::from_binary_labels([false, false]).is_empty());
        let s = RangeSeries::from_binary_labels([true, true, true]);
        assert_eq!(s.ranges(), &[tr(0, 2)]);
    }

    #[test]
    fn domain_validation() {
        assert_eq!(TimeDomain::new(0), Err(Error::EmptyDomain));
        let d = TimeDomain::new(10).unwrap();
        let ok = RangeSeries::from_pairs(&[(0, 9)]).unwrap();
        assert!(d.validate(&ok).is_ok());
        let bad = RangeSeries::from_pairs(&[(8, 12)]).unwrap();
        assert_eq!(
            d.validate(&bad),
            Err(Error::RangeOutsideDomain { start: 8, end: 12, n_points: 10 })
        );
    }
}
