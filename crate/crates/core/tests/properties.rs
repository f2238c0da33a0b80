//! Property suites for the scoring model invariants.

use proptest::prelude::*;

use rangescore::classical::{to_unit_ranges, ConfusionCounts};
use rangescore::{
    naive, omega, omega_closed_form, oracle, paired_sweep, BiasKind, Engine, GammaKind,
    MetricConfig, RangeSeries, TimeRange,
};

fn tr(s: u64, e: u64) -> TimeRange {
    TimeRange::new(s, e).unwrap()
}

/// Arbitrary normalized series over timestamps below `max_start + max_len`.
fn arb_series(max_start: u64, max_len: u64, max_ranges: usize) -> impl Strategy<Value = RangeSeries> {
    prop::collection::vec((0..max_start, 1..=max_len), 0..=max_ranges)
        .prop_map(|v| RangeSeries::new(v.into_iter().map(|(s, l)| tr(s, s + l - 1))))
}

fn arb_nonempty_series(
    max_start: u64,
    max_len: u64,
    max_ranges: usize,
) -> impl Strategy<Value = RangeSeries> {
    prop::collection::vec((0..max_start, 1..=max_len), 1..=max_ranges)
        .prop_map(|v| RangeSeries::new(v.into_iter().map(|(s, l)| tr(s, s + l - 1))))
}

fn arb_bias() -> impl Strategy<Value = BiasKind> {
    prop_oneof![
        4 => prop_oneof![
            Just(BiasKind::Flat),
            Just(BiasKind::Front),
            Just(BiasKind::Back),
            Just(BiasKind::Middle),
        ],
        1 => Just(BiasKind::custom(|i, l| 0.5 + ((l - i + 1) as f64).sqrt())),
    ]
}

fn arb_builtin_bias() -> impl Strategy<Value = BiasKind> {
    prop_oneof![
        Just(BiasKind::Flat),
        Just(BiasKind::Front),
        Just(BiasKind::Back),
        Just(BiasKind::Middle),
    ]
}

fn arb_gamma() -> impl Strategy<Value = GammaKind> {
    prop_oneof![
        2 => Just(GammaKind::One),
        2 => Just(GammaKind::Reciprocal),
        1 => Just(GammaKind::custom(|x| 1.0 / (x as f64).powi(2))),
    ]
}

fn arb_config() -> impl Strategy<Value = MetricConfig> {
    (0.0..=1.0f64, arb_gamma(), arb_bias(), arb_gamma(), arb_bias()).prop_map(
        |(alpha, rg, rb, pg, pb)| {
            MetricConfig::new(alpha)
                .unwrap()
                .with_recall_gamma(rg)
                .with_recall_bias(rb)
                .with_precision_gamma(pg)
                .with_precision_bias(pb)
        },
    )
}

proptest! {
    /// Scores stay inside [0, 1] for every config on both engines.
    #[test]
    fn boundedness(
        real in arb_series(200, 12, 20),
        pred in arb_series(200, 12, 20),
        cfg in arb_config(),
    ) {
        for engine in [Engine::Naive, Engine::Fast] {
            if !real.is_empty() {
                let r = engine.range_recall(real.ranges(), pred.ranges(), &cfg).unwrap();
                prop_assert!((0.0..=1.0).contains(&r), "recall {r} out of bounds");
            }
            if !pred.is_empty() {
                let p = engine.range_precision(real.ranges(), pred.ranges(), &cfg).unwrap();
                prop_assert!((0.0..=1.0).contains(&p), "precision {p} out of bounds");
            }
        }
    }

    /// Precision is recall with the roles swapped, alpha forced to 0, and the
    /// precision-side functions applied.
    #[test]
    fn duality(
        real in arb_series(200, 10, 16),
        pred in arb_nonempty_series(200, 10, 16),
        cfg in arb_config(),
    ) {
        let swapped = MetricConfig::default()
            .with_recall_gamma(cfg.precision_gamma().clone())
            .with_recall_bias(cfg.precision_bias().clone());
        for engine in [Engine::Naive, Engine::Fast] {
            let precision = engine.range_precision(real.ranges(), pred.ranges(), &cfg).unwrap();
            let as_recall = engine.range_recall(pred.ranges(), real.ranges(), &swapped).unwrap();
            prop_assert_eq!(precision, as_recall);
        }
    }

    /// A range-for-range perfect prediction scores 1.0 under every config.
    #[test]
    fn perfect_match(real in arb_nonempty_series(300, 15, 20), cfg in arb_config()) {
        for engine in [Engine::Naive, Engine::Fast] {
            let scores = engine.evaluate(real.ranges(), real.ranges(), &cfg).unwrap();
            prop_assert_eq!(scores.recall, 1.0);
            prop_assert_eq!(scores.precision, 1.0);
        }
    }

    /// With no intersection at all, both metrics are exactly zero.
    #[test]
    fn zero_overlap(
        real in arb_nonempty_series(100, 8, 10),
        pred_shape in arb_nonempty_series(100, 8, 10),
        cfg in arb_config(),
    ) {
        // shift predictions past the end of the real side
        let offset = real.max_end().unwrap() + 2;
        let pred = RangeSeries::new(
            pred_shape.iter().map(|r| tr(r.start() + offset, r.end() + offset)),
        );
        for engine in [Engine::Naive, Engine::Fast] {
            let scores = engine.evaluate(real.ranges(), pred.ranges(), &cfg).unwrap();
            prop_assert_eq!(scores.recall, 0.0);
            prop_assert_eq!(scores.precision, 0.0);
        }
    }

    /// With alpha = 1, recall is exactly the fraction of real ranges touched
    /// by at least one prediction.
    #[test]
    fn existence_dominance(
        real in arb_nonempty_series(200, 10, 16),
        pred in arb_series(200, 10, 16),
        gamma in arb_gamma(),
        bias in arb_bias(),
    ) {
        let cfg = MetricConfig::new(1.0)
            .unwrap()
            .with_gamma(gamma)
            .with_recall_bias(bias);
        let touched = real
            .iter()
            .filter(|r| pred.iter().any(|p| r.overlap(p).is_some()))
            .count();
        let expected = touched as f64 / real.len() as f64;
        for engine in [Engine::Naive, Engine::Fast] {
            let recall = engine.range_recall(real.ranges(), pred.ranges(), &cfg).unwrap();
            prop_assert_eq!(recall, expected);
        }
    }

    /// Extending one overlapping prediction deeper into a real range, without
    /// changing which predictions overlap it, never decreases its recall.
    #[test]
    fn overlap_growth_monotonicity(
        start in 0u64..50,
        len in 3u64..20,
        pred in arb_nonempty_series(80, 6, 8),
        cfg in arb_config(),
    ) {
        let real = tr(start, start + len - 1);
        let ranges = pred.ranges();
        // find a prediction that ends inside the real range and can grow by
        // one point while staying clear of its successor
        let candidate = ranges.iter().enumerate().find(|(j, p)| {
            real.overlap(p).is_some()
                && p.end() < real.end()
                && ranges.get(j + 1).is_none_or(|next| p.end() + 2 <= next.start())
        });
        if let Some((j, p)) = candidate {
            let mut grown: Vec<TimeRange> = ranges.to_vec();
            grown[j] = tr(p.start(), p.end() + 1);
            let before = naive::single_range_recall(&real, ranges, &cfg).unwrap();
            let after = naive::single_range_recall(&real, &grown, &cfg).unwrap();
            prop_assert!(after >= before, "recall fell from {before} to {after}");
        }
    }

    /// The per-point oracle and the reference engine agree to 1e-12.
    #[test]
    fn brute_force_oracle_equivalence(
        real in arb_nonempty_series(90, 10, 10),
        pred in arb_series(90, 10, 10),
        cfg in arb_config(),
    ) {
        for r in &real {
            let fast_path = naive::single_range_recall(r, pred.ranges(), &cfg).unwrap();
            let oracle_value = oracle::single_range_recall(r, pred.ranges(), &cfg);
            prop_assert!(
                (fast_path - oracle_value).abs() < 1e-12,
                "single recall {fast_path} vs oracle {oracle_value}"
            );
        }
        let engine = Engine::Naive.range_recall(real.ranges(), pred.ranges(), &cfg).unwrap();
        let by_points = oracle::range_recall(real.ranges(), pred.ranges(), &cfg).unwrap();
        prop_assert!((engine - by_points).abs() < 1e-12);
        if !pred.is_empty() {
            let engine = Engine::Naive.range_precision(real.ranges(), pred.ranges(), &cfg).unwrap();
            let by_points = oracle::range_precision(real.ranges(), pred.ranges(), &cfg).unwrap();
            prop_assert!((engine - by_points).abs() < 1e-12);
        }
    }

    /// omega is normalized: 0 on empty overlap, 1 on full coverage, in [0, 1]
    /// everywhere.
    #[test]
    fn omega_normalization(start in 0u64..100, len in 1u64..40, bias in arb_bias()) {
        let range = tr(start, start + len - 1);
        prop_assert_eq!(omega(&range, &[], &bias).unwrap(), 0.0);
        prop_assert_eq!(omega(&range, &[range], &bias).unwrap(), 1.0);
        let half = tr(start, start + (len - 1) / 2);
        let v = omega(&range, &[half], &bias).unwrap();
        prop_assert!((0.0..=1.0).contains(&v));
    }

    /// Splitting a covered segment into disjoint parts does not change omega.
    #[test]
    fn omega_additivity(
        start in 0u64..50,
        len in 2u64..40,
        cut_ratio in 0.1..0.9f64,
        bias in arb_bias(),
    ) {
        let range = tr(start, start + len - 1);
        let cut = start + ((len as f64 * cut_ratio) as u64).clamp(0, len - 2);
        let a = tr(start, cut);
        let b = tr(cut + 1, range.end());
        let joint = omega(&range, &[a, b], &bias).unwrap();
        let split = omega(&range, &[a], &bias).unwrap() + omega(&range, &[b], &bias).unwrap();
        prop_assert!((joint - split).abs() < 1e-12, "joint {joint} vs split {split}");
    }

    /// Closed-form omega equals the loop on random segments of larger ranges.
    #[test]
    fn closed_form_equivalence_randomized(
        start in 0u64..1000,
        len in 1u64..3000,
        seg in (0.0..1.0f64, 0.0..1.0f64),
        kind in arb_builtin_bias(),
    ) {
        let range = tr(start, start + len - 1);
        let a = start + (seg.0 * (len - 1) as f64) as u64;
        let b = a + ((seg.1 * (range.end() - a) as f64) as u64);
        let looped = omega(&range, &[tr(a, b)], &kind).unwrap();
        let closed = omega_closed_form(&range, &[tr(a, b)], &kind).unwrap();
        prop_assert!((looped - closed).abs() < 1e-12);
    }

    /// Covering the front of a range scores higher under front bias than
    /// covering its back, and symmetrically; flat bias only sees the size.
    #[test]
    fn positional_sensitivity(start in 0u64..100, len in 2u64..50, m_ratio in 0.05..0.95f64) {
        let range = tr(start, start + len - 1);
        let m = ((len as f64 * m_ratio) as u64).clamp(1, len - 1);
        let front_seg = tr(start, start + m - 1);
        let back_seg = tr(range.end() - m + 1, range.end());
        let f = omega(&range, &[front_seg], &BiasKind::Front).unwrap();
        let b = omega(&range, &[back_seg], &BiasKind::Front).unwrap();
        prop_assert!(f > b, "front bias: front segment {f} <= back segment {b}");
        let f2 = omega(&range, &[front_seg], &BiasKind::Back).unwrap();
        let b2 = omega(&range, &[back_seg], &BiasKind::Back).unwrap();
        prop_assert!(b2 > f2);
        let ff = omega(&range, &[front_seg], &BiasKind::Flat).unwrap();
        let fb = omega(&range, &[back_seg], &BiasKind::Flat).unwrap();
        prop_assert_eq!(ff, fb);
    }

    /// A segment scored with front bias equals its mirror image scored with
    /// back bias.
    #[test]
    fn front_back_mirror_symmetry(
        start in 0u64..100,
        len in 1u64..60,
        seg in (0.0..1.0f64, 0.0..1.0f64),
    ) {
        let range = tr(start, start + len - 1);
        let a = start + (seg.0 * (len - 1) as f64) as u64;
        let b = a + ((seg.1 * (range.end() - a) as f64) as u64);
        let mirrored = tr(
            range.start() + (range.end() - b),
            range.end() - (a - range.start()),
        );
        let front = omega(&range, &[tr(a, b)], &BiasKind::Front).unwrap();
        let back = omega(&range, &[mirrored], &BiasKind::Back).unwrap();
        prop_assert_eq!(front, back);
    }

    /// Under unit-size ranges, alpha = 0, gamma = 1, and flat bias, the range
    /// metrics equal classical point-based precision/recall exactly.
    #[test]
    fn subsumption_randomized(
        real in arb_series(150, 6, 12),
        pred in arb_series(150, 6, 12),
    ) {
        let real_units = to_unit_ranges(&real);
        let pred_units = to_unit_ranges(&pred);
        let counts = ConfusionCounts::from_ranges(real.ranges(), pred.ranges());
        let cfg = MetricConfig::default();
        for engine in [Engine::Naive, Engine::Fast] {
            if !real_units.is_empty() {
                let range_recall = engine.range_recall(&real_units, &pred_units, &cfg).unwrap();
                prop_assert_eq!(range_recall, counts.recall().unwrap());
            }
            if !pred_units.is_empty() {
                let range_precision =
                    engine.range_precision(&real_units, &pred_units, &cfg).unwrap();
                prop_assert_eq!(range_precision, counts.precision().unwrap());
            }
        }
    }

    /// F-beta is symmetric in its arguments exactly at beta = 1 and monotone
    /// non-decreasing in each argument.
    #[test]
    fn f_beta_symmetry_and_monotonicity(
        p in 0.0..=1.0f64,
        r in 0.0..=1.0f64,
        p2 in 0.0..=1.0f64,
        beta in prop_oneof![Just(0.5), Just(1.0), Just(2.0), 0.1..5.0f64],
    ) {
        use rangescore::f_beta;
        prop_assert_eq!(f_beta(p, r, 1.0), f_beta(r, p, 1.0));
        let (lo, hi) = if p <= p2 { (p, p2) } else { (p2, p) };
        prop_assert!(f_beta(lo, r, beta) <= f_beta(hi, r, beta) + 1e-15);
        prop_assert!(f_beta(r, lo, beta) <= f_beta(r, hi, beta) + 1e-15);
    }

    /// Interval-arithmetic confusion counts match raw point enumeration.
    #[test]
    fn classical_counts_match_point_enumeration(
        real in arb_series(900, 20, 25),
        pred in arb_series(900, 20, 25),
    ) {
        let interval = ConfusionCounts::from_ranges(real.ranges(), pred.ranges());
        let points = oracle::classical_counts_by_points(real.ranges(), pred.ranges());
        prop_assert_eq!(interval, points);
    }

    /// The sweep finds exactly the pairs the quadratic scan finds, and their
    /// union is the intersection of the two coverages.
    #[test]
    fn sweep_completeness(
        real in arb_series(300, 10, 20),
        pred in arb_series(300, 10, 20),
    ) {
        let assignment = paired_sweep(real.ranges(), pred.ranges());
        let mut from_real = Vec::new();
        for i in 0..assignment.n_real() {
            for &(j, part) in assignment.of_real(i) {
                from_real.push((i, j, part));
            }
        }
        let mut from_pred = Vec::new();
        for j in 0..assignment.n_predicted() {
            for &(i, part) in assignment.of_predicted(j) {
                from_pred.push((i, j, part));
            }
        }
        from_pred.sort();
        let mut all_pairs = Vec::new();
        for (i, r) in real.iter().enumerate() {
            for (j, p) in pred.iter().enumerate() {
                if let Some(part) = r.overlap(p) {
                    all_pairs.push((i, j, part));
                }
            }
        }
        prop_assert_eq!(&from_real, &all_pairs);
        prop_assert_eq!(&from_pred, &all_pairs);

        let covered = RangeSeries::new(from_real.iter().map(|&(_, _, part)| part));
        let real_points = oracle::point_set(real.ranges());
        let pred_points = oracle::point_set(pred.ranges());
        let expected: Vec<u64> = {
            let mut v: Vec<u64> = real_points.intersection(&pred_points).copied().collect();
            v.sort_unstable();
            v
        };
        let expected_series =
            RangeSeries::new(expected.into_iter().map(TimeRange::unit));
        prop_assert_eq!(covered, expected_series);
    }
}

/// Built-in weights follow their stated monotone shapes for every length.
#[test]
fn delta_monotone_structure() {
    for len in 1u64..=60 {
        let weights = |kind: &BiasKind| -> Vec<f64> {
            (1..=len).map(|i| kind.weight(i, len).unwrap()).collect()
        };
        let front = weights(&BiasKind::Front);
        assert!(front.windows(2).all(|w| w[1] < w[0]));
        let back = weights(&BiasKind::Back);
        assert!(back.windows(2).all(|w| w[1] > w[0]));
        let flat = weights(&BiasKind::Flat);
        assert!(flat.iter().all(|&w| w == 1.0));
        let middle = weights(&BiasKind::Middle);
        let peak = (len as usize).div_ceil(2);
        assert!(middle[..peak].windows(2).all(|w| w[1] >= w[0]));
        assert!(middle[peak.saturating_sub(1)..].windows(2).all(|w| w[1] <= w[0]));
        // mirror-symmetric around the midpoint
        for i in 0..len as usize {
            assert_eq!(middle[i], middle[len as usize - 1 - i]);
        }
    }
}
