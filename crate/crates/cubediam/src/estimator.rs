//! Probabilistic diameter estimation from exactly counted shallow levels.
//!
//! Given the configuration count `N`, a branching ratio `r` measured from
//! the first few exact levels, and those levels as seeds, the estimate grows
//! the per-step generation counts geometrically and saturates them through
//! the occupancy law:
//!
//! ```text
//! C(t) = r * S(t-1)            generated (redundant) states at step t
//! S(t) = N (1 - e^(-C(t)/N))   distinct ones, the next seed set
//! T(t) = C(0) + ... + C(t)     cumulative generations
//! ```
//!
//! The predicted diameter is the first `t` where `T(t)` exceeds the
//! expected covering time `N ln N + gamma N`.
//!
//! All arithmetic is carried in units of `N` (`S/N`, `C/N`, `T/N`), which
//! keeps the recurrence inside `f64` range for counts as large as `10^74`;
//! the saturation step uses `exp_m1` so the early levels, down at `10^-70`
//! of `N`, survive untouched.

use crate::census::{self, CensusOptions};
use crate::coupon::EULER_GAMMA;
use crate::cube::{Metric, MetricName};
use crate::error::Error;
use crate::orders;

const MAX_STEPS: u32 = 10_000;
/// Rows beyond the predicted diameter, enough to expose the decay tail.
const TAIL_ROWS: u32 = 5;
/// Absolute counts above this are not exactly representable and are shown
/// only in units of N.
pub const ABS_DISPLAY_LIMIT: f64 = 1e15;

/// Where the exact seed levels come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedSource {
    /// Counted on the spot by a shallow census.
    Census,
    /// The embedded exact level counts.
    Builtin,
}

/// How the branching ratio is presented to the recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RMode {
    /// The exact rational ratio of the last two seed levels.
    ExactRatio,
    /// The ratio rounded to two decimals, as the reference tables print it.
    Rounded,
}

pub fn round_ratio(r: f64) -> f64 {
    (r * 100.0).round() / 100.0
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct EstimationInput {
    pub label: String,
    /// Total configuration count `N` (may be astronomically large).
    pub n_configs: f64,
    /// Branching ratio `r`.
    pub branching: f64,
    /// Exact level counts `S(0) ..= S(k_seed)`.
    pub seeds: Vec<u64>,
    /// Generator count `k` of the metric; the growth model requires `r < k`.
    pub generator_count: usize,
}

impl EstimationInput {
    fn validate(&self) -> Result<(), Error> {
        if !(self.n_configs > 1.0) || !self.n_configs.is_finite() {
            return Err(Error::InvalidInput(format!(
                "configuration count must exceed 1, got {}",
                self.n_configs
            )));
        }
        if self.seeds.first() != Some(&1) {
            return Err(Error::InvalidInput(
                "seed levels must start at S(0) = 1".into(),
            ));
        }
        if !self.seeds.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "seed levels must be strictly increasing".into(),
            ));
        }
        if !(self.branching > 1.0) {
            return Err(Error::InvalidInput(format!(
                "branching ratio must exceed 1, got {}",
                self.branching
            )));
        }
        if self.branching >= self.generator_count as f64 {
            return Err(Error::InvalidInput(format!(
                "branching ratio {} must stay below the generator count {}",
                self.branching, self.generator_count
            )));
        }
        Ok(())
    }
}

/// One step of the estimate, in units of `N`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EstimateRow {
    pub t: u32,
    pub s_over_n: f64,
    pub c_over_n: f64,
    pub t_over_n: f64,
    /// Exact integer for the seed phase, where `S = C` by construction.
    pub seed: Option<u64>,
}

/// Completion outlook at one step: the probability that every configuration
/// has been generated by then, and the expected number still unseen.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct StepOutlook {
    pub t: u32,
    pub completion_probability: f64,
    pub expected_unseen: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct EstimateReport {
    pub label: String,
    pub n_configs: f64,
    pub branching: f64,
    pub seed_count: usize,
    pub rows: Vec<EstimateRow>,
    pub predicted_diameter: u32,
    /// `E[T_N] / N = ln N + gamma`.
    pub threshold_over_n: f64,
    /// Outlook at the steps around the predicted diameter (d-1, d, d+1).
    pub outlook: Vec<StepOutlook>,
    /// Closed-form diameter `ln N / ln r + ln N / r` for the same `r`.
    pub closed_form: f64,
}

impl EstimateReport {
    pub fn row(&self, t: usize) -> Option<&EstimateRow> {
        self.rows.get(t)
    }

    /// Absolute count for a value in units of N, when exactly displayable.
    pub fn absolute(&self, over_n: f64) -> Option<f64> {
        let abs = over_n * self.n_configs;
        (abs < ABS_DISPLAY_LIMIT).then_some(abs)
    }
}

pub fn run_estimate(input: &EstimationInput) -> Result<EstimateReport, Error> {
    input.validate()?;
    let n = input.n_configs;
    let ln_n = n.ln();
    let threshold = ln_n + EULER_GAMMA;

    let mut rows: Vec<EstimateRow> = Vec::new();
    let mut tau = 0.0f64;
    for (t, &seed) in input.seeds.iter().enumerate() {
        let c = seed as f64 / n;
        tau += c;
        rows.push(EstimateRow {
            t: t as u32,
            s_over_n: c,
            c_over_n: c,
            t_over_n: tau,
            seed: Some(seed),
        });
    }

    let mut diameter = rows
        .iter()
        .position(|r| r.t_over_n > threshold)
        .map(|t| t as u32);
    let mut s_prev = rows.last().expect("seeds are nonempty when valid").s_over_n;
    let mut t = input.seeds.len() as u32 - 1;
    loop {
        if diameter.is_none() && t >= MAX_STEPS {
            return Err(Error::DivergenceGuard { steps: MAX_STEPS });
        }
        if let Some(d) = diameter {
            if t >= d + TAIL_ROWS {
                break;
            }
        }
        t += 1;
        let c = input.branching * s_prev;
        let s = -(-c).exp_m1();
        tau += c;
        rows.push(EstimateRow {
            t,
            s_over_n: s,
            c_over_n: c,
            t_over_n: tau,
            seed: None,
        });
        if diameter.is_none() && tau > threshold {
            diameter = Some(t);
        }
        s_prev = s;
    }
    let diameter = diameter.expect("loop exits only once the threshold is crossed");

    let outlook = (diameter.saturating_sub(1)..=diameter + 1)
        .filter_map(|step| {
            let row = rows.get(step as usize)?;
            let unseen = n * (-row.t_over_n).exp();
            Some(StepOutlook {
                t: step,
                completion_probability: (-unseen).exp(),
                expected_unseen: unseen,
            })
        })
        .collect();

    Ok(EstimateReport {
        label: input.label.clone(),
        n_configs: n,
        branching: input.branching,
        seed_count: input.seeds.len(),
        rows,
        predicted_diameter: diameter,
        threshold_over_n: threshold,
        outlook,
        closed_form: closed_form_diameter(n, input.branching),
    })
}

/// Expected new (never seen before) configurations per step:
/// `N (e^(-T(t-1)/N) - e^(-T(t)/N))`, with `T(-1) = 0`. Factored as
/// `N e^(-T(t-1)/N) (1 - e^(-C(t)/N))` so the early steps, where both
/// exponentials sit within one ulp of 1, do not cancel away.
pub fn predicted_new_series(report: &EstimateReport) -> Vec<(u32, f64)> {
    let n = report.n_configs;
    let mut prev_tau = 0.0f64;
    report
        .rows
        .iter()
        .map(|row| {
            let value = n * (-prev_tau).exp() * -(-row.c_over_n).exp_m1();
            prev_tau = row.t_over_n;
            (row.t, value)
        })
        .collect()
}

/// Two-term closed form for the predicted diameter: steps for geometric
/// growth to reach `N`, plus steps for linear accumulation to pass
/// `N ln N`.
pub fn closed_form_diameter(n_configs: f64, branching: f64) -> f64 {
    n_configs.ln() / branching.ln() + n_configs.ln() / branching
}

/// Exact seed levels quoted for each cube and metric (counted by explicit
/// enumeration; reproducible with `shallow_census`).
pub fn builtin_seeds(n: u8, metric: MetricName) -> Option<&'static [u64]> {
    Some(match (n, metric) {
        (2, MetricName::Half) => &[1, 9, 54, 321],
        (2, MetricName::Quarter) => &[1, 6, 27, 120],
        (2, MetricName::SemiQuarter) => &[1, 3, 9, 27, 78, 216],
        (2, MetricName::BiQuarter) => &[1, 15, 144, 1324],
        (3, MetricName::Half) => &[1, 18, 243, 3240],
        (3, MetricName::Quarter) => &[1, 12, 114, 1068],
        (3, MetricName::Square) => &[1, 6, 27, 120],
        (4, MetricName::Half) => &[1, 27, 567, 11721],
        (4, MetricName::Quarter) => &[1, 18, 261, 3732],
        (5, MetricName::Half) => &[1, 36, 1026, 28812],
        (5, MetricName::Quarter) => &[1, 24, 468, 9000],
        _ => return None,
    })
}

/// Seed depth used for each metric: deep enough that the growth ratio has
/// settled (the slow-growing clockwise-only metric needs five levels).
pub fn seed_depth(metric: MetricName) -> u32 {
    match metric {
        MetricName::SemiQuarter => 5,
        _ => 3,
    }
}

/// Assembles the estimation input for `(n, metric)` and runs it: exact
/// seeds (embedded or freshly counted), the seed-ratio branching in the
/// requested mode, and the exact configuration count.
pub fn estimate_for(
    n: u8,
    metric_name: MetricName,
    source: SeedSource,
    r_mode: RMode,
) -> Result<EstimateReport, Error> {
    let metric = Metric::new(metric_name, n)?;
    let seeds: Vec<u64> = match source {
        SeedSource::Builtin => builtin_seeds(n, metric_name)
            .ok_or(Error::UndefinedMetric {
                name: metric_name,
                n,
            })?
            .to_vec(),
        SeedSource::Census => {
            let report = census::shallow_census(
                &metric,
                seed_depth(metric_name),
                &CensusOptions::default(),
            )?;
            report.levels.iter().map(|l| l.new_states).collect()
        }
    };
    let input = input_from_seeds(n, &metric, seeds, r_mode)?;
    run_estimate(&input)
}

pub fn input_from_seeds(
    n: u8,
    metric: &Metric,
    seeds: Vec<u64>,
    r_mode: RMode,
) -> Result<EstimationInput, Error> {
    if seeds.len() < 2 {
        return Err(Error::InvalidInput(
            "need at least two seed levels to measure growth".into(),
        ));
    }
    let exact = seeds[seeds.len() - 1] as f64 / seeds[seeds.len() - 2] as f64;
    let branching = match r_mode {
        RMode::ExactRatio => exact,
        RMode::Rounded => round_ratio(exact),
    };
    let order = orders::census_order(n, metric.name())?;
    Ok(EstimationInput {
        label: format!("{n}x{n}x{n} {}", metric.name()),
        n_configs: order.approx(),
        branching,
        seeds,
        generator_count: metric.k(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report_for(n: u8, metric: MetricName, r_mode: RMode) -> EstimateReport {
        estimate_for(n, metric, SeedSource::Builtin, r_mode).unwrap()
    }

    const GOLDEN_DIAMETERS: [(u8, MetricName, u32); 11] = [
        (2, MetricName::Half, 12),
        (2, MetricName::Quarter, 14),
        (2, MetricName::SemiQuarter, 21),
        (2, MetricName::BiQuarter, 9),
        (3, MetricName::Half, 22),
        (3, MetricName::Quarter, 26),
        (3, MetricName::Square, 13),
        (4, MetricName::Half, 41),
        (4, MetricName::Quarter, 48),
        (5, MetricName::Half, 58),
        (5, MetricName::Quarter, 68),
    ];

    #[test]
    fn predicted_diameters_match_in_both_r_modes() {
        for (n, metric, expected) in GOLDEN_DIAMETERS {
            for r_mode in [RMode::ExactRatio, RMode::Rounded] {
                let report = report_for(n, metric, r_mode);
                assert_eq!(
                    report.predicted_diameter, expected,
                    "{n}x{n}x{n} {metric} {r_mode:?}"
                );
            }
        }
    }

    #[test]
    fn threshold_brackets_the_diameter() {
        for (n, metric, _) in GOLDEN_DIAMETERS {
            let report = report_for(n, metric, RMode::Rounded);
            let d = report.predicted_diameter as usize;
            assert!(report.rows[d].t_over_n > report.threshold_over_n);
            assert!(report.rows[d - 1].t_over_n <= report.threshold_over_n);
            assert!(report.rows.len() > d + 1);
        }
    }

    #[test]
    fn reference_cumulative_values() {
        let half2 = report_for(2, MetricName::Half, RMode::Rounded);
        assert!((half2.rows[11].t_over_n - 14.892).abs() < 0.005);
        assert!((half2.rows[12].t_over_n - 20.816).abs() < 0.005);

        let semi2 = report_for(2, MetricName::SemiQuarter, RMode::Rounded);
        assert!((semi2.rows[21].t_over_n - 16.136).abs() < 0.005);

        let square3 = report_for(3, MetricName::Square, RMode::Rounded);
        assert!((square3.rows[13].t_over_n - 17.5460).abs() < 0.005);

        let half4 = report_for(4, MetricName::Half, RMode::Rounded);
        assert!((half4.rows[41].t_over_n - 122.7572).abs() < 0.005);

        let quarter5 = report_for(5, MetricName::Quarter, RMode::Rounded);
        assert!((quarter5.rows[68].t_over_n - 188.2771).abs() < 0.005);
    }

    #[test]
    fn seed_phase_is_exact() {
        let report = report_for(2, MetricName::SemiQuarter, RMode::Rounded);
        let seeds: Vec<u64> = report.rows.iter().filter_map(|r| r.seed).collect();
        assert_eq!(seeds, vec![1, 3, 9, 27, 78, 216]);
        for row in &report.rows[..seeds.len()] {
            assert_eq!(row.s_over_n, row.c_over_n);
        }
    }

    #[test]
    fn saturation_invariants() {
        for (n, metric, _) in GOLDEN_DIAMETERS {
            let report = report_for(n, metric, RMode::ExactRatio);
            let k_seed = report.seed_count;
            for row in &report.rows[k_seed..] {
                assert!(row.s_over_n <= row.c_over_n, "S <= C after seeds");
                assert!(row.s_over_n < 1.0, "S < N strictly");
            }
            // growth of the seed set rises through the geometric phase, then
            // shrinks monotonically as S converges to its fixed point
            let mut shrinking = false;
            let mut last_delta = f64::NEG_INFINITY;
            for pair in report.rows[k_seed..].windows(2) {
                let (a, b) = (pair[0], pair[1]);
                assert!(b.s_over_n >= a.s_over_n, "seed sizes nondecreasing");
                assert!(b.t_over_n > a.t_over_n, "T strictly increasing");
                let delta = b.s_over_n - a.s_over_n;
                if delta > last_delta + 1e-12 {
                    assert!(
                        !shrinking,
                        "{n}x{n}x{n} {metric}: growth resumed after saturation"
                    );
                } else if delta < last_delta - 1e-12 {
                    shrinking = true;
                }
                last_delta = delta;
            }
            assert!(shrinking, "{n}x{n}x{n} {metric}: never reached saturation");
        }
    }

    #[test]
    fn closed_form_reference_values() {
        let expected = [
            11.0, 13.5, 20.3, 8.5, 20.8, 25.0, 12.0, 40.0, 47.1, 57.5, 66.9,
        ];
        for ((n, metric, _), want) in GOLDEN_DIAMETERS.iter().zip(expected) {
            let report = report_for(*n, *metric, RMode::ExactRatio);
            assert!(
                (report.closed_form - want).abs() <= 0.1,
                "{n}x{n}x{n} {metric}: {} vs {want}",
                report.closed_form
            );
        }
    }

    #[test]
    fn closed_form_tracks_recurrence() {
        for (n, metric, _) in GOLDEN_DIAMETERS {
            let report = report_for(n, metric, RMode::ExactRatio);
            let gap = (report.closed_form - report.predicted_diameter as f64).abs();
            assert!(gap <= 1.6, "{n}x{n}x{n} {metric}: gap {gap}");
        }
    }

    #[test]
    fn predicted_new_series_properties() {
        let report = report_for(2, MetricName::Half, RMode::Rounded);
        let series = predicted_new_series(&report);
        let n = report.n_configs;

        // first-order regime: the seed phase emits essentially C(t) new states
        for t in 1..=3usize {
            let c_abs = report.rows[t].c_over_n * n;
            assert!((series[t].1 - c_abs).abs() / c_abs < 1e-3, "t={t}");
        }
        for &(_, v) in &series {
            assert!(v >= 0.0);
        }
        let total: f64 = series.iter().map(|&(_, v)| v).sum();
        assert!(total >= 0.999 * n, "cumulative {total} of N={n}");
        assert!(total <= n * (1.0 + 1e-12));

        // tail terms decay like e^{-c_inf}, which approaches e^{-r} once
        // saturation is complete; use a large-N case where S -> N exactly.
        let big = report_for(3, MetricName::Half, RMode::ExactRatio);
        let series = predicted_new_series(&big);
        let last = series.len() - 1;
        let ratio = series[last].1 / series[last - 1].1;
        let expected = (-big.branching).exp();
        assert!(
            (ratio - expected).abs() / expected < 0.01,
            "ratio {ratio} vs e^-r {expected}"
        );
    }

    #[test]
    fn census_seeds_match_builtin() {
        let from_census =
            estimate_for(2, MetricName::Half, SeedSource::Census, RMode::Rounded).unwrap();
        let from_builtin = report_for(2, MetricName::Half, RMode::Rounded);
        assert_eq!(
            from_census.predicted_diameter,
            from_builtin.predicted_diameter
        );
        assert_eq!(from_census.rows.len(), from_builtin.rows.len());
        for (a, b) in from_census.rows.iter().zip(&from_builtin.rows) {
            assert_eq!(a.seed, b.seed);
            assert!((a.t_over_n - b.t_over_n).abs() < 1e-12);
        }

        let deep =
            estimate_for(5, MetricName::Quarter, SeedSource::Census, RMode::Rounded).unwrap();
        let seeds: Vec<u64> = deep.rows.iter().filter_map(|r| r.seed).collect();
        assert_eq!(seeds, vec![1, 24, 468, 9000]);
        assert_eq!(deep.predicted_diameter, 68);
    }

    #[test]
    fn scaled_arithmetic_matches_absolute_reference() {
        // independent absolute-space recurrence, viable because N fits f64
        let report = report_for(2, MetricName::Half, RMode::Rounded);
        let n = report.n_configs;
        let r = report.branching;
        let seeds = [1.0, 9.0, 54.0, 321.0];
        let mut abs_t: f64 = seeds.iter().sum();
        let mut s_prev = seeds[3];
        for t in 4..report.rows.len() {
            let c = r * s_prev;
            let s = n * (1.0 - (-c / n).exp());
            abs_t += c;
            s_prev = s;
            assert!(
                (report.rows[t].t_over_n - abs_t / n).abs() < 1e-9,
                "t={t}: {} vs {}",
                report.rows[t].t_over_n,
                abs_t / n
            );
        }
    }

    #[test]
    fn outlook_reference_values() {
        let report = report_for(2, MetricName::Half, RMode::Rounded);
        let at = |t: u32| report.outlook.iter().find(|o| o.t == t).unwrap();
        assert!((at(11).completion_probability - 0.286).abs() < 0.005);
        assert!((at(12).completion_probability - 0.997).abs() < 0.005);
        assert!((at(11).expected_unseen - 1.3).abs() / 1.3 < 0.05);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let metric = Metric::new(MetricName::Half, 2).unwrap();
        let base = input_from_seeds(2, &metric, vec![1, 9, 54, 321], RMode::ExactRatio).unwrap();

        let mut bad = base.clone();
        bad.seeds[0] = 2;
        assert!(run_estimate(&bad).is_err());

        let mut bad = base.clone();
        bad.seeds = vec![1, 9, 9];
        assert!(run_estimate(&bad).is_err());

        let mut bad = base.clone();
        bad.branching = 0.9;
        assert!(run_estimate(&bad).is_err());

        let mut bad = base.clone();
        bad.branching = 9.5; // at least the generator count
        assert!(run_estimate(&bad).is_err());

        // a ratio barely above 1 cannot reach the threshold in 10^4 steps
        let mut slow = base;
        slow.branching = 1.000001;
        slow.n_configs = 1e30;
        assert!(matches!(
            run_estimate(&slow),
            Err(Error::DivergenceGuard { .. })
        ));
    }
}
