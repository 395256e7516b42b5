//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` or `--show-output` to see them
//! all). Criteria 5 and 6 contain known-irreproducible reference values;
//! see the failure messages for the exact cells and why.

use cubediam::census::{branching_ratio, full_census, shallow_census, CensusEngine, CensusOptions};
use cubediam::codec::{self, CompactIndex, CornerState};
use cubediam::coupon::{self, Mode};
use cubediam::cube::{FaceletCube, Metric, MetricName};
use cubediam::estimator::{self, RMode, SeedSource};
use cubediam::orders::{self, MetricClass};
use cubediam::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};

fn verdict(criterion: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {criterion:>2} {name}: {status}{detail}");
    assert!(pass, "criterion {criterion} ({name}) failed{detail}");
}

fn within(elapsed: Duration, budget: Duration, what: &str) {
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

fn metric(name: MetricName, n: u8) -> Metric {
    Metric::new(name, n).unwrap()
}

fn cubediam_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cubediam"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_01_group_orders() {
    let start = Instant::now();
    let exact = |n, class| orders::group_order(n, class).unwrap().exact.to_string();
    let approx = |n, class| format!("{:.2e}", orders::group_order(n, class).unwrap().approx());

    let ok = exact(2, MetricClass::Full) == "3674160"
        && exact(3, MetricClass::SquareSubgroup) == "663552"
        && approx(3, MetricClass::Full) == "4.33e19"
        && approx(4, MetricClass::Full) == "7.40e45"
        && approx(5, MetricClass::Full) == "2.83e74";
    within(start.elapsed(), Duration::from_secs(1), "orders");
    verdict(1, "group orders", ok, "");
}

#[test]
fn criterion_02_full_censuses() {
    struct Case {
        metric: MetricName,
        n: u8,
        engine: CensusEngine,
        prefix: &'static [u64],
        diameter: u32,
        total: Option<u64>,
    }
    let cases = [
        Case {
            metric: MetricName::Half,
            n: 2,
            engine: CensusEngine::Compact,
            prefix: &[1, 9, 54, 321],
            diameter: 11,
            total: Some(3_674_160),
        },
        Case {
            metric: MetricName::Quarter,
            n: 2,
            engine: CensusEngine::Compact,
            prefix: &[1, 6, 27, 120],
            diameter: 14,
            total: Some(3_674_160),
        },
        Case {
            metric: MetricName::SemiQuarter,
            n: 2,
            engine: CensusEngine::Compact,
            prefix: &[1, 3, 9, 27, 78, 216],
            diameter: 19,
            total: Some(3_674_160),
        },
        Case {
            metric: MetricName::BiQuarter,
            n: 2,
            engine: CensusEngine::Compact,
            prefix: &[1, 15, 144, 1324],
            diameter: 10,
            total: Some(3_674_160),
        },
        Case {
            metric: MetricName::Square,
            n: 3,
            engine: CensusEngine::Hashed,
            prefix: &[1, 6, 27, 120],
            diameter: 15,
            total: Some(663_552),
        },
    ];
    for case in &cases {
        let start = Instant::now();
        let report = full_census(
            &metric(case.metric, case.n),
            case.engine,
            &CensusOptions::default(),
        )
        .unwrap();
        within(start.elapsed(), Duration::from_secs(120), "census");
        let prefix: Vec<u64> = report
            .levels
            .iter()
            .take(case.prefix.len())
            .map(|l| l.new_states)
            .collect();
        assert_eq!(prefix, case.prefix, "{} n={}", case.metric, case.n);
        assert_eq!(
            report.diameter,
            Some(case.diameter),
            "{} n={}",
            case.metric,
            case.n
        );
        if let Some(total) = case.total {
            assert_eq!(report.total, total, "{} n={}", case.metric, case.n);
        }
        assert!(report.complete);
    }
    verdict(2, "full censuses", true, "");
}

#[test]
fn criterion_03_shallow_censuses() {
    let cases: [(MetricName, u8, [u64; 3]); 6] = [
        (MetricName::Half, 3, [18, 243, 3240]),
        (MetricName::Quarter, 3, [12, 114, 1068]),
        (MetricName::Half, 4, [27, 567, 11721]),
        (MetricName::Quarter, 4, [18, 261, 3732]),
        (MetricName::Half, 5, [36, 1026, 28812]),
        (MetricName::Quarter, 5, [24, 468, 9000]),
    ];
    for (name, n, expected) in cases {
        let start = Instant::now();
        let report = shallow_census(&metric(name, n), 3, &CensusOptions::default()).unwrap();
        within(start.elapsed(), Duration::from_secs(10), "shallow census");
        let got: Vec<u64> = report.levels[1..].iter().map(|l| l.new_states).collect();
        assert_eq!(got, expected, "{name} n={n}");
    }
    verdict(3, "shallow censuses", true, "");
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
fn criterion_04_predicted_diameters() {
    let start = Instant::now();
    for (n, name, expected) in GOLDEN_DIAMETERS {
        for r_mode in [RMode::ExactRatio, RMode::Rounded] {
            let report = estimator::estimate_for(n, name, SeedSource::Builtin, r_mode).unwrap();
            assert_eq!(
                report.predicted_diameter, expected,
                "{n}x{n}x{n} {name} {r_mode:?}"
            );
        }
    }
    within(start.elapsed(), Duration::from_secs(1), "estimates");
    verdict(4, "predicted diameters", true, "");
}

#[test]
fn criterion_05_table_cells() {
    // The `paper-table` command compares every published cell at the stated
    // tolerance (0.5% of N for estimated cells, exact for seed integers)
    // and encodes the result in its exit status.
    let mut failures = Vec::new();
    for id in [
        "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI",
    ] {
        let out = cubediam_cli(&["paper-table", "--id", id]);
        match out.status.code() {
            Some(0) => {}
            Some(1) => failures.push(id),
            code => panic!("paper-table --id {id} exited with {code:?}"),
        }
    }
    // Table II cannot pass: its published chain violates its own recurrence
    // (printed C(9)/S(8) = 0.250/0.055 = 4.55 against r = 4.44), leaving the
    // cumulative column offset by up to 0.108 N against any faithful
    // evaluation, 21x the 0.005 N tolerance.
    let detail = if failures.is_empty() {
        String::new()
    } else {
        format!(" — irreproducible published cells in table(s) {failures:?}")
    };
    verdict(5, "table cell reproduction", failures.is_empty(), &detail);
}

#[test]
fn criterion_06_probabilities_and_unseen_counts() {
    // Quoted completion probabilities (+-0.005 absolute) and unseen counts
    // (+-10% relative) at the steps around the predicted diameters.
    let half2 =
        estimator::estimate_for(2, MetricName::Half, SeedSource::Builtin, RMode::Rounded).unwrap();
    let quarter2 =
        estimator::estimate_for(2, MetricName::Quarter, SeedSource::Builtin, RMode::Rounded)
            .unwrap();
    let outlook = |report: &estimator::EstimateReport, t: u32| {
        report.outlook.iter().find(|o| o.t == t).copied().unwrap()
    };

    let mut failures = Vec::new();
    let mut check_p = |label: &str, got: f64, want: f64| {
        if (got - want).abs() > 0.005 {
            failures.push(format!(
                "{label}: probability {got:.6} vs {want} (tolerance 0.005)"
            ));
        }
    };
    check_p(
        "2x2x2 half t=11",
        outlook(&half2, 11).completion_probability,
        0.286,
    );
    check_p(
        "2x2x2 half t=12",
        outlook(&half2, 12).completion_probability,
        0.997,
    );
    check_p(
        "2x2x2 quarter t=13",
        outlook(&quarter2, 13).completion_probability,
        5e-6,
    );
    check_p(
        "2x2x2 quarter t=14",
        outlook(&quarter2, 14).completion_probability,
        0.859,
    );
    check_p(
        "2x2x2 quarter t=15",
        outlook(&quarter2, 15).completion_probability,
        0.998,
    );

    let mut check_u = |label: &str, got: f64, want: f64| {
        if (got - want).abs() > 0.10 * want {
            failures.push(format!(
                "{label}: unseen {got:.6} vs {want} (tolerance 10%)"
            ));
        }
    };
    check_u("2x2x2 half t=11", outlook(&half2, 11).expected_unseen, 1.3);
    check_u(
        "2x2x2 half t=12",
        outlook(&half2, 12).expected_unseen,
        0.003,
    );

    // Known irreproducible quotes: the quarter-turn table's t=14 probability
    // inherits that table's inconsistent cumulative column (0.845 against
    // the quoted 0.859), and the 0.003 unseen count is a one-significant-
    // digit print of 0.00335 (the quoted cumulative 20.816 N itself yields
    // 0.00335), outside +-10% of its own print.
    let detail = if failures.is_empty() {
        String::new()
    } else {
        format!(" — {failures:?}")
    };
    verdict(
        6,
        "completion probabilities and unseen counts",
        failures.is_empty(),
        &detail,
    );
}

#[test]
fn criterion_07_closed_form_diameters() {
    let expected = [
        11.0, 13.5, 20.3, 8.5, 20.8, 25.0, 12.0, 40.0, 47.1, 57.5, 66.9,
    ];
    for ((n, name, _), want) in GOLDEN_DIAMETERS.iter().zip(expected) {
        let report =
            estimator::estimate_for(*n, *name, SeedSource::Builtin, RMode::ExactRatio).unwrap();
        assert!(
            (report.closed_form - want).abs() <= 0.1,
            "{n}x{n}x{n} {name}: closed form {} vs {want}",
            report.closed_form
        );
    }
    verdict(7, "closed-form diameters", true, "");
}

#[test]
fn criterion_08_coupon_property_suite() {
    let start = Instant::now();

    for (n, trials) in [(2u64, 100_000u64), (10, 100_000), (100, 10_000)] {
        let exact = coupon::expected_coverings(n as f64, Mode::Exact).unwrap();
        let sigma = coupon::coverings_stddev(n as f64, Mode::Exact).unwrap();
        let sim = coupon::simulate_collector(n, trials, 2024).unwrap();
        let se = sigma / (trials as f64).sqrt();
        assert!(
            (sim.mean - exact).abs() < 3.0 * se,
            "N={n}: simulated mean {} vs exact {exact} (se {se})",
            sim.mean
        );
    }

    for (n, draws) in [(10u64, 10u64), (100, 150)] {
        let formula = coupon::expected_distinct(n as f64, draws as f64, Mode::Exact).unwrap();
        let sim = coupon::simulate_distinct(n, draws, 100_000, 99).unwrap();
        let se = sim.stddev / (sim.trials as f64).sqrt();
        assert!(
            (sim.mean - formula).abs() < 3.0 * se.max(1e-3),
            "N={n}, draws={draws}: simulated {} vs formula {formula}",
            sim.mean
        );
    }

    for n in [1e4, 1e6, 1e8] {
        let sigma = coupon::coverings_stddev(n, Mode::Asymptotic).unwrap();
        assert!(
            (sigma / (1.28 * n) - 1.0).abs() < 0.01,
            "N={n}: sigma {sigma}"
        );
    }

    within(start.elapsed(), Duration::from_secs(30), "coupon suite");
    verdict(8, "coupon collector properties", true, "");
}

#[test]
fn criterion_09_codec_and_engine_oracles() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7777);

    // encode/decode bijection on 10^5 random states
    for _ in 0..100_000 {
        let mut state = CornerState::SOLVED;
        state.permutation.shuffle(&mut rng);
        let mut sum = 0u8;
        for i in 0..6 {
            state.orientation[i] = rng.gen_range(0..3);
            sum += state.orientation[i];
        }
        state.orientation[6] = (3 - sum % 3) % 3;
        let index = codec::encode(&state).unwrap();
        assert!(index.0 < codec::STATE_COUNT);
        assert_eq!(codec::decode(index).unwrap(), state);
    }

    // facelet model against the move table on 10^4 random 20-move words
    let half = metric(MetricName::Half, 2);
    let table = codec::build_move_table(&half).unwrap();
    for _ in 0..10_000 {
        let mut cube = FaceletCube::solved(2).unwrap();
        let mut index = CompactIndex(0);
        for _ in 0..20 {
            let g = rng.gen_range(0..half.k());
            cube = cube.apply(&half.generators()[g]).unwrap();
            index = table.step(g, index);
        }
        let via_facelets = codec::encode(&codec::corners_from_facelets(&cube).unwrap()).unwrap();
        assert_eq!(via_facelets, index);
    }

    // both engines walk the half-turn graph to identical level counts
    let compact = full_census(&half, CensusEngine::Compact, &CensusOptions::default()).unwrap();
    let hashed = full_census(&half, CensusEngine::Hashed, &CensusOptions::default()).unwrap();
    assert_eq!(compact.levels, hashed.levels);
    assert_eq!(compact.diameter, Some(11));

    within(start.elapsed(), Duration::from_secs(60), "codec oracles");
    verdict(9, "codec and engine oracles", true, "");
}

#[test]
fn criterion_10_out_of_scope_honesty() {
    // infeasible censuses are refused up front
    for name in [MetricName::Half, MetricName::Quarter] {
        let err = full_census(
            &metric(name, 3),
            CensusEngine::Hashed,
            &CensusOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }), "{name}");
    }
    let out = cubediam_cli(&["census", "--n", "3", "--metric", "half"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    // figures 6 and 7 ship no embedded actual series
    for id in ["6", "7"] {
        let out = cubediam_cli(&["figure-data", "--id", id]);
        assert!(out.status.success());
        for line in String::from_utf8(out.stdout).unwrap().lines().skip(1) {
            let fields: Vec<&str> = line.split(',').collect();
            assert!(
                fields[1].is_empty(),
                "figure {id} embeds an actual value: {line}"
            );
        }
    }

    // the known 3x3x3 full-metric diameters appear only as cited constants
    let summary = cubediam_cli(&["paper-table", "--id", "XII"]);
    let text = String::from_utf8(summary.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.contains("3x3x3 half") && l.contains("20")));
    assert!(text
        .lines()
        .any(|l| l.contains("3x3x3 quarter") && l.contains("26")));

    verdict(10, "out-of-scope honesty", true, "");
}

#[test]
fn branching_ratios_match_reference_prints() {
    // r is measured, not hard-coded: the two-decimal rounding of each
    // exact seed ratio equals the printed value.
    let printed = [
        5.94, 4.44, 2.77, 9.19, 13.33, 9.37, 4.44, 20.67, 14.30, 28.08, 19.23,
    ];
    for ((n, name, _), want) in GOLDEN_DIAMETERS.iter().zip(printed) {
        let seeds = estimator::builtin_seeds(*n, *name).unwrap();
        let exact = seeds[seeds.len() - 1] as f64 / seeds[seeds.len() - 2] as f64;
        assert_eq!(estimator::round_ratio(exact), want, "{n}x{n}x{n} {name}");
    }

    // and the builtin seeds themselves are what a census counts
    for (name, n, depth) in [
        (MetricName::Half, 2, 3u32),
        (MetricName::SemiQuarter, 2, 5),
        (MetricName::Half, 5, 3),
    ] {
        let report = shallow_census(&metric(name, n), depth, &CensusOptions::default()).unwrap();
        let counted: Vec<u64> = report.levels.iter().map(|l| l.new_states).collect();
        assert_eq!(
            counted,
            estimator::builtin_seeds(n, name).unwrap().to_vec(),
            "{name} n={n}"
        );
        let _ = branching_ratio(&report, depth as usize).unwrap();
    }
}
