mod golden;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use cubediam::census::{self, CensusEngine, CensusOptions};
use cubediam::coupon;
use cubediam::cube::{Metric, MetricName};
use cubediam::estimator::{self, EstimationInput, RMode, SeedSource};
use cubediam::orders::{self, MetricClass};
use golden::{Cell, FigureSpec, TableSpec};
use output::Metadata;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

const NOTATION_HELP: &str = "\
Move notation: faces R, L, U, D, F, B; an optional layer subscript counts
inward from that face (R = R_1 exterior, R_2 second layer, ...); a trailing
' marks the counterclockwise turn and a trailing 2 the half turn. Examples:
R, R', R2, R_2', R_22, and the compound moves RD, R'D', DB, D'B', BR, B'R'.

Metrics: half (90 and 180 degree turns), quarter (90 only), semi-quarter
(clockwise 90 only, 2x2x2), bi-quarter (half plus six compound turns,
2x2x2), square (180 only, 3x3x3).

Table ids: I..XI are the per-step estimate tables (2x2x2 half, quarter,
semi-quarter, bi-quarter; 3x3x3 half, quarter, square; 4x4x4 half, quarter;
5x5x5 half, quarter); XII (alias: summary) is the summary table.";

#[derive(Parser)]
#[command(name = "cubediam", version, about = "Census and diameter estimation for cube move graphs", after_long_help = NOTATION_HELP)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for census frontier expansion
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubgroupArg {
    Full,
    Square,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Compact,
    Hashed,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedSourceArg {
    Builtin,
    Census,
}

#[derive(Clone, Copy, ValueEnum)]
enum RModeArg {
    Exact,
    Rounded,
}

#[derive(Clone, Copy, ValueEnum)]
enum CouponModeArg {
    Exact,
    Asymptotic,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact and approximate configuration counts
    Orders {
        /// Cube size (2 through 5); omit to list all
        #[arg(long)]
        n: Option<u8>,
        /// Which state space for n = 3
        #[arg(long, value_enum, default_value_t = SubgroupArg::Full)]
        subgroup: SubgroupArg,
    },
    /// Exact per-depth census of a metric's move graph
    Census {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        metric: MetricName,
        /// Search engine; defaults to compact for n = 2, hashed otherwise
        #[arg(long, value_enum)]
        engine: Option<EngineArg>,
        /// Stop after this depth (exact shallow census) instead of running to exhaustion
        #[arg(long)]
        max_depth: Option<u32>,
        /// Maximum number of states to enumerate
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Predict the diameter from shallow exact counts
    Estimate {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        metric: MetricName,
        /// Where the seed levels come from
        #[arg(long, value_enum, default_value_t = SeedSourceArg::Builtin)]
        seed_source: SeedSourceArg,
        /// Branching-ratio mode
        #[arg(long, value_enum, default_value_t = RModeArg::Exact)]
        r_mode: RModeArg,
        /// Override the branching ratio
        #[arg(long)]
        r: Option<f64>,
    },
    /// Compare an estimate against the published reference table
    PaperTable {
        /// I..XI for the per-step tables, XII or `summary` for the summary
        #[arg(long)]
        id: String,
    },
    /// Per-step new-configuration series behind the figures
    FigureData {
        /// Figure number, 1 through 7
        #[arg(long)]
        id: u32,
        /// External actual-series CSV (t,new_states) for figures 6 and 7
        #[arg(long)]
        actuals: Option<PathBuf>,
    },
    /// Coupon-collector statistics
    Coupon {
        /// Population size N
        #[arg(long)]
        population: f64,
        #[arg(long, value_enum, default_value_t = CouponModeArg::Asymptotic)]
        mode: CouponModeArg,
        /// Evaluate completion probability and occupancy at this many draws
        #[arg(long)]
        draws: Option<f64>,
        /// Run the Monte Carlo oracle (requires an integer population)
        #[arg(long)]
        simulate: bool,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Output {
    body: String,
    comparison_failed: bool,
}

impl Output {
    fn ok(body: String) -> Output {
        Output {
            body,
            comparison_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match result {
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output.body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", output.body);
            }
            if output.comparison_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

fn run(cli: &Cli) -> Result<Output, String> {
    match &cli.command {
        Command::Orders { n, subgroup } => cmd_orders(cli, *n, *subgroup),
        Command::Census {
            n,
            metric,
            engine,
            max_depth,
            budget,
        } => cmd_census(cli, *n, *metric, *engine, *max_depth, *budget),
        Command::Estimate {
            n,
            metric,
            seed_source,
            r_mode,
            r,
        } => cmd_estimate(cli, *n, *metric, *seed_source, *r_mode, *r),
        Command::PaperTable { id } => cmd_paper_table(cli, id),
        Command::FigureData { id, actuals } => cmd_figure_data(cli, *id, actuals.as_deref()),
        Command::Coupon {
            population,
            mode,
            draws,
            simulate,
            trials,
            seed,
        } => cmd_coupon(cli, *population, *mode, *draws, *simulate, *trials, *seed),
    }
}

fn cmd_orders(cli: &Cli, n: Option<u8>, subgroup: SubgroupArg) -> Result<Output, String> {
    let class = match subgroup {
        SubgroupArg::Full => MetricClass::Full,
        SubgroupArg::Square => MetricClass::SquareSubgroup,
    };
    let wanted: Vec<(u8, MetricClass)> = match n {
        Some(n) => vec![(n, class)],
        None => vec![
            (2, MetricClass::Full),
            (3, MetricClass::Full),
            (3, MetricClass::SquareSubgroup),
            (4, MetricClass::Full),
            (5, MetricClass::Full),
        ],
    };

    #[derive(Serialize)]
    struct OrderRow {
        n: u8,
        class: MetricClass,
        exact: String,
        approx: f64,
    }
    let mut rows = Vec::new();
    for (n, class) in wanted {
        let order = orders::group_order(n, class).map_err(|e| e.to_string())?;
        rows.push(OrderRow {
            n,
            class,
            exact: order.exact.to_string(),
            approx: order.approx(),
        });
    }

    match cli.format {
        Format::Json => {
            let meta = Metadata::new("orders");
            Ok(Output::ok(output::to_json(meta, rows)))
        }
        Format::Csv => {
            let mut body = String::from("n,class,exact,approx\n");
            for r in rows {
                let class = if r.class == MetricClass::Full {
                    "full"
                } else {
                    "square-subgroup"
                };
                writeln!(body, "{},{},{},{:.2e}", r.n, class, r.exact, r.approx).unwrap();
            }
            Ok(Output::ok(body))
        }
    }
}

fn census_options(cli: &Cli, budget: u64) -> CensusOptions {
    CensusOptions {
        budget,
        threads: cli.threads.max(1),
    }
}

fn cmd_census(
    cli: &Cli,
    n: u8,
    metric_name: MetricName,
    engine: Option<EngineArg>,
    max_depth: Option<u32>,
    budget: u64,
) -> Result<Output, String> {
    let metric = Metric::new(metric_name, n).map_err(|e| e.to_string())?;
    let opts = census_options(cli, budget);
    let report = match max_depth {
        Some(depth) => census::shallow_census(&metric, depth, &opts).map_err(|e| e.to_string())?,
        None => {
            let engine = match engine {
                Some(EngineArg::Compact) => CensusEngine::Compact,
                Some(EngineArg::Hashed) => CensusEngine::Hashed,
                None if n == 2 => CensusEngine::Compact,
                None => CensusEngine::Hashed,
            };
            census::full_census(&metric, engine, &opts).map_err(|e| e.to_string())?
        }
    };

    match cli.format {
        Format::Csv => Ok(Output::ok(output::census_csv(&report))),
        Format::Json => {
            let meta = Metadata::new("census")
                .with("n", n)
                .with("metric", metric_name)
                .with(
                    "max_depth",
                    max_depth.map_or("none".into(), |d| d.to_string()),
                )
                .with("budget", budget)
                .with("threads", cli.threads.max(1));
            Ok(Output::ok(output::to_json(meta, report)))
        }
    }
}

fn cmd_estimate(
    cli: &Cli,
    n: u8,
    metric_name: MetricName,
    seed_source: SeedSourceArg,
    r_mode: RModeArg,
    r_override: Option<f64>,
) -> Result<Output, String> {
    let source = match seed_source {
        SeedSourceArg::Builtin => SeedSource::Builtin,
        SeedSourceArg::Census => SeedSource::Census,
    };
    let mode = match r_mode {
        RModeArg::Exact => RMode::ExactRatio,
        RModeArg::Rounded => RMode::Rounded,
    };

    let report = match r_override {
        None => estimator::estimate_for(n, metric_name, source, mode).map_err(|e| e.to_string())?,
        Some(r) => {
            let metric = Metric::new(metric_name, n).map_err(|e| e.to_string())?;
            let seeds: Vec<u64> = match source {
                SeedSource::Builtin => estimator::builtin_seeds(n, metric_name)
                    .ok_or_else(|| format!("no builtin seeds for {metric_name} n={n}"))?
                    .to_vec(),
                SeedSource::Census => {
                    let depth = estimator::seed_depth(metric_name);
                    census::shallow_census(&metric, depth, &census_options(cli, 100_000_000))
                        .map_err(|e| e.to_string())?
                        .levels
                        .iter()
                        .map(|l| l.new_states)
                        .collect()
                }
            };
            let mut input =
                estimator::input_from_seeds(n, &metric, seeds, mode).map_err(|e| e.to_string())?;
            input.branching = r;
            estimator::run_estimate(&input).map_err(|e| e.to_string())?
        }
    };

    match cli.format {
        Format::Csv => Ok(Output::ok(output::estimate_csv(&report))),
        Format::Json => {
            let meta = Metadata::new("estimate")
                .with("n", n)
                .with("metric", metric_name)
                .with("seed_source", format!("{source:?}").to_lowercase())
                .with("r_mode", format!("{mode:?}"))
                .with(
                    "r_override",
                    r_override.map_or("none".into(), |r| r.to_string()),
                )
                .with("r_used", report.branching);
            Ok(Output::ok(output::to_json(meta, report)))
        }
    }
}

fn table_input(spec: &TableSpec) -> Result<EstimationInput, String> {
    let metric = Metric::new(spec.metric, spec.n).map_err(|e| e.to_string())?;
    let order = orders::census_order(spec.n, spec.metric).map_err(|e| e.to_string())?;
    Ok(EstimationInput {
        label: spec.title.to_string(),
        n_configs: order.approx(),
        branching: spec.r,
        seeds: spec.seeds.to_vec(),
        generator_count: metric.k(),
    })
}

#[derive(Serialize)]
struct CellCheck {
    t: u32,
    column: char,
    golden: f64,
    emitted: f64,
    deviation_over_n: f64,
    ok: bool,
}

#[derive(Serialize)]
struct QuotedCheck {
    t: u32,
    kind: &'static str,
    golden: f64,
    emitted: f64,
    ok: bool,
}

#[derive(Serialize)]
struct TableComparison {
    id: String,
    title: String,
    diameter_emitted: u32,
    diameter_golden: u32,
    cells: Vec<CellCheck>,
    max_deviation_over_n: f64,
    quoted: Vec<QuotedCheck>,
    pass: bool,
}

fn compare_step_table(spec: &TableSpec) -> Result<TableComparison, String> {
    let input = table_input(spec)?;
    let report = estimator::run_estimate(&input).map_err(|e| e.to_string())?;
    let n = report.n_configs;

    let mut cells = Vec::new();
    let mut max_dev = 0.0f64;
    for row in spec.rows {
        let emitted_row = report
            .row(row.t as usize)
            .ok_or_else(|| format!("table {}: no emitted row at t={}", spec.id, row.t))?;
        for (column, golden, emitted_over_n) in [
            ('S', row.s, emitted_row.s_over_n),
            ('C', row.c, emitted_row.c_over_n),
            ('T', row.tcum, emitted_row.t_over_n),
        ] {
            let check = match golden {
                Cell::Seed(v) => {
                    // seed cells must match the exact integer
                    let emitted = emitted_row.seed.map_or(emitted_over_n * n, |s| s as f64);
                    CellCheck {
                        t: row.t,
                        column,
                        golden: v as f64,
                        emitted,
                        deviation_over_n: 0.0,
                        ok: emitted_row.seed == Some(v),
                    }
                }
                Cell::Abs(v) => {
                    let emitted = emitted_over_n * n;
                    let deviation = (emitted - v).abs() / n;
                    CellCheck {
                        t: row.t,
                        column,
                        golden: v,
                        emitted,
                        deviation_over_n: deviation,
                        ok: deviation <= golden::CELL_TOLERANCE_OVER_N,
                    }
                }
                Cell::Scaled(v) => {
                    let deviation = (emitted_over_n - v).abs();
                    CellCheck {
                        t: row.t,
                        column,
                        golden: v,
                        emitted: emitted_over_n,
                        deviation_over_n: deviation,
                        ok: deviation <= golden::CELL_TOLERANCE_OVER_N,
                    }
                }
            };
            if !matches!(golden, Cell::Seed(_)) {
                max_dev = max_dev.max(check.deviation_over_n);
            }
            cells.push(check);
        }
    }

    let mut quoted = Vec::new();
    for &(t, p) in spec.completion {
        let outlook = report.outlook.iter().find(|o| o.t == t);
        let emitted = outlook.map_or(f64::NAN, |o| o.completion_probability);
        quoted.push(QuotedCheck {
            t,
            kind: "completion_probability",
            golden: p,
            emitted,
            ok: (emitted - p).abs() <= golden::PROBABILITY_TOLERANCE,
        });
    }
    for &(t, u) in spec.unseen {
        let outlook = report.outlook.iter().find(|o| o.t == t);
        let emitted = outlook.map_or(f64::NAN, |o| o.expected_unseen);
        quoted.push(QuotedCheck {
            t,
            kind: "expected_unseen",
            golden: u,
            emitted,
            ok: (emitted - u).abs() <= golden::UNSEEN_RELATIVE_TOLERANCE * u,
        });
    }

    let diameter_ok = report.predicted_diameter == spec.expected_diameter;
    let pass = diameter_ok && cells.iter().all(|c| c.ok);
    Ok(TableComparison {
        id: spec.id.to_string(),
        title: spec.title.to_string(),
        diameter_emitted: report.predicted_diameter,
        diameter_golden: spec.expected_diameter,
        cells,
        max_deviation_over_n: max_dev,
        quoted,
        pass,
    })
}

fn render_step_table(cmp: &TableComparison) -> String {
    let mut body = String::new();
    writeln!(body, "Table {}: {}", cmp.id, cmp.title).unwrap();
    writeln!(
        body,
        "{:>4} {:>3} {:>16} {:>16} {:>12}  ok",
        "t", "col", "emitted", "reference", "dev/N"
    )
    .unwrap();
    for c in &cmp.cells {
        writeln!(
            body,
            "{:>4} {:>3} {:>16.6} {:>16.6} {:>12.6}  {}",
            c.t,
            c.column,
            c.emitted,
            c.golden,
            c.deviation_over_n,
            if c.ok { "ok" } else { "OUT" }
        )
        .unwrap();
    }
    writeln!(
        body,
        "predicted diameter {} (reference {}) {}",
        cmp.diameter_emitted,
        cmp.diameter_golden,
        if cmp.diameter_emitted == cmp.diameter_golden {
            "ok"
        } else {
            "OUT"
        }
    )
    .unwrap();
    writeln!(
        body,
        "max estimated-cell deviation {:.6} N (tolerance {} N)",
        cmp.max_deviation_over_n,
        golden::CELL_TOLERANCE_OVER_N
    )
    .unwrap();
    for q in &cmp.quoted {
        writeln!(
            body,
            "{} at t={}: emitted {:.6e} reference {:.6e} {}",
            q.kind,
            q.t,
            q.emitted,
            q.golden,
            if q.ok { "ok" } else { "OUT" }
        )
        .unwrap();
    }
    writeln!(body, "status: {}", if cmp.pass { "PASS" } else { "FAIL" }).unwrap();
    body
}

#[derive(Serialize)]
struct SummaryCheck {
    label: String,
    r_emitted: f64,
    r_golden: f64,
    actual: Option<u32>,
    predicted_exact_r: u32,
    predicted_rounded_r: u32,
    predicted_golden: u32,
    closed_form_emitted: f64,
    closed_form_golden: f64,
    ok: bool,
}

fn compare_summary() -> Result<(Vec<SummaryCheck>, bool), String> {
    let mut checks = Vec::new();
    for row in &golden::SUMMARY {
        let exact =
            estimator::estimate_for(row.n, row.metric, SeedSource::Builtin, RMode::ExactRatio)
                .map_err(|e| e.to_string())?;
        let rounded =
            estimator::estimate_for(row.n, row.metric, SeedSource::Builtin, RMode::Rounded)
                .map_err(|e| e.to_string())?;
        let closed = exact.closed_form;
        let r_emitted = estimator::round_ratio(exact.branching);
        let ok = (r_emitted - row.r).abs() < 5e-3
            && exact.predicted_diameter == row.predicted
            && rounded.predicted_diameter == row.predicted
            && (closed - row.closed_form).abs() <= golden::CLOSED_FORM_TOLERANCE;
        checks.push(SummaryCheck {
            label: format!("{0}x{0}x{0} {1}", row.n, row.metric),
            r_emitted,
            r_golden: row.r,
            actual: row.actual,
            predicted_exact_r: exact.predicted_diameter,
            predicted_rounded_r: rounded.predicted_diameter,
            predicted_golden: row.predicted,
            closed_form_emitted: closed,
            closed_form_golden: row.closed_form,
            ok,
        });
    }
    let pass = checks.iter().all(|c| c.ok);
    Ok((checks, pass))
}

fn cmd_paper_table(cli: &Cli, id: &str) -> Result<Output, String> {
    if id == golden::SUMMARY_ID || id.eq_ignore_ascii_case("summary") {
        let (checks, pass) = compare_summary()?;
        let body = match cli.format {
            Format::Json => {
                let meta = Metadata::new("paper-table").with("id", golden::SUMMARY_ID);
                output::to_json(meta, &checks)
            }
            Format::Csv => {
                let mut body = String::new();
                writeln!(body, "Table {}: diameter summary", golden::SUMMARY_ID).unwrap();
                writeln!(
                    body,
                    "{:<22} {:>6} {:>7} {:>10} {:>12}  ok",
                    "cube/metric", "r", "actual", "predicted", "closed-form"
                )
                .unwrap();
                for c in &checks {
                    let actual = c.actual.map_or("-".to_string(), |a| a.to_string());
                    writeln!(
                        body,
                        "{:<22} {:>6.2} {:>7} {:>10} {:>12.1}  {}",
                        c.label,
                        c.r_emitted,
                        actual,
                        c.predicted_exact_r,
                        c.closed_form_emitted,
                        if c.ok { "ok" } else { "OUT" }
                    )
                    .unwrap();
                }
                writeln!(body, "status: {}", if pass { "PASS" } else { "FAIL" }).unwrap();
                body
            }
        };
        return Ok(Output {
            body,
            comparison_failed: !pass,
        });
    }

    let spec = golden::step_table(id).ok_or_else(|| format!("unknown table id {id:?} (I..XII)"))?;
    let cmp = compare_step_table(spec)?;
    let body = match cli.format {
        Format::Json => {
            let meta = Metadata::new("paper-table")
                .with("id", spec.id)
                .with("r", spec.r);
            output::to_json(meta, &cmp)
        }
        Format::Csv => render_step_table(&cmp),
    };
    Ok(Output {
        body,
        comparison_failed: !cmp.pass,
    })
}

fn figure_series(
    cli: &Cli,
    spec: &FigureSpec,
    actuals: Option<&std::path::Path>,
) -> Result<(Option<Vec<u64>>, Vec<(u32, f64)>), String> {
    let input = table_input(spec.table)?;
    let report = estimator::run_estimate(&input).map_err(|e| e.to_string())?;
    let predicted = estimator::predicted_new_series(&report);

    let actual = if spec.census_actual {
        if actuals.is_some() {
            return Err(format!(
                "figure {} counts its own exact series; --actuals applies to figures 6 and 7",
                spec.id
            ));
        }
        let metric = Metric::new(spec.table.metric, spec.table.n).map_err(|e| e.to_string())?;
        let engine = if spec.table.n == 2 {
            CensusEngine::Compact
        } else {
            CensusEngine::Hashed
        };
        let census = census::full_census(&metric, engine, &census_options(cli, 100_000_000))
            .map_err(|e| e.to_string())?;
        Some(census.levels.iter().map(|l| l.new_states).collect())
    } else {
        match actuals {
            None => None,
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                Some(output::parse_actual_series(&text)?)
            }
        }
    };
    Ok((actual, predicted))
}

fn cmd_figure_data(
    cli: &Cli,
    id: u32,
    actuals: Option<&std::path::Path>,
) -> Result<Output, String> {
    let spec = golden::figure(id).ok_or_else(|| format!("unknown figure id {id} (1..7)"))?;
    let (actual, predicted) = figure_series(cli, spec, actuals)?;

    match cli.format {
        Format::Csv => Ok(Output::ok(output::figure_csv(
            actual.as_deref(),
            &predicted,
        ))),
        Format::Json => {
            #[derive(Serialize)]
            struct FigureReport {
                table: String,
                actual_new: Option<Vec<u64>>,
                predicted_new: Vec<f64>,
            }
            let meta = Metadata::new("figure-data").with("id", id).with(
                "actuals",
                actuals.map_or("none".into(), |p| p.display().to_string()),
            );
            Ok(Output::ok(output::to_json(
                meta,
                FigureReport {
                    table: spec.table.id.to_string(),
                    actual_new: actual,
                    predicted_new: predicted.iter().map(|&(_, v)| v).collect(),
                },
            )))
        }
    }
}

fn cmd_coupon(
    cli: &Cli,
    population: f64,
    mode: CouponModeArg,
    draws: Option<f64>,
    simulate: bool,
    trials: u64,
    seed: u64,
) -> Result<Output, String> {
    let mode = match mode {
        CouponModeArg::Exact => coupon::Mode::Exact,
        CouponModeArg::Asymptotic => coupon::Mode::Asymptotic,
    };

    #[derive(Serialize)]
    struct CouponReport {
        population: f64,
        mode: coupon::Mode,
        expected_coverings: f64,
        expected_coverings_over_n: f64,
        coverings_stddev: f64,
        coverings_stddev_over_n: f64,
        #[serde(skip_serializing_if = "Option::is_none")]
        draws: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        completion_probability: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        expected_distinct: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        expected_unseen: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        simulation: Option<coupon::SimulationSummary>,
    }

    let expected = coupon::expected_coverings(population, mode).map_err(|e| e.to_string())?;
    let stddev = coupon::coverings_stddev(population, mode).map_err(|e| e.to_string())?;
    let mut report = CouponReport {
        population,
        mode,
        expected_coverings: expected,
        expected_coverings_over_n: expected / population,
        coverings_stddev: stddev,
        coverings_stddev_over_n: stddev / population,
        draws,
        completion_probability: None,
        expected_distinct: None,
        expected_unseen: None,
        simulation: None,
    };
    if let Some(draws) = draws {
        report.completion_probability =
            Some(coupon::completion_probability(population, draws).map_err(|e| e.to_string())?);
        report.expected_distinct =
            Some(coupon::expected_distinct(population, draws, mode).map_err(|e| e.to_string())?);
        report.expected_unseen =
            Some(coupon::expected_unseen(population, draws).map_err(|e| e.to_string())?);
    }
    if simulate {
        if population.fract() != 0.0 || population > 1e12 {
            return Err("simulation needs an integer population of practical size".into());
        }
        report.simulation = Some(
            coupon::simulate_collector(population as u64, trials, seed)
                .map_err(|e| e.to_string())?,
        );
    }

    match cli.format {
        Format::Json => {
            let meta = Metadata::new("coupon")
                .with("population", population)
                .with("trials", trials)
                .with("seed", seed);
            Ok(Output::ok(output::to_json(meta, report)))
        }
        Format::Csv => {
            let mut body = String::from("quantity,value\n");
            writeln!(body, "population,{}", report.population).unwrap();
            writeln!(body, "expected_coverings,{}", report.expected_coverings).unwrap();
            writeln!(
                body,
                "expected_coverings_over_n,{}",
                report.expected_coverings_over_n
            )
            .unwrap();
            writeln!(body, "coverings_stddev,{}", report.coverings_stddev).unwrap();
            writeln!(
                body,
                "coverings_stddev_over_n,{}",
                report.coverings_stddev_over_n
            )
            .unwrap();
            if let Some(d) = report.draws {
                writeln!(body, "draws,{d}").unwrap();
                writeln!(
                    body,
                    "completion_probability,{}",
                    report.completion_probability.unwrap()
                )
                .unwrap();
                writeln!(
                    body,
                    "expected_distinct,{}",
                    report.expected_distinct.unwrap()
                )
                .unwrap();
                writeln!(body, "expected_unseen,{}", report.expected_unseen.unwrap()).unwrap();
            }
            if let Some(sim) = &report.simulation {
                writeln!(body, "simulated_trials,{}", sim.trials).unwrap();
                writeln!(body, "simulated_mean,{}", sim.mean).unwrap();
                writeln!(body, "simulated_stddev,{}", sim.stddev).unwrap();
            }
            Ok(Output::ok(body))
        }
    }
}
