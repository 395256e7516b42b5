//! Browser bindings for the demo page: diameter estimates, live censuses of
//! the enumerable graphs, and coupon-collector curves, all returned as JSON
//! strings for the page script to plot.
//!
//! The exported functions are thin wrappers over plain-Rust internals so the
//! crate stays testable on native targets, where `JsValue` cannot exist.

use cubediam::census::{self, CensusEngine, CensusOptions};
use cubediam::coupon::{self, Mode};
use cubediam::cube::{Metric, MetricName};
use cubediam::estimator::{self, RMode, SeedSource};
use wasm_bindgen::prelude::*;

fn parse_metric(name: &str) -> Result<MetricName, String> {
    name.parse().map_err(|e: cubediam::Error| e.to_string())
}

/// Metric names defined for a cube size, as a JSON array.
#[wasm_bindgen]
pub fn metrics_for(n: u8) -> String {
    let names: Vec<&str> = MetricName::ALL
        .into_iter()
        .filter(|&m| Metric::new(m, n).is_ok())
        .map(|m| m.as_str())
        .collect();
    serde_json::to_string(&names).expect("serializes")
}

/// Whether the metric's whole graph is small enough to census in the page.
#[wasm_bindgen]
pub fn census_feasible(n: u8, metric: &str) -> bool {
    matches!((n, metric), (2, _) | (3, "square"))
}

/// Diameter estimate from the embedded exact seed levels. `r_mode` is
/// `"exact"` or `"rounded"`.
#[wasm_bindgen]
pub fn estimate(n: u8, metric: &str, r_mode: &str) -> Result<String, JsValue> {
    estimate_impl(n, metric, r_mode).map_err(|e| JsValue::from_str(&e))
}

/// Full census of an enumerable graph (all 2x2x2 metrics and the 3x3x3
/// square subgroup). Takes a few seconds for the 3.7M-state spaces.
#[wasm_bindgen]
pub fn census(n: u8, metric: &str) -> Result<String, JsValue> {
    census_impl(n, metric).map_err(|e| JsValue::from_str(&e))
}

/// Exact census down to `max_depth` only, for the graphs too large to
/// exhaust.
#[wasm_bindgen]
pub fn shallow_census(n: u8, metric: &str, max_depth: u32) -> Result<String, JsValue> {
    shallow_census_impl(n, metric, max_depth).map_err(|e| JsValue::from_str(&e))
}

/// Covering statistics for a population of `n_configs`, with the completion
/// probability and unseen-count curves sampled at `points` draws values up
/// to `t_max_over_n * N`.
#[wasm_bindgen]
pub fn coupon_curve(n_configs: f64, t_max_over_n: f64, points: u32) -> Result<String, JsValue> {
    coupon_curve_impl(n_configs, t_max_over_n, points).map_err(|e| JsValue::from_str(&e))
}

#[derive(serde::Serialize)]
struct EstimatePayload {
    report: estimator::EstimateReport,
    predicted_new: Vec<f64>,
}

fn estimate_impl(n: u8, metric: &str, r_mode: &str) -> Result<String, String> {
    let metric = parse_metric(metric)?;
    let mode = match r_mode {
        "rounded" => RMode::Rounded,
        "exact" => RMode::ExactRatio,
        other => return Err(format!("unknown r mode {other:?}")),
    };
    let report =
        estimator::estimate_for(n, metric, SeedSource::Builtin, mode).map_err(|e| e.to_string())?;
    let predicted_new = estimator::predicted_new_series(&report)
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    serde_json::to_string(&EstimatePayload {
        report,
        predicted_new,
    })
    .map_err(|e| e.to_string())
}

fn census_impl(n: u8, metric: &str) -> Result<String, String> {
    let metric = Metric::new(parse_metric(metric)?, n).map_err(|e| e.to_string())?;
    let engine = if n == 2 {
        CensusEngine::Compact
    } else {
        CensusEngine::Hashed
    };
    let report = census::full_census(&metric, engine, &CensusOptions::default())
        .map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn shallow_census_impl(n: u8, metric: &str, max_depth: u32) -> Result<String, String> {
    let metric = Metric::new(parse_metric(metric)?, n).map_err(|e| e.to_string())?;
    let report = census::shallow_census(&metric, max_depth, &CensusOptions::default())
        .map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[derive(serde::Serialize)]
struct CouponPayload {
    expected_over_n: f64,
    stddev_over_n: f64,
    /// Sample points `(draws/N, completion probability, unseen count)`.
    curve: Vec<(f64, f64, f64)>,
}

fn coupon_curve_impl(n_configs: f64, t_max_over_n: f64, points: u32) -> Result<String, String> {
    let as_str = |e: cubediam::Error| e.to_string();
    let expected = coupon::expected_coverings(n_configs, Mode::Asymptotic).map_err(as_str)?;
    let stddev = coupon::coverings_stddev(n_configs, Mode::Asymptotic).map_err(as_str)?;
    let points = points.clamp(2, 10_000);
    let mut curve = Vec::with_capacity(points as usize);
    for i in 0..points {
        let tau = t_max_over_n * i as f64 / (points - 1) as f64;
        let p = coupon::completion_probability(n_configs, tau * n_configs).map_err(as_str)?;
        let unseen = coupon::expected_unseen(n_configs, tau * n_configs).map_err(as_str)?;
        curve.push((tau, p, unseen));
    }
    serde_json::to_string(&CouponPayload {
        expected_over_n: expected / n_configs,
        stddev_over_n: stddev / n_configs,
        curve,
    })
    .map_err(|e| e.to_string())
}
