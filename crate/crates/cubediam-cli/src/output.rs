//! Report serialization: stable CSV schemas and JSON documents with a
//! metadata block, so identical invocations produce identical bytes.

use cubediam::census::CensusReport;
use cubediam::estimator::{EstimateReport, ABS_DISPLAY_LIMIT};
use serde::Serialize;
use std::collections::BTreeMap;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Inputs echoed into every JSON document.
#[derive(Serialize)]
pub struct Metadata {
    pub command: &'static str,
    pub inputs: BTreeMap<&'static str, String>,
    pub version: &'static str,
}

impl Metadata {
    pub fn new(command: &'static str) -> Metadata {
        Metadata {
            command,
            inputs: BTreeMap::new(),
            version: VERSION,
        }
    }

    pub fn with(mut self, key: &'static str, value: impl ToString) -> Metadata {
        self.inputs.insert(key, value.to_string());
        self
    }
}

#[derive(Serialize)]
pub struct Document<T: Serialize> {
    pub metadata: Metadata,
    pub report: T,
}

pub fn to_json<T: Serialize>(metadata: Metadata, report: T) -> String {
    let mut s = serde_json::to_string_pretty(&Document { metadata, report })
        .expect("reports serialize without error");
    s.push('\n');
    s
}

pub fn census_csv(report: &CensusReport) -> String {
    report.to_csv()
}

/// Columns: step, the three series in units of N, and absolute counts where
/// they are exactly displayable (seed rows print their exact integers).
pub fn estimate_csv(report: &EstimateReport) -> String {
    let mut out = String::from("t,s_over_n,c_over_n,t_over_n,s_abs,c_abs,t_abs\n");
    for row in &report.rows {
        let abs = |over_n: f64, seed: Option<u64>| -> String {
            match seed {
                Some(v) => v.to_string(),
                None => {
                    let v = over_n * report.n_configs;
                    if v < ABS_DISPLAY_LIMIT {
                        format!("{v:.1}")
                    } else {
                        String::new()
                    }
                }
            }
        };
        out.push_str(&format!(
            "{},{:.6},{:.6},{:.6},{},{},{}\n",
            row.t,
            row.s_over_n,
            row.c_over_n,
            row.t_over_n,
            abs(row.s_over_n, row.seed),
            abs(row.c_over_n, row.seed),
            abs(row.t_over_n, None),
        ));
    }
    out
}

/// Figure series: per-step new configurations, actual next to predicted.
/// Cells are left empty where a series does not reach.
pub fn figure_csv(actual: Option<&[u64]>, predicted: &[(u32, f64)]) -> String {
    let mut out = String::from("t,actual_new,predicted_new\n");
    let rows = predicted.len().max(actual.map_or(0, |a| a.len()));
    for t in 0..rows {
        let a = actual
            .and_then(|a| a.get(t))
            .map(|v| v.to_string())
            .unwrap_or_default();
        let p = predicted
            .get(t)
            .map(|(_, v)| format!("{v:.4e}"))
            .unwrap_or_default();
        out.push_str(&format!("{t},{a},{p}\n"));
    }
    out
}

/// Parses an external actual-series CSV with columns `t,new_states` and an
/// optional header row. Steps must be contiguous from 0.
pub fn parse_actual_series(text: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (lineno == 0 && line.starts_with('t')) {
            continue;
        }
        let mut fields = line.split(',');
        let (t, v) = (fields.next(), fields.next());
        let parse = |s: Option<&str>| {
            s.and_then(|x| x.trim().parse::<u64>().ok()).ok_or_else(|| {
                format!("line {}: expected `t,new_states`, got {line:?}", lineno + 1)
            })
        };
        let t = parse(t)?;
        let v = parse(v)?;
        if t as usize != out.len() {
            return Err(format!(
                "line {}: steps must be contiguous from 0, got t={t}",
                lineno + 1
            ));
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err("actual-series file contains no data rows".into());
    }
    Ok(out)
}
