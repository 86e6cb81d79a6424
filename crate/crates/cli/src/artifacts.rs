//! Run artifacts: `trace.csv`, `summary.json`, `config.txt`, `aggregate.csv`.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), which
//! round-trips every `f64`.

use std::fs;
use std::path::Path;

use serde::Serialize;
use vqls_core::vqls::OptimizationTrace;

use crate::CliError;

pub const TRACE_FILE: &str = "trace.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const CONFIG_FILE: &str = "config.txt";
pub const AGGREGATE_FILE: &str = "aggregate.csv";

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn trace_csv(trace: &OptimizationTrace<f64>, params: usize) -> String {
    let mut s = String::from("iter,cost,fidelity");
    for k in 0..params {
        s.push_str(&format!(",theta_{k}"));
    }
    s.push('\n');
    for it in &trace.iterations {
        s.push_str(&format!("{},{},{}", it.index, fmt_f64(it.cost), fmt_f64(it.fidelity)));
        for t in it.params.theta() {
            s.push(',');
            s.push_str(&fmt_f64(*t));
        }
        s.push('\n');
    }
    s
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub status: &'static str,
    pub abort_reason: Option<String>,
    pub seed: u64,
    pub final_cost: Option<f64>,
    pub final_fidelity: f64,
    pub best_fidelity: f64,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
    pub term_count: usize,
    pub max_depth: usize,
    pub max_evals: usize,
    pub tol: f64,
}

impl RunSummary {
    pub fn new(
        trace: &OptimizationTrace<f64>,
        abort_reason: Option<String>,
        term_count: usize,
        max_depth: usize,
        max_evals: usize,
        tol: f64,
    ) -> Self {
        RunSummary {
            status: if abort_reason.is_some() { "aborted" } else { "ok" },
            abort_reason,
            seed: trace.seed,
            final_cost: trace.final_cost.is_finite().then_some(trace.final_cost),
            final_fidelity: trace.final_fidelity,
            best_fidelity: trace.best_fidelity(),
            iterations: trace.iterations.len(),
            evaluations: trace.evaluations,
            converged: trace.converged,
            term_count,
            max_depth,
            max_evals,
            tol,
        }
    }
}

pub fn write(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| CliError::io(&path, e))
}

pub fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

pub fn summary_json(summary: &RunSummary) -> String {
    let mut s = serde_json::to_string_pretty(summary).expect("summary serializes");
    s.push('\n');
    s
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

/// One row per seed in the given order, then a `median` row.
pub fn aggregate_csv(rows: &[RunSummary]) -> String {
    let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
    let mut s = String::from("seed,status,final_cost,final_fidelity,best_fidelity,iterations,evaluations\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.seed,
            r.status,
            opt(r.final_cost),
            fmt_f64(r.final_fidelity),
            fmt_f64(r.best_fidelity),
            r.iterations,
            r.evaluations
        ));
    }
    let costs: Vec<f64> = rows.iter().filter_map(|r| r.final_cost).collect();
    let col = |f: fn(&RunSummary) -> f64| median(rows.iter().map(f).collect());
    s.push_str(&format!(
        "median,,{},{},{},{},{}\n",
        if costs.is_empty() { String::new() } else { fmt_f64(median(costs)) },
        fmt_f64(col(|r| r.final_fidelity)),
        fmt_f64(col(|r| r.best_fidelity)),
        col(|r| r.iterations as f64),
        col(|r| r.evaluations as f64),
    ));
    s
}
