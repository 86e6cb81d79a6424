use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use vqls_core::decomposition::{decompose, format_coefficient};
use vqls_core::vqls::{depth_report, initial_params, optimize, OptimizeError, ProblemSpec};
use vqls_core::{Scheme, TridiagonalSpec, VqlsError};

use crate::artifacts::{self, RunSummary};
use crate::config::ExperimentConfig;
use crate::CliError;

fn spec(cfg: &ExperimentConfig) -> Result<TridiagonalSpec<f64>, CliError> {
    Ok(TridiagonalSpec::new(cfg.n, cfg.alpha, cfg.beta)?)
}

fn problem(cfg: &ExperimentConfig, scheme: Scheme) -> Result<ProblemSpec<f64>, CliError> {
    Ok(ProblemSpec::new(spec(cfg)?, scheme)?)
}

pub fn decomp(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let d = decompose(&spec(cfg)?, cfg.scheme)?;
    for (c, t) in d.terms() {
        println!("{} {t}", format_coefficient(*c));
    }
    println!("# terms {}", d.len());
    println!("# residual {:e}", d.residual());
    Ok(())
}

pub fn depth(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let ansatz = cfg.ansatz_spec()?;
    let params = initial_params(&ansatz, cfg.seed);
    spec(cfg)?;
    for scheme in [Scheme::Pauli, Scheme::Multiqubit] {
        let prob = match problem(cfg, scheme) {
            Err(CliError::Usage(msg)) if scheme == Scheme::Multiqubit && cfg.n < 2 => {
                println!("{scheme}: unavailable ({msg})");
                continue;
            }
            other => other?,
        };
        let r = depth_report(&prob, &ansatz, &params)?;
        println!(
            "{scheme}: terms={} circuits={} max_depth={} total_gates={} term_cx={}",
            r.term_count, r.circuit_count, r.max_depth, r.total_gates, r.term_cx
        );
    }
    Ok(())
}

/// Runs one optimization and writes its artifacts into `dir`. The returned
/// flag is true when the optimizer aborted.
fn run_into(cfg: &ExperimentConfig, dir: &Path) -> Result<(RunSummary, bool), CliError> {
    let prob = problem(cfg, cfg.scheme)?;
    let ansatz = cfg.ansatz_spec()?;
    let opt = cfg.optimizer()?;
    let mode = cfg.eval_mode()?;
    artifacts::ensure_dir(dir)?;
    artifacts::write(dir, artifacts::CONFIG_FILE, &cfg.dump(false))?;

    let started = Instant::now();
    let (trace, abort) = match optimize(&prob, &ansatz, cfg.cost, mode, &opt) {
        Ok(t) => (t, None),
        Err(OptimizeError::Abort { reason, trace }) => (*trace, Some(reason)),
        Err(OptimizeError::Setup(e)) => return Err(e.into()),
    };
    let elapsed = started.elapsed();
    let max_depth = depth_report(&prob, &ansatz, &trace.final_params)?.max_depth;
    let aborted = abort.is_some();
    let summary = RunSummary::new(
        &trace,
        abort,
        prob.decomposition().len(),
        max_depth,
        cfg.max_evals,
        cfg.resolved_tol(),
    );
    artifacts::write(dir, artifacts::TRACE_FILE, &artifacts::trace_csv(&trace, ansatz.parameter_count()))?;
    artifacts::write(dir, artifacts::SUMMARY_FILE, &artifacts::summary_json(&summary))?;
    // timing stays out of the artifacts so reruns are byte-identical
    eprintln!("seed {}: wall time {:.3} s", cfg.seed, elapsed.as_secs_f64());
    Ok((summary, aborted))
}

fn report(s: &RunSummary) {
    let cost = s.final_cost.map(artifacts::fmt_f64).unwrap_or_else(|| "n/a".into());
    println!(
        "seed={} status={} final_cost={cost} final_fidelity={} best_fidelity={} evaluations={}",
        s.seed,
        s.status,
        artifacts::fmt_f64(s.final_fidelity),
        artifacts::fmt_f64(s.best_fidelity),
        s.evaluations
    );
}

pub fn run(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let (summary, aborted) = run_into(cfg, &cfg.resolved_out())?;
    report(&summary);
    if aborted {
        return Err(CliError::Abort(summary.abort_reason.unwrap_or_default()));
    }
    Ok(())
}

pub fn sweep(cfg: &ExperimentConfig, seeds: usize) -> Result<(), CliError> {
    if seeds == 0 {
        return Err(CliError::Usage("--seeds must be >= 1".into()));
    }
    let root = cfg.resolved_out();
    artifacts::ensure_dir(&root)?;
    artifacts::write(&root, artifacts::CONFIG_FILE, &cfg.dump(false))?;
    let seeds: Vec<u64> = (0..seeds as u64)
        .map(|k| cfg.seed.checked_add(k).ok_or_else(|| CliError::Usage("seed range overflows u64".into())))
        .collect::<Result<_, _>>()?;
    let results: Vec<Result<(RunSummary, bool), CliError>> = seeds
        .par_iter()
        .map(|&s| run_into(&cfg.with_seed(s), &root.join(format!("seed-{s}"))))
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut aborted = Vec::new();
    for r in results {
        let (summary, abort) = r?;
        if abort {
            aborted.push(summary.seed);
        }
        report(&summary);
        rows.push(summary);
    }
    artifacts::write(&root, artifacts::AGGREGATE_FILE, &artifacts::aggregate_csv(&rows))?;
    if !aborted.is_empty() {
        return Err(CliError::Abort(format!("optimizer aborted for seeds {aborted:?}")));
    }
    Ok(())
}

impl From<VqlsError> for CliError {
    fn from(e: VqlsError) -> Self {
        CliError::Usage(e.to_string())
    }
}
