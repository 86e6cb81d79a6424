use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

use crate::error::{Result, VqlsError};
use crate::scalar::Real;
use crate::statevector::StateVector;

use super::classical::{classical_solve, fidelity};
use super::cost::{cost_with, CostKind, CostOptions, OverlapForm};
use super::hadamard::EvalMode;
use super::optimizer::{nelder_mead, NelderMeadConfig, NelderMeadError};
use super::{AnsatzSpec, Params, ProblemSpec};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig<T> {
    pub tol: T,
    pub max_evals: usize,
    pub initial_step: T,
    /// Seeds the initial parameters, drawn uniformly from `[0, 2π)`.
    pub seed: u64,
    pub form: OverlapForm,
}

impl<T: Real> OptimizerConfig<T> {
    /// Tolerance 1e−6 in exact mode and 1e−5 with shots, 500 evaluations.
    pub fn defaults(mode: EvalMode, seed: u64) -> Self {
        let tol = match mode {
            EvalMode::Exact => 1e-6,
            EvalMode::Shots { .. } => 1e-5,
        };
        OptimizerConfig {
            tol: T::lit(tol),
            max_evals: 500,
            initial_step: T::lit(0.5),
            seed,
            form: OverlapForm::Collapsed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Iterate<T> {
    pub index: usize,
    pub params: Params<T>,
    pub cost: T,
    /// Fidelity of the exact ansatz state against the classical solution.
    pub fidelity: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationTrace<T> {
    pub iterations: Vec<Iterate<T>>,
    pub final_params: Params<T>,
    pub final_cost: T,
    pub final_fidelity: T,
    pub evaluations: usize,
    pub converged: bool,
    pub seed: u64,
}

impl<T: Real> OptimizationTrace<T> {
    pub fn best_fidelity(&self) -> T {
        self.iterations.iter().map(|it| it.fidelity).fold(self.final_fidelity, T::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OptimizeError<T> {
    /// Bad inputs; nothing was evaluated.
    Setup(VqlsError),
    /// The optimizer stopped early; `trace` holds the accepted iterates so far.
    Abort { reason: String, trace: Box<OptimizationTrace<T>> },
}

impl<T> std::fmt::Display for OptimizeError<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OptimizeError::Setup(e) => write!(f, "{e}"),
            OptimizeError::Abort { reason, trace } => {
                write!(f, "optimizer aborted after {} evaluations: {reason}", trace.evaluations)
            }
        }
    }
}

impl<T: std::fmt::Debug> std::error::Error for OptimizeError<T> {}

impl<T> From<VqlsError> for OptimizeError<T> {
    fn from(e: VqlsError) -> Self {
        OptimizeError::Setup(e)
    }
}

pub fn initial_params<T: Real>(ansatz: &AnsatzSpec, seed: u64) -> Params<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let theta = (0..ansatz.parameter_count()).map(|_| T::lit(rng.random_range(0.0..TAU))).collect();
    Params::new(theta).expect("finite draws")
}

pub fn optimize<T: Real>(
    prob: &ProblemSpec<T>,
    ansatz: &AnsatzSpec,
    kind: CostKind,
    mode: EvalMode,
    cfg: &OptimizerConfig<T>,
) -> std::result::Result<OptimizationTrace<T>, OptimizeError<T>> {
    if cfg.max_evals == 0 {
        return Err(VqlsError::InvalidArgument("max_evals must be >= 1".into()).into());
    }
    let x_ref = classical_solve(prob.spec(), &prob.b_state()?)?;
    let state_fidelity = |p: &Params<T>| -> Result<T> {
        let x = StateVector::new_zero_state(ansatz.n())?.apply_circuit(&ansatz.circuit(p)?)?;
        fidelity(&x, &x_ref)
    };
    let start = initial_params(ansatz, cfg.seed);
    // surface setup errors before the optimizer runs
    ansatz.circuit(&start)?;

    let mut eval = 0u64;
    let objective = |theta: &[T]| -> Result<T> {
        let opts = CostOptions { kind, mode, form: cfg.form, eval };
        eval += 1;
        Ok(cost_with(prob, ansatz, &Params::new(theta.to_vec())?, &opts)?.value)
    };
    let mut iterations = Vec::new();
    let mut observer_err = None;
    let nm = NelderMeadConfig { tol: cfg.tol, max_evals: cfg.max_evals, initial_step: cfg.initial_step };
    let outcome = nelder_mead(objective, start.theta(), &nm, |index, best, cost| {
        let params = Params::new(best.to_vec()).expect("finite iterate");
        match state_fidelity(&params) {
            Ok(fidelity) => iterations.push(Iterate { index, params, cost, fidelity }),
            Err(e) => observer_err = observer_err.take().or(Some(e)),
        }
    });
    if let Some(e) = observer_err {
        return Err(e.into());
    }
    match outcome {
        Ok(out) => {
            let final_params = Params::new(out.best)?;
            let final_fidelity = state_fidelity(&final_params)?;
            Ok(OptimizationTrace {
                iterations,
                final_params,
                final_cost: out.best_value,
                final_fidelity,
                evaluations: out.evaluations,
                converged: out.converged,
                seed: cfg.seed,
            })
        }
        Err(e) => {
            let (reason, evaluations) = match e {
                NelderMeadError::Objective(e) => (e.to_string(), eval as usize),
                NelderMeadError::NonFinite { evaluations } => ("non-finite cost".to_string(), evaluations),
            };
            let last = iterations.last().cloned();
            let (final_params, final_cost, final_fidelity) = match last {
                Some(it) => (it.params, it.cost, it.fidelity),
                None => (start.clone(), T::nan(), state_fidelity(&start)?),
            };
            let trace = OptimizationTrace {
                iterations,
                final_params,
                final_cost,
                final_fidelity,
                evaluations,
                converged: false,
                seed: cfg.seed,
            };
            Err(OptimizeError::Abort { reason, trace: Box::new(trace) })
        }
    }
}
