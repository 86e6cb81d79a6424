//! Variational solution of `A|x⟩ ∝ |b⟩`: ansatz, global cost, Hadamard-test
//! sampling, Nelder–Mead driver and the classical reference solution.

mod ansatz;
mod classical;
mod cost;
mod hadamard;
mod metrics;
mod optimizer;
mod problem;
mod solver;

pub use ansatz::{AnsatzKind, AnsatzSpec, Params};
pub use classical::{classical_solve, fidelity};
pub use cost::{
    cost, cost_with, hamiltonian_global, CostKind, CostOptions, CostReport, OverlapForm, DEGENERATE_NORM_SQ,
    MAX_HAMILTONIAN_QUBITS,
};
pub use hadamard::{
    estimate_overlap_keyed, estimate_overlap_re_im, estimate_part, hadamard_test_circuit, hadamard_test_p0,
    sample_hadamard_estimate, EvalMode, Part, StreamKey,
};
pub use metrics::{cost_circuits, depth_report, DepthReport};
pub use optimizer::{nelder_mead, NelderMeadConfig, NelderMeadError, NelderMeadOutcome};
pub use problem::ProblemSpec;
pub use solver::{initial_params, optimize, Iterate, OptimizationTrace, OptimizeError, OptimizerConfig};
