//! Global cost `C_G = 1 − |⟨b|ψ⟩|² / ⟨ψ|ψ⟩` with `|ψ⟩ = A|x(θ)⟩`.
//!
//! With `A = Σ c_l A_l`:
//! * `⟨ψ|ψ⟩ = Σ_{l,l'} c_l* c_l' ⟨x|A_l† A_l'|x⟩`, where the diagonal terms are
//!   1 and the off-diagonal pairs combine as `2 Re(c_l* c_l' z_ll')`;
//! * `|⟨b|ψ⟩|² = |Σ_l c_l γ_l|²` with `γ_l = ⟨0|B† A_l V(θ)|0⟩`.

use crate::decomposition::assemble_tridiagonal;
use crate::error::{Result, VqlsError};
use crate::gates::Circuit;
use crate::matrix::DenseMatrix;
use crate::scalar::{Real, C};
use crate::statevector::StateVector;

use super::hadamard::{estimate_part, EvalMode, Part, StreamKey};
use super::{AnsatzSpec, Params, ProblemSpec};

/// Largest register for which `hamiltonian_global` builds the dense matrix.
pub const MAX_HAMILTONIAN_QUBITS: usize = 8;

/// `⟨ψ|ψ⟩` below this is treated as a vanishing state in normalized mode.
pub const DEGENERATE_NORM_SQ: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CostKind {
    Normalized,
    /// `⟨ψ|ψ⟩ · C_G = ⟨ψ|ψ⟩ − |⟨b|ψ⟩|²`.
    NonNormalized,
}

/// How `|⟨b|ψ⟩|²` is assembled from overlap estimates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OverlapForm {
    /// `|Σ_l c_l γ_l|²`, one estimate per `γ_l`.
    #[default]
    Collapsed,
    /// `Σ_{l,l'} c_l c_l'* γ_l γ_l'*`, with both factors estimated afresh
    /// for every pair.
    DoubleSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostOptions {
    pub kind: CostKind,
    pub mode: EvalMode,
    pub form: OverlapForm,
    /// Evaluation counter; selects the random streams in shots mode.
    pub eval: u64,
}

impl CostOptions {
    pub fn new(kind: CostKind, mode: EvalMode) -> Self {
        CostOptions { kind, mode, form: OverlapForm::Collapsed, eval: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostReport<T> {
    pub value: T,
    pub psi_norm_sq: T,
    pub overlap_sq: T,
    /// `γ_l` in decomposition order.
    pub per_term_overlaps: Vec<C<T>>,
    pub shots_used: u64,
}

pub fn cost<T: Real>(
    prob: &ProblemSpec<T>,
    ansatz: &AnsatzSpec,
    params: &Params<T>,
    kind: CostKind,
    mode: EvalMode,
) -> Result<CostReport<T>> {
    cost_with(prob, ansatz, params, &CostOptions::new(kind, mode))
}

pub fn cost_with<T: Real>(
    prob: &ProblemSpec<T>,
    ansatz: &AnsatzSpec,
    params: &Params<T>,
    opts: &CostOptions,
) -> Result<CostReport<T>> {
    if ansatz.n() != prob.n() {
        return Err(VqlsError::DimensionMismatch { expected: prob.n(), got: ansatz.n() });
    }
    let v = ansatz.circuit(params)?;
    let (psi_norm_sq, overlap_sq, per_term_overlaps, shots_used) = match opts.mode {
        EvalMode::Exact => exact_parts(prob, &v, opts.form)?,
        EvalMode::Shots { count, .. } => {
            let mut s = Sampler { mode: opts.mode, eval: opts.eval, count, used: 0 };
            let (p, o, g) = s.parts(prob, &v, opts.form)?;
            (p, o, g, s.used)
        }
    };
    let value = match opts.kind {
        CostKind::NonNormalized => psi_norm_sq - overlap_sq,
        CostKind::Normalized => {
            if psi_norm_sq <= T::lit(DEGENERATE_NORM_SQ) {
                return Err(VqlsError::DegenerateState(psi_norm_sq.as_f64()));
            }
            T::one() - overlap_sq / psi_norm_sq
        }
    };
    Ok(CostReport { value, psi_norm_sq, overlap_sq, per_term_overlaps, shots_used })
}

fn psi_from_pairs<T: Real>(coeffs: &[C<T>], mut z: impl FnMut(usize, usize) -> Result<C<T>>) -> Result<T> {
    let mut acc: T = coeffs.iter().map(|c| c.norm_sqr()).sum();
    for l in 0..coeffs.len() {
        for m in l + 1..coeffs.len() {
            let w = coeffs[l].conj() * coeffs[m];
            acc += T::lit(2.0) * (w * z(l, m)?).re;
        }
    }
    Ok(acc)
}

fn overlap_collapsed<T: Real>(coeffs: &[C<T>], gammas: &[C<T>]) -> T {
    coeffs.iter().zip(gammas).map(|(c, g)| c * g).sum::<C<T>>().norm_sqr()
}

fn exact_parts<T: Real>(
    prob: &ProblemSpec<T>,
    v: &Circuit<T>,
    form: OverlapForm,
) -> Result<(T, T, Vec<C<T>>, u64)> {
    let terms = prob.decomposition().terms();
    let coeffs: Vec<C<T>> = terms.iter().map(|(c, _)| *c).collect();
    let x = StateVector::new_zero_state(prob.n())?.apply_circuit(v)?;
    let b = prob.b_state()?;
    let ax = terms
        .iter()
        .map(|(_, t)| x.apply_circuit(&t.circuit()))
        .collect::<Result<Vec<_>>>()?;
    let gammas = ax.iter().map(|s| b.inner_product(s)).collect::<Result<Vec<_>>>()?;
    let psi = psi_from_pairs(&coeffs, |l, m| ax[l].inner_product(&ax[m]))?;
    let overlap = match form {
        OverlapForm::Collapsed => overlap_collapsed(&coeffs, &gammas),
        OverlapForm::DoubleSum => double_sum(&coeffs, |l, m| Ok((gammas[l], gammas[m])))?,
    };
    Ok((psi, overlap, gammas, 0))
}

fn double_sum<T: Real>(
    coeffs: &[C<T>],
    mut pair: impl FnMut(usize, usize) -> Result<(C<T>, C<T>)>,
) -> Result<T> {
    let mut acc = C::new(T::zero(), T::zero());
    for l in 0..coeffs.len() {
        for m in 0..coeffs.len() {
            let (gl, gm) = pair(l, m)?;
            acc += coeffs[l] * coeffs[m].conj() * gl * gm.conj();
        }
    }
    Ok(acc.re)
}

struct Sampler {
    mode: EvalMode,
    eval: u64,
    count: u64,
    used: u64,
}

impl Sampler {
    fn part<T: Real>(&mut self, prep: &Circuit<T>, u: &Circuit<T>, part: Part, term: u64) -> Result<T> {
        self.used += self.count;
        estimate_part(prep, u, part, self.mode, StreamKey::new(self.eval, term))
    }

    fn both<T: Real>(&mut self, prep: &Circuit<T>, u: &Circuit<T>, term: u64) -> Result<C<T>> {
        Ok(C::new(self.part(prep, u, Part::Re, term)?, self.part(prep, u, Part::Im, term)?))
    }

    /// Stream ids: `l·L + m` for `⟨x|A_l†A_m|x⟩`, `L² + l` for `γ_l`, and
    /// `L² + L + 2(l·L + m) + {0, 1}` for the two factors of a double-sum pair.
    fn parts<T: Real>(
        &mut self,
        prob: &ProblemSpec<T>,
        v: &Circuit<T>,
        form: OverlapForm,
    ) -> Result<(T, T, Vec<C<T>>)> {
        let terms = prob.decomposition().terms();
        let len = terms.len() as u64;
        let coeffs: Vec<C<T>> = terms.iter().map(|(c, _)| *c).collect();
        let circuits: Vec<Circuit<T>> = terms.iter().map(|(_, t)| t.circuit()).collect();

        let psi = psi_from_pairs(&coeffs, |l, m| {
            let mut u = circuits[l].inverse();
            u.append(&circuits[m])?;
            let term = l as u64 * len + m as u64;
            let re = self.part(v, &u, Part::Re, term)?;
            // the imaginary part only matters for complex c_l* c_m
            let im = if (coeffs[l].conj() * coeffs[m]).im == T::zero() {
                T::zero()
            } else {
                self.part(v, &u, Part::Im, term)?
            };
            Ok(C::new(re, im))
        })?;

        let empty = Circuit::new(prob.n())?;
        let b_dag = prob.b_prep().inverse();
        let gamma_circuit = |l: usize| -> Result<Circuit<T>> {
            let mut u = v.clone();
            u.append(&circuits[l])?.append(&b_dag)?;
            Ok(u)
        };
        let base = len * len;
        let (overlap, gammas) = match form {
            OverlapForm::Collapsed => {
                let gammas = (0..terms.len())
                    .map(|l| self.both(&empty, &gamma_circuit(l)?, base + l as u64))
                    .collect::<Result<Vec<_>>>()?;
                (overlap_collapsed(&coeffs, &gammas), gammas)
            }
            OverlapForm::DoubleSum => {
                let mut diag = vec![C::new(T::zero(), T::zero()); terms.len()];
                let overlap = double_sum(&coeffs, |l, m| {
                    let id = base + len + 2 * (l as u64 * len + m as u64);
                    let gl = self.both(&empty, &gamma_circuit(l)?, id)?;
                    let gm = self.both(&empty, &gamma_circuit(m)?, id + 1)?;
                    if l == m {
                        diag[l] = gl;
                    }
                    Ok((gl, gm))
                })?;
                (overlap, diag)
            }
        };
        Ok((psi, overlap, gammas))
    }
}

/// `H_G = A† (I − |b⟩⟨b|) A`, from the assembled tridiagonal matrix.
pub fn hamiltonian_global<T: Real>(prob: &ProblemSpec<T>) -> Result<DenseMatrix<T>> {
    let n = prob.n();
    if n > MAX_HAMILTONIAN_QUBITS {
        return Err(VqlsError::Size { n, min: 1, max: MAX_HAMILTONIAN_QUBITS });
    }
    let a = assemble_tridiagonal(prob.spec())?;
    let b = prob.b_state()?;
    let amps = b.amplitudes();
    let projector = DenseMatrix::from_fn(a.dim(), |r, c| {
        let delta = if r == c { T::one() } else { T::zero() };
        C::new(delta, T::zero()) - amps[r] * amps[c].conj()
    })?;
    a.adjoint().try_mul(&projector)?.try_mul(&a)
}
