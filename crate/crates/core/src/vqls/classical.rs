use crate::decomposition::TridiagonalSpec;
use crate::error::{Result, VqlsError};
use crate::scalar::{Real, C};
use crate::statevector::StateVector;

/// Normalized `A^{−1}|b⟩` by tridiagonal forward elimination and back
/// substitution, without pivoting.
pub fn classical_solve<T: Real>(spec: &TridiagonalSpec<T>, b: &StateVector<T>) -> Result<StateVector<T>> {
    if b.n() != spec.n {
        return Err(VqlsError::DimensionMismatch { expected: spec.n, got: b.n() });
    }
    let (alpha, beta) = (C::new(spec.alpha, T::zero()), C::new(spec.beta, T::zero()));
    let rhs = b.amplitudes();
    let dim = rhs.len();
    let mut sup = Vec::with_capacity(dim);
    let mut d = Vec::with_capacity(dim);
    for i in 0..dim {
        let (pivot, prev_d) = if i == 0 {
            (alpha, C::new(T::zero(), T::zero()))
        } else {
            (alpha - beta * sup[i - 1], d[i - 1])
        };
        if pivot.norm() <= T::exact_tol() {
            return Err(VqlsError::Singular { row: i, pivot: pivot.norm().as_f64() });
        }
        sup.push(beta / pivot);
        d.push((rhs[i] - beta * prev_d) / pivot);
    }
    for i in (0..dim - 1).rev() {
        let next = d[i + 1];
        d[i] -= sup[i] * next;
    }
    StateVector::from_amplitudes(d)?.normalized()
}

/// `|⟨x_ref|x_num⟩|²` for normalized states.
pub fn fidelity<T: Real>(x_num: &StateVector<T>, x_ref: &StateVector<T>) -> Result<T> {
    for s in [x_num, x_ref] {
        if !s.is_normalized(T::pipeline_tol()) {
            return Err(VqlsError::NotNormalized(s.norm_sqr().as_f64()));
        }
    }
    Ok(x_ref.inner_product(x_num)?.norm_sqr().min(T::one()))
}
