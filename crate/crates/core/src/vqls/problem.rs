use crate::decomposition::{decompose, Decomposition, Scheme, TridiagonalSpec};
use crate::error::{Result, VqlsError};
use crate::gates::{Circuit, Gate};
use crate::scalar::Real;
use crate::statevector::StateVector;

/// A linear system `A|x⟩ ∝ |b⟩` with `A` given by its unitary decomposition
/// and `|b⟩ = B|0⟩`, `B = H` on every qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec<T> {
    spec: TridiagonalSpec<T>,
    decomposition: Decomposition<T>,
    b_prep: Circuit<T>,
}

impl<T: Real> ProblemSpec<T> {
    pub fn new(spec: TridiagonalSpec<T>, scheme: Scheme) -> Result<Self> {
        let decomposition = decompose(&spec, scheme)?;
        Self::with_decomposition(spec, decomposition)
    }

    pub fn with_decomposition(spec: TridiagonalSpec<T>, decomposition: Decomposition<T>) -> Result<Self> {
        if decomposition.n() != spec.n {
            return Err(VqlsError::DimensionMismatch { expected: spec.n, got: decomposition.n() });
        }
        let b_prep = Circuit::from_gates(spec.n, (0..spec.n).map(Gate::H))?;
        Ok(ProblemSpec { spec, decomposition, b_prep })
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn spec(&self) -> &TridiagonalSpec<T> {
        &self.spec
    }

    pub fn decomposition(&self) -> &Decomposition<T> {
        &self.decomposition
    }

    pub fn b_prep(&self) -> &Circuit<T> {
        &self.b_prep
    }

    pub fn b_state(&self) -> Result<StateVector<T>> {
        StateVector::new_zero_state(self.n())?.apply_circuit(&self.b_prep)
    }
}
