//! Dense n-qubit statevectors and the gate-application kernel.
//!
//! Basis index convention: `j = Σ q_k 2^k`, qubit 0 least significant.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Result, VqlsError};
use crate::gates::{Circuit, Control, Gate};
use crate::scalar::{Real, C};

pub const MAX_QUBITS: usize = 12;

/// `2^n` complex amplitudes.
///
/// Normalized after preparation or unitary evolution. Intermediate vectors
/// such as `A|x⟩` reuse the type unnormalized; callers that need a state
/// call [`StateVector::normalized`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    n: usize,
    amps: Vec<C<T>>,
}

pub(crate) fn check_qubits(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(VqlsError::Size { n, min: 1, max });
    }
    Ok(())
}

pub(crate) fn log2_exact(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(VqlsError::NotPowerOfTwo(len));
    }
    Ok(len.trailing_zeros() as usize)
}

impl<T: Real> StateVector<T> {
    /// |0…0⟩ on `n` qubits.
    pub fn new_zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        check_qubits(n, MAX_QUBITS)?;
        let dim = 1usize << n;
        if index >= dim {
            return Err(VqlsError::DimensionMismatch { expected: dim, got: index });
        }
        let mut amps = vec![C::zero(); dim];
        amps[index] = C::new(T::one(), T::zero());
        Ok(StateVector { n, amps })
    }

    pub fn from_amplitudes(amps: Vec<C<T>>) -> Result<Self> {
        let n = log2_exact(amps.len())?;
        check_qubits(n, MAX_QUBITS)?;
        Ok(StateVector { n, amps })
    }

    /// Real amplitudes, convenient for tests and classical vectors.
    pub fn from_real(values: &[T]) -> Result<Self> {
        Self::from_amplitudes(values.iter().map(|&v| C::new(v, T::zero())).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<C<T>> {
        self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: T) -> bool {
        (self.norm_sqr() - T::one()).abs() <= tol
    }

    /// Rescaled to unit norm; a zero vector is a degenerate-state error.
    pub fn normalized(&self) -> Result<Self> {
        let nrm = self.norm_sqr();
        if nrm <= T::lit(1e-300) || !nrm.is_finite() {
            return Err(VqlsError::DegenerateState(nrm.as_f64()));
        }
        let s = T::one() / nrm.sqrt();
        Ok(self.scale(C::new(s, T::zero())))
    }

    pub fn scale(&self, alpha: C<T>) -> Self {
        StateVector { n: self.n, amps: self.amps.iter().map(|&a| a * alpha).collect() }
    }

    /// `Σ conj(self_j) · other_j`.
    pub fn inner_product(&self, other: &Self) -> Result<C<T>> {
        self.same_dim(other)?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// `self + other` for vectors of the same size.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(self + other)
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.amps.len() != other.amps.len() {
            return Err(VqlsError::DimensionMismatch {
                expected: self.amps.len(),
                got: other.amps.len(),
            });
        }
        Ok(())
    }

    /// Returns `U|self⟩`; `self` is left untouched.
    pub fn apply_gate(&self, gate: &Gate<T>) -> Result<Self> {
        gate.validate(self.n)?;
        let mut out = self.clone();
        apply_in_place(&mut out.amps, gate, &mut Vec::new());
        Ok(out)
    }

    /// Applies every gate of `circuit` in order.
    pub fn apply_circuit(&self, circuit: &Circuit<T>) -> Result<Self> {
        if circuit.n() != self.n {
            return Err(VqlsError::DimensionMismatch { expected: self.n, got: circuit.n() });
        }
        let mut out = self.clone();
        let mut ctl = Vec::new();
        for g in circuit.gates() {
            // gates were validated on push
            apply_in_place(&mut out.amps, g, &mut ctl);
        }
        Ok(out)
    }

    /// Embeds `self` as the low qubits of a larger register whose extra
    /// qubits are |0⟩.
    pub fn extend_zero(&self, extra: usize) -> Result<Self> {
        check_qubits(self.n + extra, MAX_QUBITS)?;
        let mut amps = vec![C::zero(); 1 << (self.n + extra)];
        amps[..self.amps.len()].copy_from_slice(&self.amps);
        Ok(StateVector { n: self.n + extra, amps })
    }

    /// Probability that `qubit` reads 0 in a computational-basis measurement.
    pub fn prob_zero(&self, qubit: usize) -> Result<T> {
        if qubit >= self.n {
            return Err(VqlsError::GatePlacement(format!(
                "qubit {qubit} out of range for {} qubits",
                self.n
            )));
        }
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(j, _)| (j >> qubit) & 1 == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }
}

impl<T: Real> Add for &StateVector<T> {
    type Output = StateVector<T>;

    /// Panics on a size mismatch; [`StateVector::try_add`] is the checked form.
    fn add(self, rhs: Self) -> StateVector<T> {
        assert_eq!(self.amps.len(), rhs.amps.len(), "state dimension mismatch");
        let amps = self.amps.iter().zip(&rhs.amps).map(|(a, b)| a + b).collect();
        StateVector { n: self.n, amps }
    }
}

impl<T: Real> Sub for &StateVector<T> {
    type Output = StateVector<T>;

    fn sub(self, rhs: Self) -> StateVector<T> {
        assert_eq!(self.amps.len(), rhs.amps.len(), "state dimension mismatch");
        let amps = self.amps.iter().zip(&rhs.amps).map(|(a, b)| a - b).collect();
        StateVector { n: self.n, amps }
    }
}

impl<T: Real> Mul<&StateVector<T>> for Complex<T> {
    type Output = StateVector<T>;

    fn mul(self, rhs: &StateVector<T>) -> StateVector<T> {
        rhs.scale(self)
    }
}

#[inline]
fn controls_ok(index: usize, controls: &[Control]) -> bool {
    controls.iter().all(|c| c.satisfied(index))
}

/// In-place kernel. `controls` holds the controls inherited from enclosing
/// `Controlled` wrappers and is restored before returning.
pub(crate) fn apply_in_place<T: Real>(amps: &mut [C<T>], gate: &Gate<T>, controls: &mut Vec<Control>) {
    match gate {
        Gate::Swap(a, b) => {
            let (ma, mb) = (1usize << a, 1usize << b);
            for j in 0..amps.len() {
                if j & ma != 0 && j & mb == 0 && controls_ok(j, controls) {
                    amps.swap(j, j ^ ma ^ mb);
                }
            }
        }
        Gate::CenterSwitch { low, span } => {
            let block = ((1usize << span) - 1) << low;
            // 01…1 within the span: everything but the leading bit
            let pattern = ((1usize << (span - 1)) - 1) << low;
            for j in 0..amps.len() {
                if j & block == pattern && controls_ok(j, controls) {
                    amps.swap(j, j ^ block);
                }
            }
        }
        Gate::MultiControlledX { controls: own, target } => {
            let depth = controls.len();
            controls.extend_from_slice(own);
            let m = 1usize << target;
            for j in 0..amps.len() {
                if j & m == 0 && controls_ok(j, controls) {
                    amps.swap(j, j | m);
                }
            }
            controls.truncate(depth);
        }
        Gate::Controlled { control, inner } => {
            controls.push(Control::one(*control));
            apply_in_place(amps, inner, controls);
            controls.pop();
        }
        single => {
            let (q, u) = single.single_qubit_matrix().expect("single-qubit gate");
            let m = 1usize << q;
            for j in 0..amps.len() {
                if j & m == 0 && controls_ok(j, controls) {
                    let (a0, a1) = (amps[j], amps[j | m]);
                    amps[j] = u[0][0] * a0 + u[0][1] * a1;
                    amps[j | m] = u[1][0] * a0 + u[1][1] * a1;
                }
            }
        }
    }
}
