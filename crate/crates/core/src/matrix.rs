//! Square dense complex matrices of power-of-two dimension.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Result, VqlsError};
use crate::gates::Circuit;
use crate::scalar::{Real, C};
use crate::statevector::{log2_exact, StateVector};

/// Largest register `circuit_to_matrix` will assemble.
pub const MAX_MATRIX_QUBITS: usize = 10;

/// Row-major `dim × dim` matrix, `dim = 2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    dim: usize,
    data: Vec<C<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Result<Self> {
        // 1×1 is allowed as the Kronecker unit
        if dim != 1 {
            log2_exact(dim)?;
        }
        Ok(DenseMatrix { dim, data: vec![C::zero(); dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = C::one();
        }
        Ok(m)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for r in 0..dim {
            for c in 0..dim {
                m.data[r * dim + c] = f(r, c);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<C<T>>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(VqlsError::DimensionMismatch { expected: dim, got: r.len() });
        }
        Self::from_fn(dim, |r, c| rows[r][c])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Qubit count `log2(dim)`.
    pub fn n(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> C<T> {
        self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: C<T>) {
        self.data[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = self.clone();
        for r in 0..d {
            for c in 0..d {
                out.data[c * d + r] = self.data[r * d + c].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: C<T>) -> Self {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|&v| v * s).collect() }
    }

    pub fn trace(&self) -> C<T> {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|v| v.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// `self ⊗ rhs`; `rhs` occupies the low (least significant) index bits.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (da, db) = (self.dim, rhs.dim);
        let d = da * db;
        let mut data = vec![C::zero(); d * d];
        for ar in 0..da {
            for ac in 0..da {
                let a = self.get(ar, ac);
                if a.is_zero() {
                    continue;
                }
                for br in 0..db {
                    for bc in 0..db {
                        data[(ar * db + br) * d + ac * db + bc] = a * rhs.get(br, bc);
                    }
                }
            }
        }
        DenseMatrix { dim: d, data }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(VqlsError::DimensionMismatch { expected: self.dim, got: rhs.dim });
        }
        let d = self.dim;
        let mut data = vec![C::zero(); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.data[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    data[r * d + c] += a * rhs.data[k * d + c];
                }
            }
        }
        Ok(DenseMatrix { dim: d, data })
    }

    /// Ordinary matrix–vector product. The result is generally unnormalized.
    pub fn mat_apply(&self, v: &StateVector<T>) -> Result<StateVector<T>> {
        if v.dim() != self.dim {
            return Err(VqlsError::DimensionMismatch { expected: self.dim, got: v.dim() });
        }
        let amps = v.amplitudes();
        let out = (0..self.dim)
            .map(|r| {
                self.data[r * self.dim..(r + 1) * self.dim]
                    .iter()
                    .zip(amps)
                    .map(|(m, a)| m * a)
                    .sum()
            })
            .collect();
        StateVector::from_amplitudes(out)
    }

    pub fn hermitian_deviation(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// `max |U†U − I|` entrywise.
    pub fn unitarity_deviation(&self) -> T {
        let p = self.adjoint().try_mul(self).expect("square");
        p.max_abs_diff(&Self::identity(self.dim).expect("power of two"))
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// Entrywise comparison after removing a global phase. The phase is
    /// fixed by the first entry (row-major) whose magnitude is significant
    /// in `self`.
    pub fn approx_eq_up_to_phase(&self, other: &Self, tol: T) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let floor = T::lit(1e-9);
        let Some(idx) = self.data.iter().position(|v| v.norm() > floor) else {
            return other.frobenius_norm() <= tol;
        };
        let (a, b) = (self.data[idx], other.data[idx]);
        if b.norm() <= floor {
            return false;
        }
        let phase = (a / b) / (a / b).norm();
        self.max_abs_diff(&other.scale(phase)) <= tol
    }
}

impl<T: Real> Add for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn add(self, rhs: Self) -> DenseMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        DenseMatrix { dim: self.dim, data }
    }
}

impl<T: Real> Sub for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn sub(self, rhs: Self) -> DenseMatrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        DenseMatrix { dim: self.dim, data }
    }
}

impl<T: Real> Mul for &DenseMatrix<T> {
    type Output = DenseMatrix<T>;

    fn mul(self, rhs: Self) -> DenseMatrix<T> {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

/// Unitary of `circuit`: the product of its embedded gates in application order.
pub fn circuit_to_matrix<T: Real>(circuit: &Circuit<T>) -> Result<DenseMatrix<T>> {
    let n = circuit.n();
    if n > MAX_MATRIX_QUBITS {
        return Err(VqlsError::Size { n, min: 1, max: MAX_MATRIX_QUBITS });
    }
    let dim = 1usize << n;
    let mut m = DenseMatrix::zeros(dim)?;
    for col in 0..dim {
        let v = StateVector::basis_state(n, col)?.apply_circuit(circuit)?;
        for (row, a) in v.amplitudes().iter().enumerate() {
            m.set(row, col, *a);
        }
    }
    Ok(m)
}
