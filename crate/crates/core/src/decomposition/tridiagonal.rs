use num_traits::Zero;

use crate::error::{Result, VqlsError};
use crate::matrix::DenseMatrix;
use crate::scalar::{Real, C};

/// Largest register for which the dense tridiagonal matrix is assembled.
pub const MAX_TRIDIAGONAL_QUBITS: usize = 10;

/// `2^n × 2^n` matrix with `alpha` on the diagonal and `beta` on both first
/// off-diagonals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TridiagonalSpec<T> {
    pub n: usize,
    pub alpha: T,
    pub beta: T,
}

impl<T: Real> TridiagonalSpec<T> {
    pub fn new(n: usize, alpha: T, beta: T) -> Result<Self> {
        if n == 0 {
            return Err(VqlsError::Size { n, min: 1, max: MAX_TRIDIAGONAL_QUBITS });
        }
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(VqlsError::InvalidArgument("alpha and beta must be finite".into()));
        }
        Ok(TridiagonalSpec { n, alpha, beta })
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }
}

pub fn assemble_tridiagonal<T: Real>(spec: &TridiagonalSpec<T>) -> Result<DenseMatrix<T>> {
    if spec.n == 0 || spec.n > MAX_TRIDIAGONAL_QUBITS {
        return Err(VqlsError::Size { n: spec.n, min: 1, max: MAX_TRIDIAGONAL_QUBITS });
    }
    let (a, b) = (C::new(spec.alpha, T::zero()), C::new(spec.beta, T::zero()));
    DenseMatrix::from_fn(spec.dim(), |r, c| match r.abs_diff(c) {
        0 => a,
        1 => b,
        _ => C::zero(),
    })
}
