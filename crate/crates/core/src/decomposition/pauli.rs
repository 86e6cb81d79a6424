use num_traits::Zero;

use super::{assemble_tridiagonal, Decomposition, Scheme, TridiagonalSpec, UnitaryTerm};
use crate::error::{Result, VqlsError};
use crate::gates::{Pauli, PauliString};
use crate::matrix::DenseMatrix;
use crate::scalar::{Real, C};

/// Largest register scanned by the full `4^n` Pauli expansion.
pub const MAX_GENERAL_QUBITS: usize = 8;

fn string_from_masks(n: usize, x: usize, z: usize) -> PauliString {
    let letters = (0..n)
        .map(|k| match ((x >> k) & 1, (z >> k) & 1) {
            (0, 0) => Pauli::I,
            (1, 0) => Pauli::X,
            (1, 1) => Pauli::Y,
            _ => Pauli::Z,
        })
        .collect();
    PauliString::new(letters).expect("n >= 1")
}

/// `c_P = tr(P·a) / 2^n` over all `4^n` strings, zero coefficients pruned.
pub fn pauli_decompose_general<T: Real>(a: &DenseMatrix<T>) -> Result<Decomposition<T>> {
    let n = a.n();
    if n == 0 || n > MAX_GENERAL_QUBITS {
        return Err(VqlsError::Size { n, min: 1, max: MAX_GENERAL_QUBITS });
    }
    let dev = a.hermitian_deviation();
    if dev > T::pipeline_tol() {
        return Err(VqlsError::NonHermitian(dev.as_f64()));
    }
    let dim = a.dim();
    let scale = T::one() / T::lit(dim as f64);
    let mut terms = Vec::new();
    for x in 0..dim {
        for z in 0..dim {
            let p = string_from_masks(n, x, z);
            // P has one entry per column k, at row k ^ x
            let tr: C<T> = (0..dim)
                .map(|k| {
                    let (row, phase) = p.apply_to_basis::<T>(k);
                    phase * a.get(k, row)
                })
                .sum();
            // Hermitian input: the trace is real
            let coeff = C::new(tr.re * scale, T::zero());
            if !coeff.is_zero() {
                terms.push((coeff, UnitaryTerm::Pauli(p)));
            }
        }
    }
    sort_pauli_terms(&mut terms);
    Decomposition::build(Scheme::Pauli, n, terms, a)
}

pub(super) fn sort_pauli_terms<T>(terms: &mut [(C<T>, UnitaryTerm)]) {
    terms.sort_by(|(_, a), (_, b)| match (a, b) {
        (UnitaryTerm::Pauli(p), UnitaryTerm::Pauli(q)) => p.canonical_cmp(q),
        _ => std::cmp::Ordering::Equal,
    });
}

/// Closed-form Pauli expansion of the tridiagonal matrix.
///
/// The superdiagonal pairs `(j, j+1)` whose lower index ends in exactly `k`
/// one-bits form `I ⊗ (|0 1^k⟩⟨1 0^k| + h.c.)` on qubits `k … 0`. Writing
/// `|0⟩⟨1| = (X + iY)/2` and `|1⟩⟨0| = (X − iY)/2` gives, for each string with
/// letters in `{X, Y}` on qubits `k … 0`, the coefficient
/// `2^{−k} · Re(i^{a−b})`, where `a` is 1 if qubit `k` carries Y and `b`
/// counts the Y letters below it. Half of the `2^{k+1}` strings survive,
/// so with the identity there are `2^n` terms.
pub fn pauli_decompose_tridiagonal<T: Real>(spec: &TridiagonalSpec<T>) -> Result<Decomposition<T>> {
    let target = assemble_tridiagonal(spec)?;
    let n = spec.n;
    let mut terms = vec![(C::new(spec.alpha, T::zero()), UnitaryTerm::Pauli(PauliString::identity(n)))];
    for k in 0..n {
        let weight = T::lit(0.5f64.powi(k as i32));
        for y_mask in 0..(1usize << (k + 1)) {
            let a = (y_mask >> k) & 1;
            let b = (y_mask & ((1 << k) - 1)).count_ones() as usize;
            let sign = match (a as isize - b as isize).rem_euclid(4) {
                0 => T::one(),
                2 => -T::one(),
                _ => continue,
            };
            let letters = (0..n)
                .map(|q| {
                    if q > k {
                        Pauli::I
                    } else if (y_mask >> q) & 1 == 1 {
                        Pauli::Y
                    } else {
                        Pauli::X
                    }
                })
                .collect();
            let p = PauliString::new(letters)?;
            terms.push((C::new(spec.beta * weight * sign, T::zero()), UnitaryTerm::Pauli(p)));
        }
    }
    sort_pauli_terms(&mut terms);
    Decomposition::build(Scheme::Pauli, n, terms, &target)
}
