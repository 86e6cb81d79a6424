//! Decomposition with X, SWAP and center-switch terms.
//!
//! Coverage of the superdiagonal entry `(j, j+1)`: when `j` is even the pair
//! differs only in bit 0 and the `X_0` term supplies it; otherwise `j` ends
//! in exactly `k ≥ 1` one-bits (`j ≡ 2^k − 1 mod 2^{k+1}`), the pair differs
//! in bits `k … 0`, and the span-`(k+1)` center-switch on qubits `k … 0`
//! supplies it. Each entry is covered exactly once, so every off-diagonal
//! term carries coefficient `beta`.
//!
//! The center-switch terms also put ones on the diagonal away from their
//! swapped pair. The remaining diagonal `d = alpha − beta · diag(Σ CS)` is
//! expanded in Z-strings by a Walsh–Hadamard transform. `d` is invariant
//! under complementing every bit, so only even-weight Z-strings survive.

use super::walsh::fwht;
use super::{assemble_tridiagonal, Decomposition, Scheme, TridiagonalSpec, UnitaryTerm};
use crate::error::{Result, VqlsError};
use crate::gates::PauliString;
use crate::scalar::{Real, C};

/// `1 − [j mod 2^span ∈ {2^{span−1} − 1, 2^{span−1}}]`.
fn center_switch_diagonal(j: usize, span: usize) -> bool {
    let low = j & ((1 << span) - 1);
    let half = 1 << (span - 1);
    low != half - 1 && low != half
}

/// Superdiagonal index `j` is covered by the X term (`None`) or the
/// center-switch of the returned span.
pub fn covering_span(j: usize) -> Option<usize> {
    if j.is_multiple_of(2) {
        None
    } else {
        Some(j.trailing_ones() as usize + 1)
    }
}

pub fn multiqubit_decompose_tridiagonal<T: Real>(
    spec: &TridiagonalSpec<T>,
) -> Result<Decomposition<T>> {
    let n = spec.n;
    if n < 2 {
        return Err(VqlsError::MultiqubitTooSmall);
    }
    let target = assemble_tridiagonal(spec)?;
    let dim = 1usize << n;
    let beta = C::new(spec.beta, T::zero());

    let mut x0 = PauliString::identity(n).letters().to_vec();
    x0[0] = crate::gates::Pauli::X;
    let mut terms = vec![(beta, UnitaryTerm::Pauli(PauliString::new(x0)?))];
    terms.extend((2..=n).map(|span| (beta, UnitaryTerm::CenterSwitch { n, span })));

    let mut diag: Vec<T> = (0..dim)
        .map(|j| {
            let ones = (2..=n).filter(|&s| center_switch_diagonal(j, s)).count();
            spec.alpha - spec.beta * T::lit(ones as f64)
        })
        .collect();
    fwht(&mut diag);
    let scale = T::one() / T::lit(dim as f64);
    let largest = terms
        .iter()
        .map(|(c, _)| c.norm())
        .chain(diag.iter().map(|d| (*d * scale).abs()))
        .fold(T::zero(), T::max);
    for (mask, value) in diag.into_iter().enumerate() {
        let coeff = value * scale;
        if coeff.abs() <= largest * T::exact_tol() {
            continue;
        }
        assert!(
            mask.count_ones() % 2 == 0,
            "odd-weight Z-string {mask:#b} in a bit-complement symmetric diagonal"
        );
        terms.push((C::new(coeff, T::zero()), UnitaryTerm::Pauli(PauliString::z_string(n, mask))));
    }
    Decomposition::build(Scheme::Multiqubit, n, terms, &target)
}
