//! The center-switch gate family and its multi-controlled-X realization.
//!
//! `CS` of span `n` transposes the basis states `01…1` and `10…0` (leading
//! bit = qubit `n−1`), i.e. indices `2^{n−1} − 1` and `2^{n−1}`. Span 2 is SWAP.
//!
//! The transposition is expanded through a chain of intermediate bitstrings
//! `s_0 = 01…1, s_1, …, s_{n−1} = 0…0, s_n = 10…0`: starting from `01…1`
//! the low bits are cleared from bit `n−2` down to bit 0, then bit `n−1` is
//! set. Consecutive strings differ in one bit, so each adjacent transposition
//! is an X on that bit controlled by the remaining `n−1` bits at their shared
//! values. With `(a, b) = (a, p)(p, b)(a, p)` applied recursively,
//!
//! `(s_0, s_n) = (s_0,s_1) … (s_{n−2},s_{n−1}) (s_{n−1},s_n) (s_{n−2},s_{n−1}) … (s_0,s_1)`,
//!
//! a palindrome of `2n − 1` gates.

use crate::error::{Result, VqlsError};
use crate::gates::{Circuit, Control, Polarity};
use crate::gates::Gate;
use crate::matrix::DenseMatrix;
use crate::scalar::{Real, C};
use num_traits::{One, Zero};

/// Largest span for which the dense matrix is assembled.
pub const MAX_CS_SPAN: usize = 10;

fn check_span(span: usize) -> Result<()> {
    if span < 2 {
        return Err(VqlsError::InvalidSpan(span));
    }
    if span > MAX_CS_SPAN {
        return Err(VqlsError::Size { n: span, min: 2, max: MAX_CS_SPAN });
    }
    Ok(())
}

/// Permutation matrix of the span-`span` center-switch.
pub fn center_switch_matrix<T: Real>(span: usize) -> Result<DenseMatrix<T>> {
    check_span(span)?;
    let dim = 1usize << span;
    let (a, b) = ((dim >> 1) - 1, dim >> 1);
    let image = |c: usize| if c == a { b } else if c == b { a } else { c };
    DenseMatrix::from_fn(dim, |r, c| if image(c) == r { C::one() } else { C::zero() })
}

/// Intermediate bitstrings `s_0 … s_n` of the transposition chain.
pub fn center_switch_path(span: usize) -> Vec<usize> {
    let top = 1usize << (span - 1);
    let mut s = top - 1;
    let mut path = vec![s];
    for bit in (0..span - 1).rev() {
        s &= !(1 << bit);
        path.push(s);
    }
    path.push(top);
    path
}

/// The `2·span − 1` transpositions as `(controls, target)` pairs, in
/// application order. Controls are listed in ascending qubit order.
pub fn center_switch_transpositions(span: usize) -> Vec<(Vec<Control>, usize)> {
    let path = center_switch_path(span);
    let step = |w: &[usize]| {
        let (a, b) = (w[0], w[1]);
        let target = (a ^ b).trailing_zeros() as usize;
        let controls = (0..span)
            .filter(|&q| q != target)
            .map(|q| Control { qubit: q, polarity: Polarity::from_bit((a >> q) & 1 == 1) })
            .collect();
        (controls, target)
    };
    let forward: Vec<_> = path.windows(2).map(step).collect();
    let mut seq = forward.clone();
    seq.extend(forward[..forward.len() - 1].iter().rev().cloned());
    seq
}

/// Span-`span` center-switch as `2·span − 1` multi-controlled X gates, each
/// with `span − 1` mixed-polarity controls.
pub fn lower_center_switch<T: Real>(span: usize) -> Result<Circuit<T>> {
    if span < 2 {
        return Err(VqlsError::InvalidSpan(span));
    }
    let gates = center_switch_transpositions(span)
        .into_iter()
        .map(|(controls, target)| Gate::mcx(controls, target));
    Circuit::from_gates(span, gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::circuit_to_matrix;

    #[test]
    fn span_two_is_swap() {
        let m = center_switch_matrix::<f64>(2).unwrap();
        let mut c = Circuit::new(2).unwrap();
        c.push(Gate::Swap(1, 0)).unwrap();
        assert_eq!(m, circuit_to_matrix(&c).unwrap());
    }

    #[test]
    fn span_three_matrix() {
        let m = center_switch_matrix::<f64>(3).unwrap();
        for r in 0..8 {
            for c in 0..8 {
                let one = match (r, c) {
                    (3, 4) | (4, 3) => true,
                    (r, c) if r == c => r != 3 && r != 4,
                    _ => false,
                };
                assert_eq!(m.get(r, c), if one { C::one() } else { C::zero() }, "({r},{c})");
            }
        }
    }

    #[test]
    fn span_four_permutation_oracle() {
        // permutation-matrix constructor: identity with columns 7 and 8 exchanged
        let mut perm: Vec<usize> = (0..16).collect();
        perm.swap(7, 8);
        let oracle = DenseMatrix::<f64>::from_fn(16, |r, c| {
            if perm[c] == r { C::one() } else { C::zero() }
        })
        .unwrap();
        assert_eq!(center_switch_matrix::<f64>(4).unwrap(), oracle);
    }

    #[test]
    fn span_three_sequence_matches_worked_expansion() {
        // (011,001)(001,000)(000,100)(001,000)(011,001)
        assert_eq!(center_switch_path(3), vec![0b011, 0b001, 0b000, 0b100]);
        let seq = center_switch_transpositions(3);
        let targets: Vec<usize> = seq.iter().map(|(_, t)| *t).collect();
        assert_eq!(targets, vec![1, 0, 2, 0, 1]);
        // first gate: target q1, q2 must be 0 and q0 must be 1
        let (ctl, _) = &seq[0];
        assert_eq!(ctl, &vec![Control::one(0), Control::zero(2)]);
        // middle gate: target q2 with q1 = q0 = 0
        let (ctl, _) = &seq[2];
        assert_eq!(ctl, &vec![Control::zero(0), Control::zero(1)]);
    }

    #[test]
    fn span_two_is_three_cx() {
        let c = lower_center_switch::<f64>(2).unwrap();
        assert_eq!(c.gate_count(), 3);
        let m = circuit_to_matrix(&c).unwrap();
        assert_eq!(m, center_switch_matrix(2).unwrap());
    }

    #[test]
    fn lowering_counts_and_exact_matrix() {
        for span in 2..=8 {
            let c = lower_center_switch::<f64>(span).unwrap();
            assert_eq!(c.gate_count(), 2 * span - 1);
            for g in c.gates() {
                match g {
                    Gate::MultiControlledX { controls, .. } => assert_eq!(controls.len(), span - 1),
                    other => panic!("unexpected gate {other}"),
                }
            }
            let gates = c.gates();
            for k in 0..gates.len() {
                assert_eq!(gates[k], gates[gates.len() - 1 - k], "palindrome");
            }
            assert_eq!(circuit_to_matrix(&c).unwrap(), center_switch_matrix(span).unwrap());
        }
    }

    #[test]
    fn involution() {
        for span in 2..=5 {
            let m = center_switch_matrix::<f64>(span).unwrap();
            assert_eq!(&m * &m, DenseMatrix::identity(1 << span).unwrap());
            assert!(m.is_hermitian(0.0));
        }
    }

    #[test]
    fn span_errors() {
        assert_eq!(center_switch_matrix::<f64>(1), Err(VqlsError::InvalidSpan(1)));
        assert!(lower_center_switch::<f64>(0).is_err());
    }
}
