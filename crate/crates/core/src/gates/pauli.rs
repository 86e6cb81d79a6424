use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Result, VqlsError};
use crate::gates::{Circuit, Gate};
use crate::matrix::DenseMatrix;
use crate::scalar::{Real, C};

pub const MAX_PAULI_QUBITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix<T: Real>(self) -> DenseMatrix<T> {
        let (o, z) = (C::<T>::one(), C::<T>::zero());
        let i = C::new(T::zero(), T::one());
        let rows = match self {
            Pauli::I => [[o, z], [z, o]],
            Pauli::X => [[z, o], [o, z]],
            Pauli::Y => [[z, -i], [i, z]],
            Pauli::Z => [[o, z], [z, -o]],
        };
        DenseMatrix::from_fn(2, |r, c| rows[r][c]).expect("2x2")
    }

    fn flips(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    fn from_char(ch: char) -> Option<Self> {
        match ch {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// Tensor product of single-qubit Paulis; `letters[k]` acts on qubit `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    letters: Vec<Pauli>,
}

impl PauliString {
    /// `letters[k]` acts on qubit `k` (little-endian order).
    pub fn new(letters: Vec<Pauli>) -> Result<Self> {
        if letters.is_empty() {
            return Err(VqlsError::InvalidArgument("empty Pauli string".into()));
        }
        Ok(PauliString { letters })
    }

    pub fn identity(n: usize) -> Self {
        PauliString { letters: vec![Pauli::I; n] }
    }

    /// Z on every qubit whose bit is set in `mask`, identity elsewhere.
    pub fn z_string(n: usize, mask: usize) -> Self {
        let letters =
            (0..n).map(|k| if (mask >> k) & 1 == 1 { Pauli::Z } else { Pauli::I }).collect();
        PauliString { letters }
    }

    /// Parses a compact string written from the highest qubit down, e.g. `"IXX"`.
    pub fn from_compact(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .rev()
            .map(|ch| {
                Pauli::from_char(ch)
                    .ok_or_else(|| VqlsError::InvalidArgument(format!("bad Pauli letter {ch:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }

    /// Highest qubit first, without indices: `"IXX"`.
    pub fn compact(&self) -> String {
        self.letters.iter().rev().map(|p| p.as_char()).collect()
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, qubit: usize) -> Pauli {
        self.letters[qubit]
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }

    pub fn count(&self, p: Pauli) -> usize {
        self.letters.iter().filter(|&&l| l == p).count()
    }

    /// Bit mask of qubits flipped by the string (X or Y letters).
    pub fn flip_mask(&self) -> usize {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, p)| p.flips())
            .fold(0, |m, (k, _)| m | (1 << k))
    }

    /// `P|j⟩ = phase · |j ⊕ flip_mask⟩`; returns `(j ⊕ flip_mask, phase)`.
    pub fn apply_to_basis<T: Real>(&self, j: usize) -> (usize, C<T>) {
        let mut phase = C::<T>::one();
        let i = C::new(T::zero(), T::one());
        for (k, p) in self.letters.iter().enumerate() {
            let bit = (j >> k) & 1 == 1;
            match (p, bit) {
                (Pauli::Y, false) => phase *= i,
                (Pauli::Y, true) => phase *= -i,
                (Pauli::Z, true) => phase = -phase,
                _ => {}
            }
        }
        (j ^ self.flip_mask(), phase)
    }

    /// Circuit with one gate per non-identity letter.
    pub fn circuit<T: Real>(&self) -> Circuit<T> {
        let gates = self.letters.iter().enumerate().filter_map(|(q, p)| match p {
            Pauli::I => None,
            Pauli::X => Some(Gate::X(q)),
            Pauli::Y => Some(Gate::Y(q)),
            Pauli::Z => Some(Gate::Z(q)),
        });
        Circuit::from_gates(self.n(), gates).expect("letters fit their own register")
    }

    fn top_nonidentity(&self) -> Option<usize> {
        self.letters.iter().rposition(|&p| p != Pauli::I)
    }

    /// Canonical ordering: by highest non-identity qubit, then lexicographic
    /// from the top qubit with `I < X < Y < Z`.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.top_nonidentity().cmp(&other.top_nonidentity()))
            .then_with(|| self.letters.iter().rev().cmp(other.letters.iter().rev()))
    }
}

/// Kronecker product `σ_{n−1} ⊗ … ⊗ σ_0`, qubit 0 the least significant factor.
pub fn pauli_string_matrix<T: Real>(p: &PauliString) -> Result<DenseMatrix<T>> {
    if p.n() > MAX_PAULI_QUBITS {
        return Err(VqlsError::Size { n: p.n(), min: 1, max: MAX_PAULI_QUBITS });
    }
    let mut m = DenseMatrix::identity(1)?;
    for letter in p.letters.iter().rev() {
        m = m.kron(&letter.matrix());
    }
    Ok(m)
}

/// `Z2 Z1 I0` form, highest qubit first.
impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (q, p)) in self.letters.iter().enumerate().rev().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", p.as_char(), q)?;
        }
        Ok(())
    }
}

/// Accepts the indexed form `"Z2 Z1 I0"` or the compact form `"ZZI"`.
impl FromStr for PauliString {
    type Err = VqlsError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.contains(char::is_whitespace) && !s.chars().any(|c| c.is_ascii_digit()) {
            return Self::from_compact(s);
        }
        let mut slots: Vec<Option<Pauli>> = Vec::new();
        for tok in s.split_whitespace() {
            let mut chars = tok.chars();
            let bad = || VqlsError::InvalidArgument(format!("bad Pauli token {tok:?}"));
            let p = chars.next().and_then(Pauli::from_char).ok_or_else(bad)?;
            let q: usize = chars.as_str().parse().map_err(|_| bad())?;
            if slots.len() <= q {
                slots.resize(q + 1, None);
            }
            if slots[q].replace(p).is_some() {
                return Err(bad());
            }
        }
        let letters = slots
            .into_iter()
            .map(|p| p.ok_or_else(|| VqlsError::InvalidArgument(format!("missing qubit in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(m: &DenseMatrix<f64>, r: usize, c: usize) -> C<f64> {
        m.get(r, c)
    }

    /// Direct Kronecker expansion oracle written out by index arithmetic.
    fn kron_oracle(p: &PauliString) -> DenseMatrix<f64> {
        let dim = 1 << p.n();
        DenseMatrix::from_fn(dim, |r, c| {
            (0..p.n()).fold(C::one(), |acc, k| {
                let m = p.letter(k).matrix::<f64>();
                acc * m.get((r >> k) & 1, (c >> k) & 1)
            })
        })
        .unwrap()
    }

    #[test]
    fn ix_matrix() {
        let p: PauliString = "I1 X0".parse().unwrap();
        let m = pauli_string_matrix::<f64>(&p).unwrap();
        let ones = [(0, 1), (1, 0), (2, 3), (3, 2)];
        for r in 0..4 {
            for c in 0..4 {
                let want = if ones.contains(&(r, c)) { 1.0 } else { 0.0 };
                assert_eq!(entry(&m, r, c), C::new(want, 0.0));
            }
        }
        assert_eq!(m, kron_oracle(&p));
    }

    #[test]
    fn z_matrix() {
        let m = pauli_string_matrix::<f64>(&"Z".parse().unwrap()).unwrap();
        assert_eq!(entry(&m, 0, 0), C::new(1.0, 0.0));
        assert_eq!(entry(&m, 1, 1), C::new(-1.0, 0.0));
        assert_eq!(entry(&m, 0, 1), C::zero());
    }

    #[test]
    fn xx_plus_yy_center_structure() {
        let xx = pauli_string_matrix::<f64>(&"XX".parse().unwrap()).unwrap();
        let yy = pauli_string_matrix::<f64>(&"YY".parse().unwrap()).unwrap();
        let s = &xx + &yy;
        for r in 0..4 {
            for c in 0..4 {
                let want = if (r, c) == (1, 2) || (r, c) == (2, 1) { 2.0 } else { 0.0 };
                assert_eq!(s.get(r, c), C::new(want, 0.0), "({r},{c})");
            }
        }
    }

    #[test]
    fn basis_action_matches_kron() {
        for s in ["XYZ", "YYY", "IZY", "XIX"] {
            let p = PauliString::from_compact(s).unwrap();
            let m = kron_oracle(&p);
            for j in 0..8 {
                let (row, phase) = p.apply_to_basis::<f64>(j);
                assert!((m.get(row, j) - phase).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p: PauliString = "Z2 Z1 I0".parse().unwrap();
        assert_eq!(p.compact(), "ZZI");
        assert_eq!(p.to_string(), "Z2 Z1 I0");
        assert_eq!("ZZI".parse::<PauliString>().unwrap(), p);
        assert!("Z2 Z2".parse::<PauliString>().is_err());
        assert!("Z2 I0".parse::<PauliString>().is_err());
        assert!("Q".parse::<PauliString>().is_err());
    }

    #[test]
    fn canonical_order_follows_table_layout() {
        let mut v: Vec<PauliString> = ["YYX", "III", "XYY", "IIX", "YXY", "IYY", "XXX", "IXX"]
            .iter()
            .map(|s| PauliString::from_compact(s).unwrap())
            .collect();
        v.sort_by(|a, b| a.canonical_cmp(b));
        let names: Vec<String> = v.iter().map(|p| p.compact()).collect();
        assert_eq!(names, ["III", "IIX", "IXX", "IYY", "XXX", "XYY", "YXY", "YYX"]);
    }

    #[test]
    fn oversized() {
        let p = PauliString::identity(11);
        assert!(pauli_string_matrix::<f64>(&p).is_err());
    }
}
