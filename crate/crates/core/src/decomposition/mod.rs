//! Unitary decompositions `A = Σ c_l A_l` of the constant-coefficient
//! tridiagonal matrix.

mod multiqubit;
mod pauli;
mod tridiagonal;
mod walsh;

use std::fmt;
use std::str::FromStr;

pub use multiqubit::{covering_span, multiqubit_decompose_tridiagonal};
pub use pauli::{pauli_decompose_general, pauli_decompose_tridiagonal, MAX_GENERAL_QUBITS};
pub use tridiagonal::{assemble_tridiagonal, TridiagonalSpec, MAX_TRIDIAGONAL_QUBITS};
pub use walsh::fwht;

use crate::error::{Result, VqlsError};
use crate::gates::{center_switch_matrix, pauli_string_matrix, Circuit, Gate, PauliString};
use crate::matrix::DenseMatrix;
use crate::scalar::{Real, C};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Pauli strings only.
    Pauli,
    /// X, SWAP and center-switch off-diagonal terms plus Z-type diagonal corrections.
    Multiqubit,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Pauli => "pauli",
            Scheme::Multiqubit => "multiqubit",
        })
    }
}

impl FromStr for Scheme {
    type Err = VqlsError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pauli" => Ok(Scheme::Pauli),
            "multiqubit" => Ok(Scheme::Multiqubit),
            other => Err(VqlsError::InvalidArgument(format!("unknown scheme {other:?}"))),
        }
    }
}

/// One unitary `A_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnitaryTerm {
    Pauli(PauliString),
    /// Center-switch of `span` qubits on qubits `span−1 … 0`, identity on
    /// the rest of the `n`-qubit register. Span 2 is SWAP.
    CenterSwitch { n: usize, span: usize },
}

impl UnitaryTerm {
    pub fn n(&self) -> usize {
        match self {
            UnitaryTerm::Pauli(p) => p.n(),
            UnitaryTerm::CenterSwitch { n, .. } => *n,
        }
    }

    pub fn circuit<T: Real>(&self) -> Circuit<T> {
        match self {
            UnitaryTerm::Pauli(p) => p.circuit(),
            UnitaryTerm::CenterSwitch { n, span } => {
                let g = if *span == 2 {
                    Gate::Swap(1, 0)
                } else {
                    Gate::CenterSwitch { low: 0, span: *span }
                };
                Circuit::from_gates(*n, [g]).expect("term fits its register")
            }
        }
    }

    /// Dense matrix assembled directly (Kronecker / permutation), not via
    /// circuit simulation.
    pub fn matrix<T: Real>(&self) -> Result<DenseMatrix<T>> {
        match self {
            UnitaryTerm::Pauli(p) => pauli_string_matrix(p),
            UnitaryTerm::CenterSwitch { n, span } => {
                let pad = DenseMatrix::identity(1 << (n - span))?;
                Ok(pad.kron(&center_switch_matrix(*span)?))
            }
        }
    }
}

/// Term names in the notation `I2 I1 X0`, `I2 SWAP_(1-0)`, `CS_(2-0)`,
/// `CS^(2)_(3-0)`.
impl fmt::Display for UnitaryTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitaryTerm::Pauli(p) => write!(f, "{p}"),
            UnitaryTerm::CenterSwitch { n, span } => {
                for q in (*span..*n).rev() {
                    write!(f, "I{q} ")?;
                }
                match span {
                    2 => f.write_str("SWAP_(1-0)"),
                    3 => f.write_str("CS_(2-0)"),
                    s => write!(f, "CS^({})_({}-0)", s - 2, s - 1),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<T> {
    scheme: Scheme,
    n: usize,
    terms: Vec<(C<T>, UnitaryTerm)>,
    residual: T,
}

impl<T: Real> Decomposition<T> {
    /// Builds a decomposition of `target`, dropping terms whose coefficient is
    /// below `EXACT_TOL` relative to the largest one, and records the
    /// Frobenius residual.
    pub(crate) fn build(
        scheme: Scheme,
        n: usize,
        terms: Vec<(C<T>, UnitaryTerm)>,
        target: &DenseMatrix<T>,
    ) -> Result<Self> {
        let largest = terms.iter().map(|(c, _)| c.norm()).fold(T::zero(), T::max);
        let cut = largest * T::exact_tol();
        let terms: Vec<_> = terms.into_iter().filter(|(c, _)| c.norm() > cut).collect();
        for (i, (_, t)) in terms.iter().enumerate() {
            if terms[i + 1..].iter().any(|(_, u)| u == t) {
                return Err(VqlsError::InvalidArgument(format!("term {t} appears twice")));
            }
        }
        let mut d = Decomposition { scheme, n, terms, residual: T::zero() };
        d.residual = (target - &reconstruct(&d)?).frobenius_norm();
        Ok(d)
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(C<T>, UnitaryTerm)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Frobenius norm of `A − Σ c_l A_l` at construction.
    pub fn residual(&self) -> T {
        self.residual
    }

    pub fn coefficient_of(&self, term: &UnitaryTerm) -> Option<C<T>> {
        self.terms.iter().find(|(_, t)| t == term).map(|(c, _)| *c)
    }

    /// One line per term: `<coefficient> <term-name>`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (c, t) in &self.terms {
            s.push_str(&format_coefficient(*c));
            s.push(' ');
            s.push_str(&t.to_string());
            s.push('\n');
        }
        s
    }
}

/// Real coefficients print as plain reals, complex ones as `re+imi`.
pub fn format_coefficient<T: Real>(c: C<T>) -> String {
    if c.im.is_zero() {
        format!("{}", c.re)
    } else {
        format!("{}{:+}i", c.re, c.im)
    }
}

/// `Σ c_l · matrix(A_l)`; the zero matrix for an empty decomposition.
pub fn reconstruct<T: Real>(d: &Decomposition<T>) -> Result<DenseMatrix<T>> {
    let mut acc = DenseMatrix::zeros(1 << d.n)?;
    for (c, t) in &d.terms {
        acc = &acc + &t.matrix()?.scale(*c);
    }
    Ok(acc)
}

/// Generic term counts (`alpha ≠ 0`, `beta ≠ 0`).
pub fn term_counts(scheme: Scheme, n: usize) -> Result<usize> {
    match scheme {
        Scheme::Pauli if n >= 1 => Ok(1 << n),
        Scheme::Multiqubit if n >= 2 => Ok((1 << (n - 1)) + n),
        Scheme::Multiqubit => Err(VqlsError::MultiqubitTooSmall),
        Scheme::Pauli => Err(VqlsError::Size { n, min: 1, max: MAX_TRIDIAGONAL_QUBITS }),
    }
}

/// Dispatches on `scheme`.
pub fn decompose<T: Real>(spec: &TridiagonalSpec<T>, scheme: Scheme) -> Result<Decomposition<T>> {
    match scheme {
        Scheme::Pauli => pauli_decompose_tridiagonal(spec),
        Scheme::Multiqubit => multiqubit_decompose_tridiagonal(spec),
    }
}
