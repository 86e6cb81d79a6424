use std::fmt;

use crate::error::{Result, VqlsError};
use crate::gates::{Control, Gate};
use crate::scalar::Real;
use crate::statevector::{check_qubits, MAX_QUBITS};

/// Ordered gate list over `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit<T> {
    n: usize,
    gates: Vec<Gate<T>>,
}

impl<T: Real> Circuit<T> {
    pub fn new(n: usize) -> Result<Self> {
        check_qubits(n, MAX_QUBITS)?;
        Ok(Circuit { n, gates: Vec::new() })
    }

    pub fn from_gates(n: usize, gates: impl IntoIterator<Item = Gate<T>>) -> Result<Self> {
        let mut c = Self::new(n)?;
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate<T>] {
        &self.gates
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate<T>) -> Result<&mut Self> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Appends `other` after `self`. Both must have the same width.
    pub fn append(&mut self, other: &Circuit<T>) -> Result<&mut Self> {
        if other.n != self.n {
            return Err(VqlsError::DimensionMismatch { expected: self.n, got: other.n });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(self)
    }

    /// Same gates on a wider register.
    pub fn widened(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(VqlsError::DimensionMismatch { expected: self.n, got: n });
        }
        Self::from_gates(n, self.gates.iter().cloned())
    }

    /// `U†`: reversed order, each gate inverted.
    pub fn inverse(&self) -> Self {
        Circuit { n: self.n, gates: self.gates.iter().rev().map(Gate::inverse).collect() }
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// Longest chain of gates where consecutive gates share a qubit.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.n];
        let mut depth = 0;
        for g in &self.gates {
            let qs = g.qubits();
            let d = 1 + qs.iter().map(|&q| level[q]).max().unwrap_or(0);
            for q in qs {
                level[q] = d;
            }
            depth = depth.max(d);
        }
        depth
    }

    /// Wraps every gate so the circuit acts iff `control` is |1⟩.
    ///
    /// The result spans `max(n, control + 1)` qubits.
    pub fn controlled(&self, control: usize) -> Result<Self> {
        if self.gates.iter().any(|g| g.qubits().contains(&control)) {
            return Err(VqlsError::GatePlacement(format!(
                "control qubit {control} already used by the circuit"
            )));
        }
        let n = self.n.max(control + 1);
        Self::from_gates(n, self.gates.iter().map(|g| Gate::controlled(control, g.clone())))
    }

    /// Applies `perm` to every qubit index. A center-switch gate must stay
    /// contiguous and ordered under `perm`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(VqlsError::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let gates = self.gates.iter().map(|g| relabel_gate(g, perm)).collect::<Result<Vec<_>>>()?;
        Self::from_gates(self.n, gates)
    }
}

fn relabel_gate<T: Real>(g: &Gate<T>, p: &[usize]) -> Result<Gate<T>> {
    use Gate::*;
    Ok(match g {
        I(q) => I(p[*q]),
        X(q) => X(p[*q]),
        Y(q) => Y(p[*q]),
        Z(q) => Z(p[*q]),
        H(q) => H(p[*q]),
        Ry { qubit, angle } => Ry { qubit: p[*qubit], angle: *angle },
        Phase { qubit, angle } => Phase { qubit: p[*qubit], angle: *angle },
        Swap(a, b) => Swap(p[*a], p[*b]),
        CenterSwitch { low, span } => {
            let new_low = p[*low];
            if (0..*span).any(|k| p[low + k] != new_low + k) {
                return Err(VqlsError::GatePlacement(
                    "relabeling breaks center-switch contiguity".into(),
                ));
            }
            CenterSwitch { low: new_low, span: *span }
        }
        MultiControlledX { controls, target } => MultiControlledX {
            controls: controls
                .iter()
                .map(|c| Control { qubit: p[c.qubit], polarity: c.polarity })
                .collect(),
            target: p[*target],
        },
        Controlled { control, inner } => Gate::controlled(p[*control], relabel_gate(inner, p)?),
    })
}

impl<T: Real> fmt::Display for Circuit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
