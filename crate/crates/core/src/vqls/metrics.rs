//! Gate depth and count of the Hadamard-test circuits behind one cost
//! evaluation, after lowering to single-qubit gates plus CX.

use crate::decomposition::Scheme;
use crate::error::Result;
use crate::gates::{lower_to_basis, Circuit};
use crate::scalar::Real;

use super::hadamard::{hadamard_test_circuit, Part};
use super::{AnsatzSpec, Params, ProblemSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub scheme: Scheme,
    pub term_count: usize,
    pub circuit_count: usize,
    pub max_depth: usize,
    pub total_gates: usize,
    /// CX gates in the lowered, uncontrolled decomposition terms.
    pub term_cx: usize,
}

/// Real-part Hadamard tests of one cost evaluation: `A_l† A_m` under the
/// ansatz state for every pair `l < m`, then `B† A_l V` for every `l`.
pub fn cost_circuits<T: Real>(
    prob: &ProblemSpec<T>,
    ansatz: &AnsatzSpec,
    params: &Params<T>,
) -> Result<Vec<Circuit<T>>> {
    let v = ansatz.circuit(params)?;
    let terms: Vec<Circuit<T>> = prob.decomposition().terms().iter().map(|(_, t)| t.circuit()).collect();
    let mut out = Vec::new();
    for l in 0..terms.len() {
        for m in l + 1..terms.len() {
            let mut u = terms[l].inverse();
            u.append(&terms[m])?;
            out.push(hadamard_test_circuit(&v, &u, Part::Re)?);
        }
    }
    let empty = Circuit::new(prob.n())?;
    let b_dag = prob.b_prep().inverse();
    for t in &terms {
        let mut u = v.clone();
        u.append(t)?.append(&b_dag)?;
        out.push(hadamard_test_circuit(&empty, &u, Part::Re)?);
    }
    Ok(out)
}

pub fn depth_report<T: Real>(prob: &ProblemSpec<T>, ansatz: &AnsatzSpec, params: &Params<T>) -> Result<DepthReport> {
    let lowered = cost_circuits(prob, ansatz, params)?
        .iter()
        .map(lower_to_basis)
        .collect::<Result<Vec<_>>>()?;
    let mut term_cx = 0;
    for (_, t) in prob.decomposition().terms() {
        term_cx += lower_to_basis(&t.circuit::<T>())?.gates().iter().filter(|g| g.is_cx()).count();
    }
    Ok(DepthReport {
        scheme: prob.decomposition().scheme(),
        term_count: prob.decomposition().len(),
        circuit_count: lowered.len(),
        max_depth: lowered.iter().map(Circuit::depth).max().unwrap_or(0),
        total_gates: lowered.iter().map(Circuit::gate_count).sum(),
        term_cx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::TridiagonalSpec;

    fn report(n: usize, beta: f64, scheme: Scheme) -> DepthReport {
        let prob = ProblemSpec::new(TridiagonalSpec::new(n, 2.0, beta).unwrap(), scheme).unwrap();
        let a = AnsatzSpec::product_ry(n).unwrap();
        depth_report(&prob, &a, &Params::new(vec![0.3; n]).unwrap()).unwrap()
    }

    #[test]
    fn multiqubit_is_deeper_at_two_qubits() {
        let p = report(2, -1.0, Scheme::Pauli);
        let m = report(2, -1.0, Scheme::Multiqubit);
        assert!(m.max_depth > p.max_depth, "{m:?} vs {p:?}");
        assert_eq!(p.circuit_count, 6 + 4);
        assert_eq!(p.term_cx, 0);
        assert_eq!(m.term_cx, 3);
    }

    #[test]
    fn diagonal_only_has_no_term_cx() {
        for scheme in [Scheme::Pauli, Scheme::Multiqubit] {
            let r = report(3, 0.0, scheme);
            assert_eq!(r.term_cx, 0);
            assert_eq!(r.term_count, 1);
        }
    }
}
