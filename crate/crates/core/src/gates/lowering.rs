//! Lowering of the typed gate set to single-qubit gates plus CX.
//!
//! Rules:
//! * SWAP → three CX.
//! * Center-switch → its multi-controlled-X palindrome, each gate lowered.
//! * Negative controls → X on the control before and after the gate.
//! * Toffoli → the standard six-CX construction with T/T† phases.
//! * k ≥ 3 controls → `H · C^k P(π) · H` on the target, where the
//!   multi-controlled phase recurses without ancillas:
//!   `C^k P(φ) = CP(φ/2)[c_k] · C^{k−1}X[→c_k] · CP(−φ/2)[c_k] · C^{k−1}X[→c_k] · C^{k−1}P(φ/2)`.
//! * Controlled single-qubit gates use fixed CX sandwiches; a controlled
//!   SWAP or center-switch controls only the middle gate of its palindrome.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::Result;
use crate::gates::{center_switch_transpositions, Circuit, Control, Gate, Polarity};
use crate::scalar::Real;

/// Rewrites `circuit` over single-qubit gates and singly-controlled X.
pub fn lower_to_basis<T: Real>(circuit: &Circuit<T>) -> Result<Circuit<T>> {
    let mut out = Vec::new();
    for g in circuit.gates() {
        lower_gate(g, &mut out);
    }
    Circuit::from_gates(circuit.n(), out)
}

/// True for gates allowed in a lowered circuit.
pub fn is_basis_gate<T: Real>(g: &Gate<T>) -> bool {
    g.is_single_qubit() || g.is_cx()
}

fn lower_gate<T: Real>(g: &Gate<T>, out: &mut Vec<Gate<T>>) {
    match g {
        Gate::Swap(a, b) => {
            out.push(Gate::cx(*a, *b));
            out.push(Gate::cx(*b, *a));
            out.push(Gate::cx(*a, *b));
        }
        Gate::CenterSwitch { low, span } => {
            for (controls, target) in shifted_transpositions(*low, *span) {
                lower_mcx(&controls, target, out);
            }
        }
        Gate::MultiControlledX { controls, target } => lower_mcx(controls, *target, out),
        Gate::Controlled { control, inner } => lower_controlled(*control, inner, out),
        single => out.push(single.clone()),
    }
}

fn shifted_transpositions(low: usize, span: usize) -> Vec<(Vec<Control>, usize)> {
    center_switch_transpositions(span)
        .into_iter()
        .map(|(cs, t)| {
            let cs = cs.into_iter().map(|c| Control { qubit: c.qubit + low, polarity: c.polarity });
            (cs.collect(), t + low)
        })
        .collect()
}

fn lower_mcx<T: Real>(controls: &[Control], target: usize, out: &mut Vec<Gate<T>>) {
    let negated: Vec<usize> =
        controls.iter().filter(|c| c.polarity == Polarity::Zero).map(|c| c.qubit).collect();
    let positive: Vec<usize> = controls.iter().map(|c| c.qubit).collect();
    out.extend(negated.iter().map(|&q| Gate::X(q)));
    match positive.as_slice() {
        [] => out.push(Gate::X(target)),
        [c] => out.push(Gate::cx(*c, target)),
        [a, b] => toffoli(*a, *b, target, out),
        _ => {
            out.push(Gate::H(target));
            lower_mc_phase(&positive, target, T::lit(PI), out);
            out.push(Gate::H(target));
        }
    }
    out.extend(negated.iter().map(|&q| Gate::X(q)));
}

fn toffoli<T: Real>(a: usize, b: usize, t: usize, out: &mut Vec<Gate<T>>) {
    let t_on = |q| Gate::phase(q, T::lit(FRAC_PI_4));
    let tdg_on = |q| Gate::phase(q, T::lit(-FRAC_PI_4));
    out.extend([
        Gate::H(t),
        Gate::cx(b, t),
        tdg_on(t),
        Gate::cx(a, t),
        t_on(t),
        Gate::cx(b, t),
        tdg_on(t),
        Gate::cx(a, t),
        t_on(b),
        t_on(t),
        Gate::H(t),
        Gate::cx(a, b),
        t_on(a),
        tdg_on(b),
        Gate::cx(a, b),
    ]);
}

fn controlled_phase<T: Real>(c: usize, t: usize, phi: T, out: &mut Vec<Gate<T>>) {
    let half = phi / T::lit(2.0);
    out.extend([
        Gate::phase(c, half),
        Gate::cx(c, t),
        Gate::phase(t, -half),
        Gate::cx(c, t),
        Gate::phase(t, half),
    ]);
}

/// `C^k P(φ)` with all controls positive.
fn lower_mc_phase<T: Real>(controls: &[usize], t: usize, phi: T, out: &mut Vec<Gate<T>>) {
    match controls {
        [] => out.push(Gate::phase(t, phi)),
        [c] => controlled_phase(*c, t, phi, out),
        [rest @ .., last] => {
            let half = phi / T::lit(2.0);
            let fan: Vec<Control> = rest.iter().map(|&q| Control::one(q)).collect();
            controlled_phase(*last, t, half, out);
            lower_mcx(&fan, *last, out);
            controlled_phase(*last, t, -half, out);
            lower_mcx(&fan, *last, out);
            lower_mc_phase(rest, t, half, out);
        }
    }
}

fn lower_controlled<T: Real>(c: usize, inner: &Gate<T>, out: &mut Vec<Gate<T>>) {
    match inner {
        Gate::I(_) => {}
        Gate::X(t) => out.push(Gate::cx(c, *t)),
        Gate::Y(t) => {
            out.push(Gate::phase(*t, T::lit(-FRAC_PI_2)));
            out.push(Gate::cx(c, *t));
            out.push(Gate::phase(*t, T::lit(FRAC_PI_2)));
        }
        Gate::Z(t) => out.extend([Gate::H(*t), Gate::cx(c, *t), Gate::H(*t)]),
        Gate::H(t) => {
            // H = RY(π/2)·Z
            lower_controlled(c, &Gate::Z(*t), out);
            lower_controlled(c, &Gate::ry(*t, T::lit(FRAC_PI_2)), out);
        }
        Gate::Ry { qubit, angle } => {
            let half = *angle / T::lit(2.0);
            out.extend([
                Gate::ry(*qubit, half),
                Gate::cx(c, *qubit),
                Gate::ry(*qubit, -half),
                Gate::cx(c, *qubit),
            ]);
        }
        Gate::Phase { qubit, angle } => controlled_phase(c, *qubit, *angle, out),
        Gate::Swap(a, b) => {
            out.push(Gate::cx(*a, *b));
            lower_mcx(&[Control::one(c), Control::one(*b)], *a, out);
            out.push(Gate::cx(*a, *b));
        }
        Gate::CenterSwitch { low, span } => {
            let seq = shifted_transpositions(*low, *span);
            let mid = seq.len() / 2;
            for (k, (controls, target)) in seq.iter().enumerate() {
                if k == mid {
                    let mut extended = controls.clone();
                    extended.push(Control::one(c));
                    lower_mcx(&extended, *target, out);
                } else {
                    lower_mcx(controls, *target, out);
                }
            }
        }
        Gate::MultiControlledX { controls, target } => {
            let mut extended = controls.clone();
            extended.push(Control::one(c));
            lower_mcx(&extended, *target, out);
        }
        Gate::Controlled { control, inner } => {
            let mut tmp = Vec::new();
            lower_controlled(*control, inner, &mut tmp);
            // CX picks up the outer control and becomes a Toffoli
            for g in &tmp {
                lower_controlled(c, g, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::circuit_to_matrix;

    fn check(n: usize, g: Gate<f64>) -> Circuit<f64> {
        let c = Circuit::from_gates(n, [g.clone()]).unwrap();
        let low = lower_to_basis(&c).unwrap();
        assert!(low.gates().iter().all(is_basis_gate), "{g}: non-basis output");
        let (a, b) = (circuit_to_matrix(&c).unwrap(), circuit_to_matrix(&low).unwrap());
        assert!(a.approx_eq_up_to_phase(&b, 1e-10), "{g}: lowering changed semantics");
        low
    }

    #[test]
    fn single_qubit_unchanged() {
        let low = check(1, Gate::H(0));
        assert_eq!(low.gates(), &[Gate::H(0)]);
    }

    #[test]
    fn swap_three_cx_depth_three() {
        let low = check(2, Gate::Swap(0, 1));
        assert_eq!(low.gate_count(), 3);
        assert_eq!(low.depth(), 3);
        assert!(low.gates().iter().all(Gate::is_cx));
    }

    #[test]
    fn toffoli_six_cx() {
        let low = check(3, Gate::mcx(vec![Control::one(0), Control::one(2)], 1));
        assert_eq!(low.gates().iter().filter(|g| g.is_cx()).count(), 6);
    }

    #[test]
    fn mixed_polarity_and_many_controls() {
        check(3, Gate::mcx(vec![Control::zero(2), Control::one(0)], 1));
        check(4, Gate::mcx(vec![Control::one(0), Control::zero(1), Control::one(3)], 2));
        check(5, Gate::mcx((0..4).map(Control::one).collect(), 4));
        check(5, Gate::mcx(vec![Control::zero(4), Control::zero(0), Control::one(2), Control::one(1)], 3));
    }

    #[test]
    fn center_switch_span_three() {
        check(3, Gate::CenterSwitch { low: 0, span: 3 });
        check(5, Gate::CenterSwitch { low: 1, span: 4 });
    }

    #[test]
    fn controlled_variants() {
        let inners: Vec<Gate<f64>> = vec![
            Gate::I(0),
            Gate::X(0),
            Gate::Y(1),
            Gate::Z(0),
            Gate::H(1),
            Gate::ry(0, 0.73),
            Gate::phase(1, -1.1),
            Gate::Swap(0, 1),
            Gate::CenterSwitch { low: 0, span: 2 },
            Gate::mcx(vec![Control::zero(0)], 1),
            Gate::controlled(0, Gate::ry(1, 0.4)),
            Gate::controlled(1, Gate::Y(0)),
        ];
        for inner in inners {
            check(3, Gate::controlled(2, inner));
        }
        check(4, Gate::controlled(3, Gate::CenterSwitch { low: 0, span: 3 }));
        check(4, Gate::controlled(0, Gate::controlled(3, Gate::Swap(1, 2))));
    }
}
