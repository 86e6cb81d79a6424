use proptest::prelude::*;
use vqls_core::gates::{lower_center_switch, lower_to_basis, center_switch_matrix};
use vqls_core::matrix::circuit_to_matrix;
use vqls_core::{Circuit, Control, Gate, Polarity, StateVector, C};

const N: usize = 4;

fn distinct(k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..N).collect::<Vec<_>>()).prop_shuffle().prop_map(move |v| v[..k].to_vec())
}

fn gate() -> impl Strategy<Value = Gate<f64>> {
    let angle = -6.3f64..6.3;
    prop_oneof![
        (0..N).prop_map(Gate::X),
        (0..N).prop_map(Gate::Y),
        (0..N).prop_map(Gate::Z),
        (0..N).prop_map(Gate::H),
        ((0..N), angle.clone()).prop_map(|(q, a)| Gate::ry(q, a)),
        ((0..N), angle.clone()).prop_map(|(q, a)| Gate::phase(q, a)),
        distinct(2).prop_map(|q| Gate::Swap(q[0], q[1])),
        (0..=N - 2).prop_flat_map(|low| (Just(low), 2..=N - low))
            .prop_map(|(low, span)| Gate::CenterSwitch { low, span }),
        (distinct(4), 1..=3usize, any::<u8>()).prop_map(|(q, k, bits)| {
            let controls = (0..k).map(|i| Control { qubit: q[i], polarity: Polarity::from_bit(bits >> i & 1 == 1) }).collect();
            Gate::mcx(controls, q[3])
        }),
        (distinct(2), angle).prop_map(|(q, a)| Gate::controlled(q[0], Gate::ry(q[1], a))),
        distinct(3).prop_map(|q| Gate::controlled(q[0], Gate::Swap(q[1], q[2]))),
    ]
}

fn circuit() -> impl Strategy<Value = Circuit<f64>> {
    prop::collection::vec(gate(), 0..8).prop_map(|g| Circuit::from_gates(N, g).unwrap())
}

fn random_state(values: &[f64]) -> StateVector<f64> {
    let amps = values.chunks(2).map(|p| C::new(p[0], p[1])).collect();
    StateVector::from_amplitudes(amps).unwrap().normalized().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circuits_preserve_norm(c in circuit(), v in prop::collection::vec(-1.0f64..1.0, 32)) {
        prop_assume!(v.iter().any(|x| x.abs() > 1e-3));
        let s = random_state(&v);
        prop_assert!((s.apply_circuit(&c).unwrap().norm_sqr() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn inverse_undoes_circuit(c in circuit(), v in prop::collection::vec(-1.0f64..1.0, 32)) {
        prop_assume!(v.iter().any(|x| x.abs() > 1e-3));
        let s = random_state(&v);
        let back = s.apply_circuit(&c).unwrap().apply_circuit(&c.inverse()).unwrap();
        let diff = &back - &s;
        prop_assert!(diff.norm_sqr().sqrt() <= 1e-12);
    }

    #[test]
    fn lowering_preserves_semantics(c in circuit()) {
        let low = lower_to_basis(&c).unwrap();
        prop_assert!(low.gates().iter().all(|g| g.is_single_qubit() || g.is_cx()));
        let (a, b) = (circuit_to_matrix(&c).unwrap(), circuit_to_matrix(&low).unwrap());
        prop_assert!(a.approx_eq_up_to_phase(&b, 1e-10));
    }

    #[test]
    fn circuit_matrices_are_unitary(c in circuit()) {
        prop_assert!(circuit_to_matrix(&c).unwrap().is_unitary(1e-12));
    }

    #[test]
    fn controlled_circuit_acts_only_on_one_branch(c in prop::collection::vec(gate(), 0..5), v in prop::collection::vec(-1.0f64..1.0, 32)) {
        prop_assume!(v.iter().any(|x| x.abs() > 1e-3));
        let inner = Circuit::from_gates(N, c).unwrap();
        let ctl = inner.controlled(N).unwrap();
        let s = random_state(&v);
        // control |0⟩: untouched
        let off = s.extend_zero(1).unwrap();
        let diff = &off.apply_circuit(&ctl).unwrap() - &off;
        prop_assert!(diff.norm_sqr() <= 1e-24);
        // control |1⟩: upper block gets U|s⟩
        let mut amps = vec![C::new(0.0, 0.0); 1 << N];
        amps.extend_from_slice(s.amplitudes());
        let on = StateVector::from_amplitudes(amps).unwrap().apply_circuit(&ctl).unwrap();
        let expect = s.apply_circuit(&inner).unwrap();
        for (a, b) in on.amplitudes()[1 << N..].iter().zip(expect.amplitudes()) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }
}

#[test]
fn center_switch_lowering_for_all_spans() {
    for span in 2..=8 {
        let c = lower_center_switch::<f64>(span).unwrap();
        assert_eq!(c.gate_count(), 2 * span - 1);
        assert_eq!(circuit_to_matrix(&c).unwrap(), center_switch_matrix(span).unwrap());
    }
}
