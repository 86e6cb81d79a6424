//! Acceptance suite: one line per criterion, then a single assertion that
//! every criterion passed. Run with `--nocapture` to see the lines.

use std::f64::consts::TAU;
use std::fs;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vqls_core::decomposition::{assemble_tridiagonal, decompose, reconstruct};
use vqls_core::gates::{center_switch_matrix, center_switch_transpositions, lower_center_switch};
use vqls_core::matrix::circuit_to_matrix;
use vqls_core::vqls::*;
use vqls_core::{Circuit, Control, Gate, PauliString, Scheme, StateVector, TridiagonalSpec, UnitaryTerm};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn problem(n: usize, alpha: f64, beta: f64, scheme: Scheme) -> ProblemSpec<f64> {
    ProblemSpec::new(TridiagonalSpec::new(n, alpha, beta).unwrap(), scheme).unwrap()
}

fn decomposition_correctness() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for (scheme, ns) in [(Scheme::Pauli, 1..=6), (Scheme::Multiqubit, 2..=6)] {
        for n in ns {
            for _ in 0..20 {
                let (alpha, beta) = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
                let spec = TridiagonalSpec::new(n, alpha, beta).unwrap();
                let d = decompose(&spec, scheme).map_err(|e| e.to_string())?;
                let r = (&assemble_tridiagonal(&spec).unwrap() - &reconstruct(&d).unwrap()).frobenius_norm();
                worst = worst.max(r);
                cases += 1;
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    check(worst <= 1e-12, format!("worst residual {worst:e}"))?;
    check(secs < 5.0, format!("took {secs:.2} s"))?;
    Ok(format!("{cases} cases, worst residual {worst:e}, {secs:.2} s"))
}

fn term_names(n: usize, scheme: Scheme) -> Vec<String> {
    let d = decompose(&TridiagonalSpec::new(n, 2.0, -1.0).unwrap(), scheme).unwrap();
    d.terms().iter().map(|(_, t)| t.to_string()).collect()
}

fn golden_term_sets() -> Outcome {
    let pauli = |s: &[&str]| -> Vec<String> {
        s.iter().map(|c| PauliString::from_compact(c).unwrap().to_string()).collect()
    };
    let expected_pauli = [
        pauli(&["II", "IX", "XX", "YY"]),
        pauli(&["III", "IIX", "IXX", "IYY", "XXX", "XYY", "YXY", "YYX"]),
        pauli(&[
            "IIII", "IIIX", "IIXX", "IIYY", "IXXX", "IXYY", "IYXY", "IYYX", "XXXX", "XXYY", "XYXY", "XYYX", "YXXY",
            "YXYX", "YYXX", "YYYY",
        ]),
    ];
    let mut expected_multi: Vec<Vec<String>> = Vec::new();
    for n in 2..=4usize {
        let mut names = vec![UnitaryTerm::Pauli(PauliString::from_compact(&format!("{}X", "I".repeat(n - 1))).unwrap()).to_string()];
        names.extend((2..=n).map(|span| UnitaryTerm::CenterSwitch { n, span }.to_string()));
        names.extend(
            (0..1usize << n)
                .filter(|m| m.count_ones() % 2 == 0)
                .map(|m| PauliString::z_string(n, m).to_string()),
        );
        expected_multi.push(names);
    }
    for (k, n) in (2..=4).enumerate() {
        let p = term_names(n, Scheme::Pauli);
        let m = term_names(n, Scheme::Multiqubit);
        check(p == expected_pauli[k], format!("pauli n={n}: {p:?}"))?;
        check(p.len() == 1 << n, format!("pauli n={n} count {}", p.len()))?;
        let mut a = m.clone();
        let mut b = expected_multi[k].clone();
        a.sort();
        b.sort();
        check(a == b, format!("multiqubit n={n}: {m:?}"))?;
        check(m.len() == (1 << (n - 1)) + n, format!("multiqubit n={n} count {}", m.len()))?;
    }
    let m4 = term_names(4, Scheme::Multiqubit);
    check(m4.iter().any(|s| s == "CS^(2)_(3-0)"), "CS^(2)_(3-0) missing at n=4")?;
    check(m4.iter().any(|s| s == "Z3 Z2 Z1 Z0"), "Z3 Z2 Z1 Z0 missing at n=4")?;
    Ok("n=2,3,4: pauli 4/8/16, multiqubit 4/7/12 terms".into())
}

fn four_by_four_coefficients() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut pairs = vec![(2.0, -1.0)];
    pairs.extend((0..10).map(|_| (rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))));
    for (alpha, beta) in pairs {
        let d = decompose(&TridiagonalSpec::new(2, alpha, beta).unwrap(), Scheme::Pauli).unwrap();
        let got: Vec<(String, f64)> = d
            .terms()
            .iter()
            .map(|(c, t)| match t {
                UnitaryTerm::Pauli(p) => (p.compact(), c.re),
                other => (other.to_string(), c.re),
            })
            .collect();
        let want = vec![
            ("II".to_string(), alpha),
            ("IX".to_string(), beta),
            ("XX".to_string(), beta / 2.0),
            ("YY".to_string(), beta / 2.0),
        ];
        check(got == want, format!("({alpha}, {beta}): {got:?}"))?;
    }
    let d = decompose(&TridiagonalSpec::new(2, 2.0, -1.0).unwrap(), Scheme::Pauli).unwrap();
    let c: Vec<f64> = d.terms().iter().map(|(c, _)| c.re).collect();
    check(c == [2.0, -1.0, -0.5, -0.5], format!("{c:?}"))?;
    Ok("(II, IX, XX, YY) = (2, -1, -0.5, -0.5)".into())
}

fn center_switch_lowering() -> Outcome {
    for span in 2..=8 {
        let c = lower_center_switch::<f64>(span).map_err(|e| e.to_string())?;
        check(c.gate_count() == 2 * span - 1, format!("span {span}: {} gates", c.gate_count()))?;
        check(
            c.gates().iter().all(|g| matches!(g, Gate::MultiControlledX { .. })),
            format!("span {span}: non-MCX gate"),
        )?;
        check(
            circuit_to_matrix(&c).unwrap() == center_switch_matrix(span).unwrap(),
            format!("span {span}: matrix differs"),
        )?;
    }
    // (011,001)(001,000)(000,100)(001,000)(011,001)
    let expected = [
        (vec![Control::one(0), Control::zero(2)], 1),
        (vec![Control::zero(1), Control::zero(2)], 0),
        (vec![Control::zero(0), Control::zero(1)], 2),
        (vec![Control::zero(1), Control::zero(2)], 0),
        (vec![Control::one(0), Control::zero(2)], 1),
    ];
    check(center_switch_transpositions(3) == expected, "n=3 transposition sequence")?;
    Ok("spans 2..8 give 2n-1 MCX gates with exact matrices; n=3 sequence matches".into())
}

fn ansatz_state(n: usize, p: &Params<f64>) -> StateVector<f64> {
    let v = AnsatzSpec::product_ry(n).unwrap().circuit(p).unwrap();
    StateVector::new_zero_state(n).unwrap().apply_circuit(&v).unwrap()
}

fn cost_hamiltonian_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut worst_h, mut worst_s) = (0.0f64, 0.0f64);
    for n in [1, 2] {
        let prob = problem(n, 2.0, -1.0, Scheme::Pauli);
        let h = hamiltonian_global(&prob).unwrap();
        let a = AnsatzSpec::product_ry(n).unwrap();
        let other = (n >= 2).then(|| problem(n, 2.0, -1.0, Scheme::Multiqubit));
        for _ in 0..50 {
            let p = Params::new((0..n).map(|_| rng.random_range(0.0..TAU)).collect()).unwrap();
            let nn = cost(&prob, &a, &p, CostKind::NonNormalized, EvalMode::Exact).unwrap().value;
            let x = ansatz_state(n, &p);
            let e = x.inner_product(&h.mat_apply(&x).unwrap()).unwrap().re;
            worst_h = worst_h.max((nn - e).abs());
            if let Some(m) = &other {
                for kind in [CostKind::Normalized, CostKind::NonNormalized] {
                    let x = cost(&prob, &a, &p, kind, EvalMode::Exact).unwrap().value;
                    let y = cost(m, &a, &p, kind, EvalMode::Exact).unwrap().value;
                    worst_s = worst_s.max((x - y).abs());
                }
            }
        }
    }
    check(worst_h <= 1e-10, format!("H_G gap {worst_h:e}"))?;
    check(worst_s <= 1e-10, format!("scheme gap {worst_s:e}"))?;
    Ok(format!("H_G gap {worst_h:e}, scheme gap {worst_s:e} (scheme comparison at n=2)"))
}

fn two_by_two_experiment() -> Outcome {
    let prob = problem(1, 2.0, -1.0, Scheme::Pauli);
    let a = AnsatzSpec::product_ry(1).unwrap();
    let mut lines = Vec::new();
    for seed in 0..5 {
        let mut cfg = OptimizerConfig::defaults(EvalMode::Exact, seed);
        cfg.tol = 1e-10;
        let t = optimize(&prob, &a, CostKind::Normalized, EvalMode::Exact, &cfg).map_err(|e| e.to_string())?;
        check(
            t.final_cost <= 1e-6 && t.final_fidelity >= 0.999 && t.evaluations <= 500,
            format!("seed {seed}: cost {:e} fidelity {} evals {}", t.final_cost, t.final_fidelity, t.evaluations),
        )?;
        lines.push(format!("{:.1e}/{}", t.final_cost, t.evaluations));
    }
    Ok(format!("seeds 0..4 cost/evals: {}", lines.join(" ")))
}

fn four_by_four_experiment() -> Outcome {
    let prob = problem(2, 2.0, -1.0, Scheme::Pauli);
    let a = AnsatzSpec::product_ry(2).unwrap();
    let mut lines = Vec::new();
    for seed in 0..5 {
        let cfg = OptimizerConfig::defaults(EvalMode::Exact, seed);
        let t = optimize(&prob, &a, CostKind::NonNormalized, EvalMode::Exact, &cfg).map_err(|e| e.to_string())?;
        let best = t.best_fidelity();
        check(best >= 0.95, format!("seed {seed}: best fidelity {best}"))?;
        check(best <= 25.0 / 26.0 + 1e-9, format!("seed {seed}: fidelity {best} above the product-state bound"))?;
        check(t.final_cost > 0.01, format!("seed {seed}: final cost {}", t.final_cost))?;
        lines.push(format!("{best:.4}/{:.3}", t.final_cost));
    }
    Ok(format!("seeds 0..4 best fidelity/final cost: {} (bound 25/26 = {:.4})", lines.join(" "), 25.0 / 26.0))
}

fn shot_statistics() -> Outcome {
    let prob = problem(1, 2.0, -1.0, Scheme::Pauli);
    let a = AnsatzSpec::product_ry(1).unwrap();
    let mut fids = Vec::new();
    for seed in 0..5 {
        let mode = EvalMode::shots(8192, seed).unwrap();
        let cfg = OptimizerConfig::defaults(mode, seed);
        let t = optimize(&prob, &a, CostKind::Normalized, mode, &cfg).map_err(|e| e.to_string())?;
        fids.push(t.final_fidelity);
    }
    let mut sorted = fids.clone();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[2];
    check(median >= 0.98, format!("median fidelity {median}"))?;
    check(sorted[0] >= 0.90, format!("min fidelity {}", sorted[0]))?;

    // per-term estimates at a generic point
    let count = 8192u64;
    let v = a.circuit(&Params::new(vec![1.3]).unwrap()).unwrap();
    let empty = Circuit::new(1).unwrap();
    let mut tests: Vec<(Circuit<f64>, Circuit<f64>)> = Vec::new();
    let terms = prob.decomposition().terms();
    let circuits: Vec<Circuit<f64>> = terms.iter().map(|(_, t)| t.circuit()).collect();
    for l in 0..circuits.len() {
        for m in l + 1..circuits.len() {
            let mut u = circuits[l].inverse();
            u.append(&circuits[m]).unwrap();
            tests.push((v.clone(), u));
        }
        let mut u = v.clone();
        u.append(&circuits[l]).unwrap().append(&prob.b_prep().inverse()).unwrap();
        tests.push((empty.clone(), u));
    }
    let reps = 200u64;
    let mut worst_z = 0.0f64;
    for (t, (prep, u)) in tests.iter().enumerate() {
        for part in [Part::Re, Part::Im] {
            let exact = estimate_part(prep, u, part, EvalMode::Exact, StreamKey::new(0, 0)).unwrap();
            let mode = EvalMode::shots(count, 99).unwrap();
            let mean = (0..reps)
                .map(|r| estimate_part(prep, u, part, mode, StreamKey::new(r, t as u64)).unwrap())
                .sum::<f64>()
                / reps as f64;
            let se = ((1.0 - exact * exact).max(0.0) / count as f64).sqrt() / (reps as f64).sqrt();
            let z = if se > 0.0 { (mean - exact).abs() / se } else { (mean - exact).abs() * 1e12 };
            worst_z = worst_z.max(z);
        }
    }
    check(worst_z <= 4.0, format!("worst deviation {worst_z:.2} standard errors"))?;
    Ok(format!(
        "fidelities {:?}, median {median:.4}; per-term means within {worst_z:.2} SE",
        fids.iter().map(|f| format!("{f:.4}")).collect::<Vec<_>>()
    ))
}

fn depth_ordering() -> Outcome {
    let a = AnsatzSpec::product_ry(2).unwrap();
    let p = Params::new(vec![0.7, 1.9]).unwrap();
    let pauli = depth_report(&problem(2, 2.0, -1.0, Scheme::Pauli), &a, &p).unwrap();
    let multi = depth_report(&problem(2, 2.0, -1.0, Scheme::Multiqubit), &a, &p).unwrap();
    check(
        multi.max_depth > pauli.max_depth,
        format!("multiqubit {} vs pauli {}", multi.max_depth, pauli.max_depth),
    )?;
    Ok(format!("max lowered depth multiqubit {} > pauli {}", multi.max_depth, pauli.max_depth))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let configs: [&[&str]; 3] = [
        &["run", "--n", "2", "--cost", "nonnormalized", "--seed", "4"],
        &["run", "--n", "1", "--mode", "shots", "--seed", "11"],
        &["sweep", "--seeds", "3", "--n", "1", "--mode", "shots", "--max-evals", "80"],
    ];
    let mut compared = 0;
    for (k, args) in configs.iter().enumerate() {
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let out = dir.path().join(format!("c{k}-r{rep}"));
            let status = Command::new(env!("CARGO_BIN_EXE_vqls"))
                .args(*args)
                .arg("--out")
                .arg(&out)
                .output()
                .map_err(|e| e.to_string())?
                .status;
            check(status.success(), format!("{args:?} exited with {status}"))?;
            outputs.push(out);
        }
        let mut files = Vec::new();
        let mut stack = vec![outputs[0].clone()];
        while let Some(d) = stack.pop() {
            for entry in fs::read_dir(&d).unwrap() {
                let path = entry.unwrap().path();
                if path.is_dir() {
                    stack.push(path);
                } else {
                    files.push(path.strip_prefix(&outputs[0]).unwrap().to_path_buf());
                }
            }
        }
        for f in files {
            let a = fs::read(outputs[0].join(&f)).unwrap();
            let b = fs::read(outputs[1].join(&f)).map_err(|e| format!("{}: {e}", f.display()))?;
            check(a == b, format!("{args:?}: {} differs", f.display()))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} artifact files byte-identical across reruns"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("decomposition correctness", decomposition_correctness),
        ("golden term sets", golden_term_sets),
        ("four-by-four Pauli coefficients", four_by_four_coefficients),
        ("center-switch lowering", center_switch_lowering),
        ("cost and Hamiltonian equivalence", cost_hamiltonian_equivalence),
        ("two-by-two experiment", two_by_two_experiment),
        ("four-by-four experiment", four_by_four_experiment),
        ("shot-mode statistics", shot_statistics),
        ("depth ordering", depth_ordering),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                println!("[FAIL] {:>2} {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
