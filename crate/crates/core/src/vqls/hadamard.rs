//! Hadamard-test estimation of `⟨0|prep† · U · prep|0⟩`.
//!
//! The ancilla is the qubit just above the register. With `H`, an optional
//! `S†`, controlled `U` and a closing `H`, the ancilla reads 0 with
//! probability `(1 + Re⟨U⟩)/2`, or `(1 + Im⟨U⟩)/2` when `S†` is present.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use std::f64::consts::FRAC_PI_2;

use crate::error::{Result, VqlsError};
use crate::gates::{Circuit, Gate};
use crate::scalar::{Real, C};
use crate::statevector::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalMode {
    /// Expectation values read off the statevector.
    Exact,
    /// `count` simulated measurements per Hadamard test.
    Shots { count: u64, seed: u64 },
}

impl EvalMode {
    pub fn shots(count: u64, seed: u64) -> Result<Self> {
        if count == 0 {
            return Err(VqlsError::InvalidArgument("shot count must be >= 1".into()));
        }
        Ok(EvalMode::Shots { count, seed })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Re,
    Im,
}

/// Identifies one sampled Hadamard test within a run; each key owns an
/// independent random stream, so the order in which tests are evaluated does
/// not affect their outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub eval: u64,
    pub term: u64,
}

impl StreamKey {
    pub fn new(eval: u64, term: u64) -> Self {
        StreamKey { eval, term }
    }

    /// Stream 0 is left to the caller (e.g. initial parameters). Injective
    /// for `eval < 2^32 − 1` and `term < 2^31`.
    fn stream(self, part: Part) -> u64 {
        debug_assert!(self.eval < u32::MAX as u64 && self.term < 1 << 31);
        ((self.eval + 1) << 32) | (self.term << 1) | (part == Part::Im) as u64
    }

    pub fn rng(self, seed: u64, part: Part) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(self.stream(part));
        rng
    }
}

/// `prep`, then the Hadamard test of `u` with the ancilla on qubit `n`.
pub fn hadamard_test_circuit<T: Real>(prep: &Circuit<T>, u: &Circuit<T>, part: Part) -> Result<Circuit<T>> {
    if prep.n() != u.n() {
        return Err(VqlsError::DimensionMismatch { expected: prep.n(), got: u.n() });
    }
    let anc = prep.n();
    let mut c = prep.widened(anc + 1)?;
    c.push(Gate::H(anc))?;
    if part == Part::Im {
        c.push(Gate::phase(anc, T::lit(-FRAC_PI_2)))?;
    }
    c.append(&u.controlled(anc)?)?;
    c.push(Gate::H(anc))?;
    Ok(c)
}

/// Ancilla-zero probability of the Hadamard test, from the statevector.
pub fn hadamard_test_p0<T: Real>(prep: &Circuit<T>, u: &Circuit<T>, part: Part) -> Result<T> {
    let c = hadamard_test_circuit(prep, u, part)?;
    StateVector::new_zero_state(c.n())?.apply_circuit(&c)?.prob_zero(prep.n())
}

/// `2k/count − 1` for `k ~ Binomial(count, p0)`; lies in `[−1, 1]`.
pub fn sample_hadamard_estimate<T: Real>(p0: T, count: u64, rng: &mut ChaCha8Rng) -> Result<T> {
    let p = p0.as_f64().clamp(0.0, 1.0);
    let dist = Binomial::new(count, p).map_err(|e| VqlsError::InvalidArgument(e.to_string()))?;
    let k = dist.sample(rng);
    Ok(T::lit(2.0 * k as f64 / count as f64 - 1.0))
}

/// Estimate of one part of `⟨0|prep† U prep|0⟩` under `mode`.
pub fn estimate_part<T: Real>(
    prep: &Circuit<T>,
    u: &Circuit<T>,
    part: Part,
    mode: EvalMode,
    key: StreamKey,
) -> Result<T> {
    match mode {
        EvalMode::Exact => {
            let z = exact_expectation(prep, u)?;
            Ok(if part == Part::Re { z.re } else { z.im })
        }
        EvalMode::Shots { count, seed } => {
            let p0 = hadamard_test_p0(prep, u, part)?;
            sample_hadamard_estimate(p0, count, &mut key.rng(seed, part))
        }
    }
}

/// `⟨0|prep† U prep|0⟩` with both parts estimated under `mode`.
pub fn estimate_overlap_keyed<T: Real>(
    prep: &Circuit<T>,
    u: &Circuit<T>,
    mode: EvalMode,
    key: StreamKey,
) -> Result<C<T>> {
    Ok(C::new(
        estimate_part(prep, u, Part::Re, mode, key)?,
        estimate_part(prep, u, Part::Im, mode, key)?,
    ))
}

/// [`estimate_overlap_keyed`] with key `(0, 0)`.
pub fn estimate_overlap_re_im<T: Real>(prep: &Circuit<T>, u: &Circuit<T>, mode: EvalMode) -> Result<C<T>> {
    estimate_overlap_keyed(prep, u, mode, StreamKey::new(0, 0))
}

fn exact_expectation<T: Real>(prep: &Circuit<T>, u: &Circuit<T>) -> Result<C<T>> {
    if prep.n() != u.n() {
        return Err(VqlsError::DimensionMismatch { expected: prep.n(), got: u.n() });
    }
    let psi = StateVector::new_zero_state(prep.n())?.apply_circuit(prep)?;
    psi.inner_product(&psi.apply_circuit(u)?)
}
