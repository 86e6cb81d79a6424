use std::fmt;

use crate::error::{Result, VqlsError};
use crate::scalar::{c, cr, Real, C};

/// Required state of a control qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Empty dot: fires when the control is |0⟩.
    Zero,
    /// Full dot: fires when the control is |1⟩.
    One,
}

impl Polarity {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Polarity::One
        } else {
            Polarity::Zero
        }
    }

    pub fn bit(self) -> bool {
        matches!(self, Polarity::One)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: usize,
    pub polarity: Polarity,
}

impl Control {
    pub fn one(qubit: usize) -> Self {
        Control { qubit, polarity: Polarity::One }
    }

    pub fn zero(qubit: usize) -> Self {
        Control { qubit, polarity: Polarity::Zero }
    }

    #[inline]
    pub(crate) fn satisfied(&self, index: usize) -> bool {
        ((index >> self.qubit) & 1 == 1) == self.polarity.bit()
    }
}

/// A gate of the typed gate set.
///
/// Qubit indices follow the little-endian convention used throughout the
/// crate: basis index `j = Σ q_k 2^k`, so qubit 0 is the least significant bit.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate<T> {
    I(usize),
    X(usize),
    Y(usize),
    Z(usize),
    H(usize),
    /// `[[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]]`.
    Ry { qubit: usize, angle: T },
    /// `diag(1, e^{iφ})`.
    Phase { qubit: usize, angle: T },
    Swap(usize, usize),
    /// Transposition of `01…1` and `10…0` on qubits `low..low + span`, where the
    /// leading bit is qubit `low + span - 1`. Span 2 coincides with SWAP.
    CenterSwitch { low: usize, span: usize },
    MultiControlledX { controls: Vec<Control>, target: usize },
    /// Applies `inner` iff `control` is |1⟩.
    Controlled { control: usize, inner: Box<Gate<T>> },
}

pub(crate) type Mat2<T> = [[C<T>; 2]; 2];

impl<T: Real> Gate<T> {
    pub fn ry(qubit: usize, angle: T) -> Self {
        Gate::Ry { qubit, angle }
    }

    pub fn phase(qubit: usize, angle: T) -> Self {
        Gate::Phase { qubit, angle }
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Gate::MultiControlledX { controls: vec![Control::one(control)], target }
    }

    pub fn mcx(controls: Vec<Control>, target: usize) -> Self {
        Gate::MultiControlledX { controls, target }
    }

    pub fn controlled(control: usize, inner: Gate<T>) -> Self {
        Gate::Controlled { control, inner: Box::new(inner) }
    }

    /// Every qubit the gate touches, controls included, in a fixed order.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::I(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) | Gate::H(q) => vec![*q],
            Gate::Ry { qubit, .. } | Gate::Phase { qubit, .. } => vec![*qubit],
            Gate::Swap(a, b) => vec![*a, *b],
            Gate::CenterSwitch { low, span } => (*low..*low + *span).collect(),
            Gate::MultiControlledX { controls, target } => {
                let mut qs: Vec<usize> = controls.iter().map(|c| c.qubit).collect();
                qs.push(*target);
                qs
            }
            Gate::Controlled { control, inner } => {
                let mut qs = vec![*control];
                qs.extend(inner.qubits());
                qs
            }
        }
    }

    /// Checks index distinctness, range and the per-variant structural rules.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            Gate::CenterSwitch { span, .. } if *span < 2 => {
                return Err(VqlsError::InvalidSpan(*span));
            }
            Gate::MultiControlledX { controls, .. } if controls.is_empty() => {
                return Err(VqlsError::GatePlacement(
                    "multi-controlled X needs at least one control".into(),
                ));
            }
            Gate::Controlled { inner, .. } => {
                // nested structural rules
                inner.validate(usize::MAX)?;
            }
            _ => {}
        }
        let qs = self.qubits();
        if let Some(&q) = qs.iter().find(|&&q| q >= n) {
            return Err(VqlsError::GatePlacement(format!(
                "qubit {q} out of range for {n} qubits"
            )));
        }
        for (i, a) in qs.iter().enumerate() {
            if qs[i + 1..].contains(a) {
                return Err(VqlsError::GatePlacement(format!("qubit {a} used twice")));
            }
        }
        Ok(())
    }

    /// The gate's inverse.
    pub fn inverse(&self) -> Self {
        match self {
            Gate::Ry { qubit, angle } => Gate::Ry { qubit: *qubit, angle: -*angle },
            Gate::Phase { qubit, angle } => Gate::Phase { qubit: *qubit, angle: -*angle },
            Gate::Controlled { control, inner } => Gate::controlled(*control, inner.inverse()),
            g => g.clone(),
        }
    }

    /// True for gates acting on exactly one qubit.
    pub fn is_single_qubit(&self) -> bool {
        matches!(
            self,
            Gate::I(_)
                | Gate::X(_)
                | Gate::Y(_)
                | Gate::Z(_)
                | Gate::H(_)
                | Gate::Ry { .. }
                | Gate::Phase { .. }
        )
    }

    /// True for a singly-controlled X with a |1⟩ control.
    pub fn is_cx(&self) -> bool {
        matches!(self, Gate::MultiControlledX { controls, .. }
            if controls.len() == 1 && controls[0].polarity == Polarity::One)
    }

    /// Target qubit and 2×2 matrix of a single-qubit gate.
    pub(crate) fn single_qubit_matrix(&self) -> Option<(usize, Mat2<T>)> {
        let z = C::new(T::zero(), T::zero());
        let one = C::new(T::one(), T::zero());
        let m = match self {
            Gate::I(q) => (*q, [[one, z], [z, one]]),
            Gate::X(q) => (*q, [[z, one], [one, z]]),
            Gate::Y(q) => (*q, [[z, c(T::zero(), -T::one())], [c(T::zero(), T::one()), z]]),
            Gate::Z(q) => (*q, [[one, z], [z, -one]]),
            Gate::H(q) => {
                let h = cr::<T>(std::f64::consts::FRAC_1_SQRT_2);
                (*q, [[h, h], [h, -h]])
            }
            Gate::Ry { qubit, angle } => {
                let half = *angle / T::lit(2.0);
                let (s, co) = (half.sin(), half.cos());
                (*qubit, [[c(co, T::zero()), c(-s, T::zero())], [c(s, T::zero()), c(co, T::zero())]])
            }
            Gate::Phase { qubit, angle } => {
                (*qubit, [[one, z], [z, C::from_polar(T::one(), *angle)]])
            }
            _ => return None,
        };
        Some(m)
    }

    fn mnemonic(&self) -> &'static str {
        match self {
            Gate::I(_) => "I",
            Gate::X(_) => "X",
            Gate::Y(_) => "Y",
            Gate::Z(_) => "Z",
            Gate::H(_) => "H",
            Gate::Ry { .. } => "RY",
            Gate::Phase { .. } => "P",
            Gate::Swap(..) => "SWAP",
            Gate::CenterSwitch { .. } => "CS",
            Gate::MultiControlledX { .. } => "MCX",
            Gate::Controlled { .. } => "C",
        }
    }
}

/// One-line text form: `GATE q... [angle] [polarities]`.
///
/// * `CS hi lo` names the span by its top and bottom qubit.
/// * `MCX c1 .. ck t pol` lists controls then the target; `pol` has one
///   `0`/`1` character per control, in the same order.
/// * `C c <inner>` prefixes a controlled gate with its control qubit.
impl<T: Real> fmt::Display for Gate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.mnemonic();
        match self {
            Gate::I(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) | Gate::H(q) => {
                write!(f, "{name} {q}")
            }
            Gate::Ry { qubit, angle } | Gate::Phase { qubit, angle } => {
                write!(f, "{name} {qubit} {angle:.16e}")
            }
            Gate::Swap(a, b) => write!(f, "{name} {a} {b}"),
            Gate::CenterSwitch { low, span } => write!(f, "{name} {} {low}", low + span - 1),
            Gate::MultiControlledX { controls, target } => {
                write!(f, "{name}")?;
                for ctl in controls {
                    write!(f, " {}", ctl.qubit)?;
                }
                write!(f, " {target} ")?;
                for ctl in controls {
                    f.write_str(if ctl.polarity.bit() { "1" } else { "0" })?;
                }
                Ok(())
            }
            Gate::Controlled { control, inner } => write!(f, "{name} {control} {inner}"),
        }
    }
}
