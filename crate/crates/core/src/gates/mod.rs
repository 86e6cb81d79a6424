//! Typed gate set, Pauli strings, the center-switch family and basis lowering.

mod center_switch;
mod circuit;
mod gate;
mod lowering;
mod pauli;

pub use center_switch::{
    center_switch_matrix, center_switch_path, center_switch_transpositions, lower_center_switch,
    MAX_CS_SPAN,
};
pub use circuit::Circuit;
pub use gate::{Control, Gate, Polarity};
pub use lowering::{is_basis_gate, lower_to_basis};
pub use pauli::{pauli_string_matrix, Pauli, PauliString, MAX_PAULI_QUBITS};
