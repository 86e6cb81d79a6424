//! Statevector simulation, gate library, unitary decompositions and a
//! variational linear solver for constant-coefficient tridiagonal systems.
//!
//! Everything numeric is generic over [`scalar::Real`] (`f32` or `f64`);
//! the aliases below fix the scalar.

pub mod decomposition;
pub mod error;
pub mod gates;
pub mod matrix;
pub mod scalar;
pub mod statevector;
pub mod vqls;

pub use decomposition::{Decomposition, Scheme, TridiagonalSpec, UnitaryTerm};
pub use error::{Result, VqlsError};
pub use gates::{Circuit, Control, Gate, Pauli, PauliString, Polarity};
pub use matrix::DenseMatrix;
pub use scalar::{Real, C};
pub use statevector::StateVector;

pub type StateVector64 = StateVector<f64>;
pub type StateVector32 = StateVector<f32>;
pub type DenseMatrix64 = DenseMatrix<f64>;
pub type DenseMatrix32 = DenseMatrix<f32>;
pub type Gate64 = Gate<f64>;
pub type Gate32 = Gate<f32>;
pub type Circuit64 = Circuit<f64>;
pub type Circuit32 = Circuit<f32>;
pub type Decomposition64 = Decomposition<f64>;
pub type Decomposition32 = Decomposition<f32>;
pub type TridiagonalSpec64 = TridiagonalSpec<f64>;
pub type TridiagonalSpec32 = TridiagonalSpec<f32>;
pub type ProblemSpec64 = vqls::ProblemSpec<f64>;
pub type Params64 = vqls::Params<f64>;
pub type CostReport64 = vqls::CostReport<f64>;
pub type OptimizationTrace64 = vqls::OptimizationTrace<f64>;
