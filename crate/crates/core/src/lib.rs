//! Walsh Series Loader: approximate amplitude encoding of real-valued
//! functions through ancilla-controlled diagonal Walsh operators.
//!
//! The pipeline is split across four modules:
//!
//! - [`walsh`] samples target functions and computes Walsh spectra,
//! - [`circuit`] builds the gate-level loader circuit (CNOT staircases,
//!   controlled `Rz` rotations and the order-zero ancilla phase),
//! - [`sim`] evolves statevectors exactly and post-selects the ancilla,
//! - [`bench`] runs the infidelity experiments and writes CSV.
//!
//! Qubit `j` of a register carries bit `j` of the basis index, so qubit
//! `n - 1` is the most significant one. When a circuit has an ancilla it is
//! qubit `n`, the highest index.

pub mod bench;
pub mod circuit;
pub mod error;
pub mod sim;
pub mod walsh;

pub use circuit::{Circuit, Gate, WslMode};
pub use error::{Result, WslError};
pub use sim::{PostSelectionResult, Statevector};
pub use walsh::{SampledFunction, WalshSpectrum};
