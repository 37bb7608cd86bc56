//! Infidelity experiments over the function catalog.

pub mod catalog;
mod experiment;
mod report;
mod sweep;

pub use catalog::{catalog, FunctionSpec};
pub use experiment::{prepare, run_experiment, ExperimentRecord, Prepared, INFIDELITY_FLOOR};
pub use report::{emit_csv, parse_csv, sort_records, write_csv, CSV_HEADER};
pub use sweep::{
    epsilon_grid, sweep_epsilon, sweep_qubits, DEFAULT_EPS, DEFAULT_EPS_GRID, DEFAULT_QUBITS,
};
