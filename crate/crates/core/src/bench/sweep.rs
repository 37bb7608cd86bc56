use rayon::prelude::*;

use super::catalog::FunctionSpec;
use super::experiment::{run_experiment, ExperimentRecord};
use super::report::sort_records;
use crate::circuit::WslMode;
use crate::error::Result;

/// `eps0 = eps1 = 2^-7`, giving `M = 128` terms.
pub const DEFAULT_EPS: f64 = 0.0078125;

pub const DEFAULT_QUBITS: [usize; 7] = [7, 8, 9, 10, 11, 12, 13];

/// Exponents `e` of the default `eps = 2^-e` grid.
pub const DEFAULT_EPS_GRID: [i32; 8] = [3, 4, 5, 6, 7, 8, 9, 10];

/// `2^-e` for each exponent.
pub fn epsilon_grid(exponents: &[i32]) -> Vec<f64> {
    exponents.iter().map(|&e| 2f64.powi(-e)).collect()
}

fn run_grid(points: Vec<(FunctionSpec, usize, f64, WslMode)>) -> Result<Vec<ExperimentRecord>> {
    let mut records = points
        .into_par_iter()
        .map(|(spec, n, eps, mode)| run_experiment(&spec, n, eps, eps, mode))
        .collect::<Result<Vec<_>>>()?;
    sort_records(&mut records);
    Ok(records)
}

/// Infidelity against register size at fixed `eps0 = eps1 = eps`.
pub fn sweep_qubits(
    specs: &[FunctionSpec],
    qubits: &[usize],
    eps: f64,
    modes: &[WslMode],
) -> Result<Vec<ExperimentRecord>> {
    let mut points = Vec::new();
    for spec in specs {
        for &mode in modes {
            for &n in qubits {
                points.push((*spec, n, eps, mode));
            }
        }
    }
    run_grid(points)
}

/// Infidelity against `eps = eps0 = eps1` at a fixed register size.
pub fn sweep_epsilon(
    specs: &[FunctionSpec],
    n: usize,
    eps_list: &[f64],
    modes: &[WslMode],
) -> Result<Vec<ExperimentRecord>> {
    let mut points = Vec::new();
    for spec in specs {
        for &mode in modes {
            for &eps in eps_list {
                points.push((*spec, n, eps, mode));
            }
        }
    }
    run_grid(points)
}
