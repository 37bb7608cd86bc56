use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::catalog::{catalog, FunctionSpec};
use crate::circuit::{build_wsl_circuit, Circuit, WslMode};
use crate::error::{Result, WslError};
use crate::sim::{infidelity, postselect_ancilla_one, run};
use crate::walsh::{spectrum_for_eps1, SampledFunction, WalshSpectrum};

/// Infidelities below this are reported as the floor with `float_floor` set.
pub const INFIDELITY_FLOOR: f64 = 1e-15;

/// One point of an infidelity experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub function: String,
    pub n: usize,
    pub eps0: f64,
    pub eps1: f64,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(with = "mode_serde")]
    pub mode: WslMode,
    pub infidelity: f64,
    pub success_probability: f64,
    pub wall_time_ms: f64,
    pub float_floor: bool,
}

mod mode_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::circuit::WslMode;

    pub fn serialize<S: Serializer>(mode: &WslMode, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(mode.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<WslMode, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Target samples, truncated spectrum and loader circuit for one point.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub target: SampledFunction,
    pub spectrum: WalshSpectrum,
    pub circuit: Circuit,
}

fn check_eps(name: &str, eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(WslError::domain(format!(
            "{name} must lie in (0, 1), got {eps}"
        )))
    }
}

/// Samples the target, computes its truncated spectrum and builds the circuit.
pub fn prepare(
    spec: &FunctionSpec,
    n: usize,
    eps0: f64,
    eps1: f64,
    mode: WslMode,
) -> Result<Prepared> {
    check_eps("eps0", eps0)?;
    check_eps("eps1", eps1)?;
    let target = catalog(spec, n)?;
    let spectrum = spectrum_for_eps1(&target, eps1)?;
    let circuit = build_wsl_circuit(&spectrum, eps0, n, mode)?;
    Ok(Prepared {
        target,
        spectrum,
        circuit,
    })
}

/// Full pipeline: sample, transform, build, simulate, post-select, compare.
pub fn run_experiment(
    spec: &FunctionSpec,
    n: usize,
    eps0: f64,
    eps1: f64,
    mode: WslMode,
) -> Result<ExperimentRecord> {
    let start = Instant::now();
    let prepared = prepare(spec, n, eps0, eps1, mode)?;
    let state = run(&prepared.circuit)?;
    let selected = postselect_ancilla_one(&state)?;
    let raw = infidelity(&selected.register_state, &prepared.target)?;
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let float_floor = raw < INFIDELITY_FLOOR;
    Ok(ExperimentRecord {
        function: spec.id().to_string(),
        n,
        eps0,
        eps1,
        m: prepared.spectrum.terms(),
        mode,
        infidelity: raw.max(INFIDELITY_FLOOR),
        success_probability: selected.success_probability,
        wall_time_ms,
        float_floor,
    })
}
