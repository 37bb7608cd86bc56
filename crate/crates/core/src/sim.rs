//! Exact statevector simulation and ancilla post-selection.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate};
use crate::error::{Result, WslError};
use crate::walsh::{SampledFunction, MAX_QUBITS};

/// Largest total qubit count accepted by [`unitary_of`].
pub const MAX_UNITARY_QUBITS: usize = 12;

/// Branch norms below this are treated as "success impossible".
pub const DEGENERATE_BRANCH_NORM: f64 = 1e-300;

const NORM_TOLERANCE: f64 = 1e-10;

/// `2^num_qubits` complex amplitudes; qubit `j` is bit `j` of the index.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// `|0...0>` on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS + 1 {
            return Err(WslError::domain(format!(
                "statevector qubit count must be in 1..={}, got {num_qubits}",
                MAX_QUBITS + 1
            )));
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(WslError::domain(format!(
                "basis index {index} out of range for {num_qubits} qubits"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Wraps unit-norm amplitudes (tolerance `1e-10`).
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(WslError::domain(format!(
                "amplitude count must be a power of two >= 2, got {dim}"
            )));
        }
        let state = Self {
            num_qubits: dim.trailing_zeros() as usize,
            amplitudes,
        };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(WslError::domain(format!(
                "amplitudes are not normalized (norm^2 = {norm})"
            )));
        }
        Ok(state)
    }

    /// Normalizes `amplitudes` and wraps them.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(WslError::domain(
                "cannot normalize a zero or non-finite vector",
            ));
        }
        for a in &mut amplitudes {
            *a /= norm;
        }
        Self::from_amplitudes(amplitudes)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<self|other>`, conjugating `self`.
    pub fn inner(&self, other: &Statevector) -> Result<Complex64> {
        if self.num_qubits != other.num_qubits {
            return Err(WslError::domain(
                "inner product of states of different sizes",
            ));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Returns a new state with `gate` applied.
    pub fn apply_gate(&self, gate: &Gate) -> Result<Statevector> {
        let mut next = self.clone();
        next.apply_gate_mut(gate)?;
        Ok(next)
    }

    /// Applies `gate` in place.
    pub fn apply_gate_mut(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        let amps = &mut self.amplitudes;
        let t = 1usize << gate.target();
        match *gate {
            Gate::H(_) => {
                let s = FRAC_1_SQRT_2;
                for i in (0..amps.len()).filter(|i| i & t == 0) {
                    let (a, b) = (amps[i], amps[i | t]);
                    amps[i] = (a + b) * s;
                    amps[i | t] = (a - b) * s;
                }
            }
            Gate::Rz { theta, .. } => {
                let lo = Complex64::from_polar(1.0, -theta / 2.0);
                let hi = Complex64::from_polar(1.0, theta / 2.0);
                for (i, a) in amps.iter_mut().enumerate() {
                    *a *= if i & t == 0 { lo } else { hi };
                }
            }
            Gate::Phase { theta, .. } => {
                let phase = Complex64::from_polar(1.0, theta);
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & t != 0 {
                        *a *= phase;
                    }
                }
            }
            Gate::Cnot { control, .. } => {
                let c = 1usize << control;
                for i in 0..amps.len() {
                    if i & c != 0 && i & t == 0 {
                        amps.swap(i, i | t);
                    }
                }
            }
            Gate::Crz { theta, control, .. } => {
                let c = 1usize << control;
                let lo = Complex64::from_polar(1.0, -theta / 2.0);
                let hi = Complex64::from_polar(1.0, theta / 2.0);
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & c != 0 {
                        *a *= if i & t == 0 { lo } else { hi };
                    }
                }
            }
            Gate::CPhase { theta, control, .. } => {
                let mask = (1usize << control) | t;
                let phase = Complex64::from_polar(1.0, theta);
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *a *= phase;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Applies `gate` to `state`.
pub fn apply_gate(state: &Statevector, gate: &Gate) -> Result<Statevector> {
    state.apply_gate(gate)
}

/// Runs `circuit` from `|0...0>`.
pub fn run(circuit: &Circuit) -> Result<Statevector> {
    run_from(circuit, &Statevector::zero(circuit.num_qubits())?)
}

/// Runs `circuit` from `initial`, applying gates left to right.
pub fn run_from(circuit: &Circuit, initial: &Statevector) -> Result<Statevector> {
    if initial.num_qubits() != circuit.num_qubits() {
        return Err(WslError::domain(format!(
            "circuit has {} qubits but the initial state has {}",
            circuit.num_qubits(),
            initial.num_qubits()
        )));
    }
    let mut state = initial.clone();
    for gate in circuit.gates() {
        state.apply_gate_mut(gate)?;
    }
    Ok(state)
}

/// Register state conditioned on the ancilla reading `|1>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PostSelectionResult {
    pub register_state: Statevector,
    /// Squared norm of the ancilla-`|1>` branch before renormalization.
    pub success_probability: f64,
}

/// Projects the highest-index qubit (the ancilla) onto `|1>`.
pub fn postselect_ancilla_one(state: &Statevector) -> Result<PostSelectionResult> {
    if state.num_qubits() < 2 {
        return Err(WslError::domain(
            "post-selection needs an ancilla and at least one register qubit",
        ));
    }
    let half = state.amplitudes().len() / 2;
    let branch = &state.amplitudes()[half..];
    let p = branch.iter().map(|a| a.norm_sqr()).sum::<f64>();
    if p.is_nan() || p < DEGENERATE_BRANCH_NORM {
        return Err(WslError::DegenerateBranch(p));
    }
    let scale = 1.0 / p.sqrt();
    let register_state = Statevector {
        num_qubits: state.num_qubits() - 1,
        amplitudes: branch.iter().map(|a| a * scale).collect(),
    };
    Ok(PostSelectionResult {
        register_state,
        success_probability: p.min(1.0),
    })
}

/// `1 - |<prepared|target>|^2` with `target` normalized, clamped to `[0, 1]`.
pub fn infidelity(prepared: &Statevector, target: &SampledFunction) -> Result<f64> {
    if prepared.num_qubits() != target.qubits() {
        return Err(WslError::domain(format!(
            "prepared state has {} qubits, target has {}",
            prepared.num_qubits(),
            target.qubits()
        )));
    }
    let overlap: Complex64 = prepared
        .amplitudes()
        .iter()
        .zip(target.normalized())
        .map(|(p, t)| p.conj() * t)
        .sum();
    Ok((1.0 - overlap.norm_sqr()).clamp(0.0, 1.0))
}

/// Dense unitary of `circuit`; column `k` is the circuit applied to `|k>`.
pub fn unitary_of(circuit: &Circuit) -> Result<DMatrix<Complex64>> {
    let q = circuit.num_qubits();
    if q > MAX_UNITARY_QUBITS {
        return Err(WslError::Resource(format!(
            "unitary extraction limited to {MAX_UNITARY_QUBITS} qubits, circuit has {q}"
        )));
    }
    let dim = 1usize << q;
    let mut u = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let column = run_from(circuit, &Statevector::basis(q, k)?)?;
        for (row, amp) in column.amplitudes().iter().enumerate() {
            u[(row, k)] = *amp;
        }
    }
    Ok(u)
}

/// Probability that measuring the ancilla (highest-index qubit) gives `1`.
pub fn ancilla_one_probability(state: &Statevector) -> f64 {
    let half = state.amplitudes().len() / 2;
    let upper: f64 = state.amplitudes()[half..]
        .iter()
        .map(|a| a.norm_sqr())
        .sum();
    (upper / state.norm_sqr()).clamp(0.0, 1.0)
}

/// Simulates `shots` repeat-until-success attempts, returning how many
/// measured the ancilla as `|1>`. Deterministic for a given `seed`.
pub fn sample_ancilla(state: &Statevector, shots: u64, seed: u64) -> u64 {
    let p = ancilla_one_probability(state);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..shots).filter(|_| rng.gen_bool(p)).count() as u64
}
