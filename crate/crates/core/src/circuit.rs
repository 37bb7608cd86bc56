//! Gate-level circuits and the Walsh Series Loader construction.
//!
//! A Walsh term `exp(-i theta w_h)` is a diagonal operator equal to
//! `exp(-i theta Z...Z)` on the qubits selected by `h`. It is realized by a
//! CNOT staircase that collects the parity of those qubits onto one pivot
//! qubit, an `Rz(2 theta)` on the pivot, and the mirrored staircase:
//!
//! ```text
//! W_h(theta) = A_h · Rz(2 theta)[pivot] · A_h^-1
//! ```
//!
//! `Rz(phi) = diag(e^{-i phi/2}, e^{i phi/2})` with no global phase slack,
//! so `Rz(2 theta) = exp(-i theta Z)` exactly. This matters once the term is
//! controlled by an ancilla: any global phase of the uncontrolled term turns
//! into a relative phase between the ancilla branches.
//!
//! The order-zero term `exp(-i theta I)` is a pure phase and has no staircase
//! form. Under ancilla control it becomes `P(-theta)` on the ancilla.

mod text;

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, WslError};
use crate::walsh::{WalshSpectrum, MAX_QUBITS};

pub use text::parse_circuit;

/// A single gate. Angles are in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    /// Hadamard.
    H(usize),
    /// `diag(e^{-i theta/2}, e^{i theta/2})`
    Rz {
        theta: f64,
        target: usize,
    },
    /// `diag(1, e^{i theta})`
    Phase {
        theta: f64,
        target: usize,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    /// `Rz(theta)` on `target` when `control` is set; identity otherwise.
    Crz {
        theta: f64,
        control: usize,
        target: usize,
    },
    /// `P(theta)` on `target` when `control` is set.
    CPhase {
        theta: f64,
        control: usize,
        target: usize,
    },
}

impl Gate {
    /// Mnemonic used by the text format.
    pub fn kind(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::Rz { .. } => "RZ",
            Gate::Phase { .. } => "P",
            Gate::Cnot { .. } => "CX",
            Gate::Crz { .. } => "CRZ",
            Gate::CPhase { .. } => "CP",
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match *self {
            Gate::Rz { theta, .. }
            | Gate::Phase { theta, .. }
            | Gate::Crz { theta, .. }
            | Gate::CPhase { theta, .. } => Some(theta),
            Gate::H(_) | Gate::Cnot { .. } => None,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Gate::H(target)
            | Gate::Rz { target, .. }
            | Gate::Phase { target, .. }
            | Gate::Cnot { target, .. }
            | Gate::Crz { target, .. }
            | Gate::CPhase { target, .. } => target,
        }
    }

    pub fn control(&self) -> Option<usize> {
        match *self {
            Gate::Cnot { control, .. }
            | Gate::Crz { control, .. }
            | Gate::CPhase { control, .. } => Some(control),
            _ => None,
        }
    }

    pub fn targets(&self) -> Vec<usize> {
        vec![self.target()]
    }

    pub fn controls(&self) -> Vec<usize> {
        self.control().into_iter().collect()
    }

    /// True for gates whose matrix is diagonal in the computational basis.
    pub fn is_diagonal(&self) -> bool {
        !matches!(self, Gate::H(_) | Gate::Cnot { .. })
    }

    /// Checks qubit indices against `num_qubits` and that the angle is finite.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let target = self.target();
        if target >= num_qubits {
            return Err(WslError::domain(format!(
                "{} target {target} out of range for {num_qubits} qubits",
                self.kind()
            )));
        }
        if let Some(control) = self.control() {
            if control >= num_qubits {
                return Err(WslError::domain(format!(
                    "{} control {control} out of range for {num_qubits} qubits",
                    self.kind()
                )));
            }
            if control == target {
                return Err(WslError::domain(format!(
                    "{} control and target are both qubit {target}",
                    self.kind()
                )));
            }
        }
        if let Some(theta) = self.angle() {
            if !theta.is_finite() {
                return Err(WslError::domain(format!(
                    "{} angle is not finite",
                    self.kind()
                )));
            }
        }
        Ok(())
    }
}

/// Whether the loader includes the order-zero phase gate on the ancilla.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WslMode {
    /// Full loader, with `P(-eps0 * a_0)` on the ancilla.
    Correct,
    /// Loader with the order-zero term left out.
    Incomplete,
}

impl WslMode {
    pub const ALL: [WslMode; 2] = [WslMode::Correct, WslMode::Incomplete];

    pub fn as_str(&self) -> &'static str {
        match self {
            WslMode::Correct => "correct",
            WslMode::Incomplete => "incomplete",
        }
    }
}

impl fmt::Display for WslMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WslMode {
    type Err = WslError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "correct" => Ok(WslMode::Correct),
            "incomplete" => Ok(WslMode::Incomplete),
            other => Err(WslError::domain(format!(
                "unknown mode '{other}' (expected correct or incomplete)"
            ))),
        }
    }
}

/// Ordered gate list over `n` register qubits and an optional ancilla at
/// index `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    register_qubits: usize,
    has_ancilla: bool,
    gates: Vec<Gate>,
    mode: Option<WslMode>,
}

impl Circuit {
    pub fn new(register_qubits: usize, has_ancilla: bool) -> Result<Self> {
        let total = register_qubits + usize::from(has_ancilla);
        if total == 0 || total > MAX_QUBITS + 1 {
            return Err(WslError::domain(format!(
                "circuit must have between 1 and {} qubits, got {total}",
                MAX_QUBITS + 1
            )));
        }
        Ok(Self {
            register_qubits,
            has_ancilla,
            gates: Vec::new(),
            mode: None,
        })
    }

    /// Circuit over `gates`, validated against the qubit count.
    pub fn from_gates(
        register_qubits: usize,
        has_ancilla: bool,
        gates: impl IntoIterator<Item = Gate>,
    ) -> Result<Self> {
        let mut circuit = Self::new(register_qubits, has_ancilla)?;
        circuit.extend(gates)?;
        Ok(circuit)
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.num_qubits())?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        for gate in gates {
            self.push(gate)?;
        }
        Ok(())
    }

    pub fn register_qubits(&self) -> usize {
        self.register_qubits
    }

    pub fn has_ancilla(&self) -> bool {
        self.has_ancilla
    }

    pub fn ancilla(&self) -> Option<usize> {
        self.has_ancilla.then_some(self.register_qubits)
    }

    pub fn num_qubits(&self) -> usize {
        self.register_qubits + usize::from(self.has_ancilla)
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn mode(&self) -> Option<WslMode> {
        self.mode
    }

    pub(crate) fn set_mode(&mut self, mode: Option<WslMode>) {
        self.mode = mode;
    }

    /// The first `len` gates, same qubits and mode.
    pub fn prefix(&self, len: usize) -> Circuit {
        Circuit {
            gates: self.gates[..len.min(self.gates.len())].to_vec(),
            ..self.clone()
        }
    }

    pub fn count_kind(&self, kind: &str) -> usize {
        self.gates.iter().filter(|g| g.kind() == kind).count()
    }

    /// Serializes to the line-based text format (see `docs/circuit-format.md`).
    pub fn to_text(&self) -> String {
        text::write_circuit(self)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Circuit {
    type Err = WslError;

    fn from_str(s: &str) -> Result<Self> {
        parse_circuit(s)
    }
}

fn check_order(h: usize, n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(WslError::domain(format!("invalid qubit count {n}")));
    }
    if h == 0 {
        return Err(WslError::domain(
            "order 0 has no Z qubit; it is a global phase (use the ancilla phase gate)",
        ));
    }
    if h >= 1 << n {
        return Err(WslError::domain(format!(
            "order {h} out of range for n={n}"
        )));
    }
    Ok(())
}

/// Register qubit paired with bit `j` of a Walsh order.
#[inline]
fn qubit_for_bit(j: usize, n: usize) -> usize {
    n - 1 - j
}

/// Qubit that receives the rotation for order `h`: the most significant
/// qubit on which `w_h` acts with `Z`.
pub fn pivot_qubit(h: usize, n: usize) -> Result<usize> {
    check_order(h, n)?;
    Ok(qubit_for_bit(h.trailing_zeros() as usize, n))
}

/// CNOT staircase `A_h`: one CNOT from every other `Z` qubit of `w_h` onto
/// the pivot. Empty when `h` has a single set bit.
pub fn staircase(h: usize, n: usize) -> Result<Vec<Gate>> {
    let pivot = pivot_qubit(h, n)?;
    let low = h.trailing_zeros() as usize;
    Ok((low + 1..n)
        .filter(|j| h >> j & 1 == 1)
        .map(|j| Gate::Cnot {
            control: qubit_for_bit(j, n),
            target: pivot,
        })
        .collect())
}

fn conjugate(stairs: Vec<Gate>, center: Gate) -> Vec<Gate> {
    let mut gates = Vec::with_capacity(2 * stairs.len() + 1);
    gates.extend(stairs.iter().copied());
    gates.push(center);
    gates.extend(stairs.iter().rev().copied());
    gates
}

/// `W_h(theta) = exp(-i theta w_h)` as `A_h · Rz(2 theta) · A_h^-1`.
pub fn walsh_term(h: usize, theta: f64, n: usize) -> Result<Vec<Gate>> {
    let pivot = pivot_qubit(h, n)?;
    Ok(conjugate(
        staircase(h, n)?,
        Gate::Rz {
            theta: 2.0 * theta,
            target: pivot,
        },
    ))
}

/// `W_h(theta)` controlled by the ancilla at qubit `n`. Only the central
/// rotation carries the control; on the control-0 branch the staircase and
/// its mirror cancel.
pub fn controlled_walsh_term(h: usize, theta: f64, n: usize) -> Result<Vec<Gate>> {
    let pivot = pivot_qubit(h, n)?;
    Ok(conjugate(
        staircase(h, n)?,
        Gate::Crz {
            theta: 2.0 * theta,
            control: n,
            target: pivot,
        },
    ))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Leave out terms whose coefficient is exactly zero.
    pub skip_zero: bool,
}

/// Builds the loader circuit for `spectrum` with scaling `eps0`.
///
/// Gate order: `H` on the ancilla then on every register qubit; the
/// controlled terms for `h = 1..M` in ascending order; `P(-eps0 a_0)` on the
/// ancilla in [`WslMode::Correct`]; `H` and `P(-pi/2)` on the ancilla.
pub fn build_wsl_circuit(
    spectrum: &WalshSpectrum,
    eps0: f64,
    n: usize,
    mode: WslMode,
) -> Result<Circuit> {
    build_wsl_circuit_with(spectrum, eps0, n, mode, BuildOptions::default())
}

pub fn build_wsl_circuit_with(
    spectrum: &WalshSpectrum,
    eps0: f64,
    n: usize,
    mode: WslMode,
    options: BuildOptions,
) -> Result<Circuit> {
    if spectrum.qubits() != n {
        return Err(WslError::domain(format!(
            "spectrum is over {} qubits but the circuit has {n}",
            spectrum.qubits()
        )));
    }
    if !(eps0 > 0.0 && eps0.is_finite()) {
        return Err(WslError::domain(format!(
            "eps0 must be positive, got {eps0}"
        )));
    }
    let ancilla = n;
    let mut circuit = Circuit::new(n, true)?;
    circuit.push(Gate::H(ancilla))?;
    for q in 0..n {
        circuit.push(Gate::H(q))?;
    }
    for (h, &a) in spectrum.coefficients().iter().enumerate().skip(1) {
        if options.skip_zero && a == 0.0 {
            continue;
        }
        circuit.extend(controlled_walsh_term(h, eps0 * a, n)?)?;
    }
    if mode == WslMode::Correct {
        circuit.push(Gate::Phase {
            theta: -eps0 * spectrum.a0(),
            target: ancilla,
        })?;
    }
    circuit.push(Gate::H(ancilla))?;
    circuit.push(Gate::Phase {
        theta: -FRAC_PI_2,
        target: ancilla,
    })?;
    circuit.set_mode(Some(mode));
    Ok(circuit)
}

/// Gate count of [`build_wsl_circuit`] without zero skipping.
pub fn wsl_gate_count(n: usize, terms: usize, mode: WslMode) -> usize {
    let walsh: usize = (1..terms)
        .map(|h| 2 * (h.count_ones() as usize - 1) + 1)
        .sum();
    let tail = match mode {
        WslMode::Correct => 3,
        WslMode::Incomplete => 2,
    };
    (n + 1) + walsh + tail
}
