//! Line-based circuit serialization.
//!
//! ```text
//! # comment
//! qubits 3
//! ancilla 1
//! mode correct
//! H ; 3
//! CX 0 ; 2
//! CRZ 0.015625 3 ; 2
//! P -0.0078125 ; 3
//! ```
//!
//! Header lines come first; `mode` is optional. Each gate line is
//! `KIND [angle] [controls...] ; targets...`. Angles are written in the
//! shortest form that parses back to the same `f64`.

use std::fmt::Write as _;

use super::{Circuit, Gate, WslMode};
use crate::error::{Result, WslError};

pub(super) fn write_circuit(circuit: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qubits {}", circuit.register_qubits());
    let _ = writeln!(out, "ancilla {}", u8::from(circuit.has_ancilla()));
    if let Some(mode) = circuit.mode() {
        let _ = writeln!(out, "mode {mode}");
    }
    for gate in circuit.gates() {
        out.push_str(gate.kind());
        if let Some(theta) = gate.angle() {
            let _ = write!(out, " {theta:?}");
        }
        for c in gate.controls() {
            let _ = write!(out, " {c}");
        }
        out.push_str(" ;");
        for t in gate.targets() {
            let _ = write!(out, " {t}");
        }
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> WslError {
    WslError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid qubit index '{token}'")))
}

fn parse_gate(text: &str, line: usize) -> Result<Gate> {
    let (head, tail) = text
        .split_once(';')
        .ok_or_else(|| parse_err(line, "missing ';' between controls and targets"))?;
    let mut head = head.split_whitespace();
    let kind = head
        .next()
        .ok_or_else(|| parse_err(line, "missing gate kind"))?;
    let (has_angle, num_controls) = match kind {
        "H" => (false, 0),
        "RZ" | "P" => (true, 0),
        "CX" => (false, 1),
        "CRZ" | "CP" => (true, 1),
        other => return Err(parse_err(line, format!("unknown gate kind '{other}'"))),
    };
    let theta = if has_angle {
        let token = head
            .next()
            .ok_or_else(|| parse_err(line, format!("{kind} needs an angle")))?;
        token
            .parse::<f64>()
            .map_err(|_| parse_err(line, format!("invalid angle '{token}'")))?
    } else {
        0.0
    };
    let controls = head
        .map(|t| parse_index(t, line))
        .collect::<Result<Vec<_>>>()?;
    let targets = tail
        .split_whitespace()
        .map(|t| parse_index(t, line))
        .collect::<Result<Vec<_>>>()?;
    if controls.len() != num_controls {
        return Err(parse_err(
            line,
            format!(
                "{kind} takes {num_controls} control(s), got {}",
                controls.len()
            ),
        ));
    }
    let &[target] = targets.as_slice() else {
        return Err(parse_err(
            line,
            format!("{kind} takes one target, got {}", targets.len()),
        ));
    };
    Ok(match kind {
        "H" => Gate::H(target),
        "RZ" => Gate::Rz { theta, target },
        "P" => Gate::Phase { theta, target },
        "CX" => Gate::Cnot {
            control: controls[0],
            target,
        },
        "CRZ" => Gate::Crz {
            theta,
            control: controls[0],
            target,
        },
        _ => Gate::CPhase {
            theta,
            control: controls[0],
            target,
        },
    })
}

/// Parses the text format produced by [`Circuit::to_text`].
pub fn parse_circuit(input: &str) -> Result<Circuit> {
    let mut qubits: Option<usize> = None;
    let mut ancilla: Option<bool> = None;
    let mut mode: Option<WslMode> = None;
    let mut circuit: Option<Circuit> = None;

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut words = text.split_whitespace();
        let first = words.next().unwrap_or_default();
        if circuit.is_none() {
            match first {
                "qubits" => {
                    let v = words
                        .next()
                        .ok_or_else(|| parse_err(line, "qubits needs a count"))?;
                    qubits = Some(parse_index(v, line)?);
                    continue;
                }
                "ancilla" => {
                    ancilla = Some(match words.next() {
                        Some("1") => true,
                        Some("0") => false,
                        _ => return Err(parse_err(line, "ancilla must be 0 or 1")),
                    });
                    continue;
                }
                "mode" => {
                    let v = words
                        .next()
                        .ok_or_else(|| parse_err(line, "mode needs a value"))?;
                    mode = Some(
                        v.parse()
                            .map_err(|e: WslError| parse_err(line, e.to_string()))?,
                    );
                    continue;
                }
                _ => {
                    let n = qubits.ok_or_else(|| parse_err(line, "gate before 'qubits' header"))?;
                    let mut c = Circuit::new(n, ancilla.unwrap_or(false))
                        .map_err(|e| parse_err(line, e.to_string()))?;
                    c.set_mode(mode);
                    circuit = Some(c);
                }
            }
        }
        let gate = parse_gate(text, line)?;
        circuit
            .as_mut()
            .expect("circuit initialized")
            .push(gate)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }

    match circuit {
        Some(c) => Ok(c),
        None => {
            let n = qubits.ok_or_else(|| parse_err(0, "missing 'qubits' header"))?;
            let mut c = Circuit::new(n, ancilla.unwrap_or(false))
                .map_err(|e| parse_err(0, e.to_string()))?;
            c.set_mode(mode);
            Ok(c)
        }
    }
}
