//! Dense-matrix oracles built from Kronecker products. Nothing in here calls
//! the simulator or the Walsh routines under test.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsl::Gate;

pub type CMatrix = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity2() -> CMatrix {
    CMatrix::identity(2, 2)
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
}

fn proj(bit: usize) -> CMatrix {
    let mut m = CMatrix::zeros(2, 2);
    m[(bit, bit)] = c(1.0, 0.0);
    m
}

/// Single-qubit matrix of a gate (ignoring any control).
fn local(gate: &Gate) -> CMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match *gate {
        Gate::H(_) => CMatrix::from_row_slice(2, 2, &[c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)]),
        Gate::Rz { theta, .. } | Gate::Crz { theta, .. } => CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::from_polar(1.0, -theta / 2.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                Complex64::from_polar(1.0, theta / 2.0),
            ],
        ),
        Gate::Phase { theta, .. } | Gate::CPhase { theta, .. } => CMatrix::from_row_slice(
            2,
            2,
            &[
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                Complex64::from_polar(1.0, theta),
            ],
        ),
        Gate::Cnot { .. } => {
            CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
        }
    }
}

/// Kronecker product of per-qubit factors; `factor(q)` is the operator on
/// qubit `q`, and qubit `n - 1` is the leftmost factor.
pub fn kron_by_qubit(n: usize, factor: impl Fn(usize) -> CMatrix) -> CMatrix {
    let mut acc = CMatrix::identity(1, 1);
    for q in (0..n).rev() {
        acc = acc.kronecker(&factor(q));
    }
    acc
}

/// Full `2^n x 2^n` matrix of `gate`.
pub fn dense_gate(gate: &Gate, n: usize) -> CMatrix {
    let g = local(gate);
    let target = gate.target();
    match gate.control() {
        None => kron_by_qubit(n, |q| if q == target { g.clone() } else { identity2() }),
        Some(ctrl) => {
            let off = kron_by_qubit(n, |q| if q == ctrl { proj(0) } else { identity2() });
            let on = kron_by_qubit(n, |q| {
                if q == ctrl {
                    proj(1)
                } else if q == target {
                    g.clone()
                } else {
                    identity2()
                }
            });
            off + on
        }
    }
}

/// Product of dense gate matrices, first gate applied first.
pub fn dense_circuit(gates: &[Gate], n: usize) -> CMatrix {
    gates
        .iter()
        .fold(CMatrix::identity(1 << n, 1 << n), |acc, g| {
            dense_gate(g, n) * acc
        })
}

/// `Z^(h_0) ⊗ Z^(h_1) ⊗ ... ⊗ Z^(h_(n-1))`, leftmost factor on the most
/// significant qubit `n - 1`.
pub fn walsh_operator(h: usize, n: usize) -> CMatrix {
    let mut acc = CMatrix::identity(1, 1);
    for j in 0..n {
        let f = if h >> j & 1 == 1 {
            pauli_z()
        } else {
            identity2()
        };
        acc = acc.kronecker(&f);
    }
    acc
}

/// `exp(-i theta w_h)` via the general matrix exponential.
pub fn walsh_exponential(h: usize, theta: f64, n: usize) -> CMatrix {
    (walsh_operator(h, n) * c(0.0, -theta)).exp()
}

/// Block-diagonal `|0><0| ⊗ I + |1><1| ⊗ u` with the control as the new
/// most significant qubit.
pub fn controlled_block(u: &CMatrix) -> CMatrix {
    let dim = u.nrows();
    let mut m = CMatrix::identity(2 * dim, 2 * dim);
    m.view_mut((dim, dim), (dim, dim)).copy_from(u);
    m
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_values(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-2.0..2.0)).collect()
}

/// Naive Walsh sign from the diagonal of the tensor-product operator.
pub fn walsh_diag_sign(h: usize, k: usize, n: usize) -> i8 {
    let d = walsh_operator(h, n)[(k, k)].re;
    if d > 0.0 {
        1
    } else {
        -1
    }
}
