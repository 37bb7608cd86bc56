mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use wsl::circuit::{
    build_wsl_circuit, controlled_walsh_term, pivot_qubit, staircase, walsh_term, wsl_gate_count,
};
use wsl::sim::{run_from, unitary_of};
use wsl::walsh::WalshSpectrum;
use wsl::{Circuit, Gate, Statevector, WslMode};

use common::{
    controlled_block, dense_circuit, kron_by_qubit, max_abs_diff, pauli_z, rng, walsh_exponential,
    CMatrix,
};

fn register_circuit(n: usize, gates: Vec<Gate>) -> Circuit {
    Circuit::from_gates(n, false, gates).unwrap()
}

#[test]
fn walsh_term_equals_matrix_exponential() {
    let mut r = rng(1);
    for n in 1..=5 {
        for h in 1..1usize << n {
            let theta = r.gen_range(-1.5..1.5);
            let u = unitary_of(&register_circuit(n, walsh_term(h, theta, n).unwrap())).unwrap();
            let oracle = walsh_exponential(h, theta, n);
            assert!(max_abs_diff(&u, &oracle) < 1e-10, "n={n} h={h}");
        }
    }
}

#[test]
fn walsh_term_is_diagonal_with_walsh_phases() {
    for n in 1..=5 {
        for h in 1..1usize << n {
            let theta = 0.1 + 0.01 * h as f64;
            let u = unitary_of(&register_circuit(n, walsh_term(h, theta, n).unwrap())).unwrap();
            for row in 0..1 << n {
                for col in 0..1 << n {
                    let entry = u[(row, col)];
                    if row == col {
                        let w = f64::from(wsl::walsh::walsh_function(h, row, n).unwrap());
                        let expected = num_complex::Complex64::from_polar(1.0, -theta * w);
                        assert!((entry - expected).norm() < 1e-10);
                    } else {
                        assert!(entry.norm() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn named_examples() {
    // h=3, theta=0.3, n=2 and h=10, theta=0.1, n=4
    for (h, theta, n) in [(3usize, 0.3, 2usize), (10, 0.1, 4), (1, 0.7, 1)] {
        let u = unitary_of(&register_circuit(n, walsh_term(h, theta, n).unwrap())).unwrap();
        assert!(max_abs_diff(&u, &walsh_exponential(h, theta, n)) < 1e-12);
    }
}

#[test]
fn fig1_z_layer_equals_staircase() {
    // h = 10: Z on the qubits paired with bits 1 and 3.
    let (h, n) = (10usize, 4usize);
    let z_qubits: Vec<usize> = (0..n)
        .filter(|j| h >> j & 1 == 1)
        .map(|j| n - 1 - j)
        .collect();
    assert_eq!(z_qubits, vec![2, 0]);
    let z = |q| Gate::Phase {
        theta: std::f64::consts::PI,
        target: q,
    };
    let layer = register_circuit(n, z_qubits.iter().map(|&q| z(q)).collect());

    let pivot = pivot_qubit(h, n).unwrap();
    let stairs = staircase(h, n).unwrap();
    let mut gates = stairs.clone();
    gates.push(z(pivot));
    gates.extend(stairs.iter().rev().copied());
    let conjugated = register_circuit(n, gates);

    let a = unitary_of(&layer).unwrap();
    let b = unitary_of(&conjugated).unwrap();
    assert!(max_abs_diff(&a, &b) < 1e-15);
    // Both equal the tensor product Z ⊗ I ⊗ Z ⊗ I.
    let oracle = kron_by_qubit(n, |q| {
        if z_qubits.contains(&q) {
            pauli_z()
        } else {
            CMatrix::identity(2, 2)
        }
    });
    assert!(max_abs_diff(&a, &oracle) < 1e-15);
}

#[test]
fn controlled_term_matches_block_oracle() {
    let mut r = rng(2);
    for n in 1..=4 {
        for h in 1..1usize << n {
            let theta = r.gen_range(-1.0..1.0);
            let circuit =
                Circuit::from_gates(n, true, controlled_walsh_term(h, theta, n).unwrap()).unwrap();
            let u = unitary_of(&circuit).unwrap();
            let oracle = controlled_block(&walsh_exponential(h, theta, n));
            assert!(max_abs_diff(&u, &oracle) < 1e-10, "n={n} h={h}");
        }
    }
}

#[test]
fn controlled_rz_is_phase_exact() {
    let theta = 0.37;
    let circuit = Circuit::from_gates(
        1,
        true,
        vec![Gate::Crz {
            theta: 2.0 * theta,
            control: 1,
            target: 0,
        }],
    )
    .unwrap();
    let u = unitary_of(&circuit).unwrap();
    assert!((u[(2, 2)] - num_complex::Complex64::from_polar(1.0, -theta)).norm() < 1e-15);
    assert!((u[(3, 3)] - num_complex::Complex64::from_polar(1.0, theta)).norm() < 1e-15);
    assert_eq!(u[(0, 0)], common::c(1.0, 0.0));
    assert_eq!(u[(1, 1)], common::c(1.0, 0.0));
}

#[test]
fn control_zero_branch_is_untouched() {
    for n in 1..=4 {
        for h in 1..1usize << n {
            let circuit =
                Circuit::from_gates(n, true, controlled_walsh_term(h, 0.4, n).unwrap()).unwrap();
            for k in 0..1usize << n {
                let basis = Statevector::basis(n + 1, k).unwrap();
                assert_eq!(
                    run_from(&circuit, &basis).unwrap(),
                    basis,
                    "n={n} h={h} k={k}"
                );
            }
        }
    }
}

#[test]
fn wsl_circuit_matches_dense_oracle() {
    let n = 3;
    let coeffs = vec![0.9, -0.3, 0.2, 0.05, -0.4, 0.0, 0.11, 0.7];
    let spectrum = WalshSpectrum::from_coefficients(n, coeffs).unwrap();
    for mode in WslMode::ALL {
        let circuit = build_wsl_circuit(&spectrum, 0.3, n, mode).unwrap();
        let u = unitary_of(&circuit).unwrap();
        let oracle = dense_circuit(circuit.gates(), n + 1);
        assert!(max_abs_diff(&u, &oracle) < 1e-10);
    }
}

#[test]
fn gate_count_formula() {
    for n in 1..=6 {
        for log_m in 0..=n {
            let m = 1usize << log_m;
            let spectrum = WalshSpectrum::from_coefficients(n, vec![0.5; m]).unwrap();
            for mode in WslMode::ALL {
                let circuit = build_wsl_circuit(&spectrum, 0.1, n, mode).unwrap();
                let expected: usize = (n + 1)
                    + (1..m)
                        .map(|h| 2 * (h.count_ones() as usize - 1) + 1)
                        .sum::<usize>()
                    + if mode == WslMode::Correct { 3 } else { 2 };
                assert_eq!(circuit.len(), expected);
                assert_eq!(wsl_gate_count(n, m, mode), expected);
                let phases = circuit
                    .gates()
                    .iter()
                    .filter(|g| matches!(g, Gate::Phase { target, .. } if *target == n))
                    .count();
                assert_eq!(phases, if mode == WslMode::Correct { 2 } else { 1 });
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn controlled_terms_commute(n in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut orders: Vec<usize> = (1..1usize << n).filter(|_| r.gen_bool(0.6)).collect();
        if orders.is_empty() {
            orders.push(1);
        }
        let thetas: Vec<f64> = orders.iter().map(|_| r.gen_range(-1.0..1.0)).collect();
        let build = |perm: &[usize]| {
            let gates: Vec<Gate> = perm
                .iter()
                .flat_map(|&i| controlled_walsh_term(orders[i], thetas[i], n).unwrap())
                .collect();
            unitary_of(&Circuit::from_gates(n, true, gates).unwrap()).unwrap()
        };
        let identity: Vec<usize> = (0..orders.len()).collect();
        let mut shuffled = identity.clone();
        shuffled.shuffle(&mut r);
        prop_assert!(max_abs_diff(&build(&identity), &build(&shuffled)) < 1e-10);
    }

    #[test]
    fn text_format_round_trips(n in 1usize..=5, seed in any::<u64>()) {
        let size = 1usize << n;
        let mut r = rng(seed);
        let m = 1usize << r.gen_range(0..=n);
        let coeffs: Vec<f64> = (0..m).map(|_| r.gen_range(-3.0..3.0)).collect();
        let spectrum = WalshSpectrum::from_coefficients(n, coeffs).unwrap();
        let eps0: f64 = r.gen_range(1e-4..0.5);
        let mode = if r.gen_bool(0.5) { WslMode::Correct } else { WslMode::Incomplete };
        let circuit = build_wsl_circuit(&spectrum, eps0, n, mode).unwrap();
        let parsed: Circuit = circuit.to_text().parse().unwrap();
        prop_assert_eq!(parsed, circuit);
        prop_assert!(m <= size);
    }
}
