//! Walsh functions, Walsh spectra and sampled target functions.
//!
//! Index convention: `w_h(k) = (-1)^(sum_j h_j * k_(n-1-j))`. The least
//! significant bit of the order `h` pairs with the most significant bit of
//! the point `k`. With qubit `n - 1` as the most significant qubit this is
//! exactly the diagonal of `Z^(h_0) ⊗ Z^(h_1) ⊗ ... ⊗ Z^(h_(n-1))` written
//! with the leftmost factor on qubit `n - 1`.
//!
//! Under this convention the orders `h < 2^m` only look at the top `m` bits
//! of `k`, so truncating a spectrum to its first `M = 2^m` coefficients
//! averages `f` over `M` contiguous blocks of `N / M` points.

use crate::bench::catalog::FunctionSpec;
use crate::error::{Result, WslError};

/// Largest supported register size. Keeps `1 << n` and bit reversal in range.
pub const MAX_QUBITS: usize = 30;

/// Reverses the low `n` bits of `k`.
#[inline]
pub fn bit_reverse(k: usize, n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    k.reverse_bits() >> (usize::BITS as usize - n)
}

#[inline]
fn walsh_sign(h: usize, k: usize, n: usize) -> f64 {
    if (h & bit_reverse(k, n)).count_ones() & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Value of the Walsh function of order `h` at point `k` on `n` bits.
pub fn walsh_function(h: usize, k: usize, n: usize) -> Result<i8> {
    check_qubits(n)?;
    let size = 1usize << n;
    if h >= size {
        return Err(WslError::domain(format!(
            "order {h} out of range for n={n}"
        )));
    }
    if k >= size {
        return Err(WslError::domain(format!(
            "point {k} out of range for n={n}"
        )));
    }
    Ok(if (h & bit_reverse(k, n)).count_ones() & 1 == 0 {
        1
    } else {
        -1
    })
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(WslError::domain(format!(
            "qubit count must be in 1..={MAX_QUBITS}, got {n}"
        )));
    }
    Ok(())
}

/// Real samples `f(k)` on `k = 0..2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    label: String,
    n: usize,
    values: Vec<f64>,
}

impl SampledFunction {
    /// Wraps `values`, which must have a power-of-two length of at least two,
    /// be finite and not all zero.
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        let len = values.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(WslError::domain(format!(
                "sample count must be a power of two >= 2, got {len}"
            )));
        }
        let n = len.trailing_zeros() as usize;
        check_qubits(n)?;
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(WslError::domain(format!("sample {k} is not finite")));
        }
        if values.iter().all(|&v| v == 0.0) {
            return Err(WslError::domain(
                "all samples are zero; no state to prepare",
            ));
        }
        Ok(Self {
            label: label.into(),
            n,
            values,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Register size `n`.
    pub fn qubits(&self) -> usize {
        self.n
    }

    /// Number of samples `N = 2^n`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Samples divided by their Euclidean norm.
    pub fn normalized(&self) -> Vec<f64> {
        let norm = self.values.iter().map(|v| v * v).sum::<f64>().sqrt();
        self.values.iter().map(|v| v / norm).collect()
    }
}

/// The first `M` Walsh coefficients of a sampled function.
#[derive(Debug, Clone, PartialEq)]
pub struct WalshSpectrum {
    n: usize,
    coefficients: Vec<f64>,
    eps1: Option<f64>,
    clamped: bool,
}

impl WalshSpectrum {
    /// Builds a spectrum from explicit coefficients. `coefficients.len()` is
    /// the term count and must be a power of two no larger than `2^n`.
    pub fn from_coefficients(n: usize, coefficients: Vec<f64>) -> Result<Self> {
        check_qubits(n)?;
        let m = coefficients.len();
        if m == 0 || !m.is_power_of_two() || m > 1 << n {
            return Err(WslError::domain(format!(
                "term count {m} must be a power of two in 1..={}",
                1usize << n
            )));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(WslError::domain("Walsh coefficients must be finite"));
        }
        Ok(Self {
            n,
            coefficients,
            eps1: None,
            clamped: false,
        })
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    /// Number of retained terms `M`.
    pub fn terms(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Truncation target the spectrum was built from, if any.
    pub fn eps1(&self) -> Option<f64> {
        self.eps1
    }

    /// True when the requested term count exceeded `2^n` and was cut down.
    pub fn clamped(&self) -> bool {
        self.clamped
    }

    /// Order-zero coefficient `a_0`, the mean of the sampled function.
    pub fn a0(&self) -> f64 {
        self.coefficients[0]
    }
}

/// Resolves a requested term count against the register size.
fn resolve_terms(requested: usize, n: usize) -> Result<(usize, bool)> {
    if requested == 0 || !requested.is_power_of_two() {
        return Err(WslError::domain(format!(
            "term count must be a power of two, got {requested}"
        )));
    }
    let size = 1usize << n;
    Ok(if requested > size {
        (size, true)
    } else {
        (requested, false)
    })
}

fn terms_for_eps1(eps1: f64, n: usize) -> Result<(usize, bool)> {
    if !(eps1 > 0.0 && eps1 < 1.0) {
        return Err(WslError::domain(format!(
            "eps1 must lie in (0, 1), got {eps1}"
        )));
    }
    check_qubits(n)?;
    let m = (1.0 / eps1).log2().ceil();
    if m > n as f64 {
        Ok((1 << n, true))
    } else {
        Ok((1 << m as usize, false))
    }
}

/// Term count `M = 2^ceil(log2(1/eps1))`, clamped to `2^n`.
pub fn truncation_order(eps1: f64, n: usize) -> Result<usize> {
    terms_for_eps1(eps1, n).map(|(m, _)| m)
}

/// Direct evaluation of the Walsh coefficients,
/// `a_h = (1/N) * sum_k w_h(k) f(k)` for `h < M`. `O(N * M)`.
///
/// Requests with `M > N` are clamped to `N`.
pub fn walsh_transform(f: &SampledFunction, terms: usize) -> Result<WalshSpectrum> {
    let n = f.qubits();
    let (m, clamped) = resolve_terms(terms, n)?;
    let scale = 1.0 / f.len() as f64;
    let coefficients = (0..m)
        .map(|h| {
            f.values()
                .iter()
                .enumerate()
                .map(|(k, v)| walsh_sign(h, k, n) * v)
                .sum::<f64>()
                * scale
        })
        .collect();
    Ok(WalshSpectrum {
        n,
        coefficients,
        eps1: None,
        clamped,
    })
}

/// In-place unnormalized Walsh-Hadamard transform in natural (Hadamard)
/// order: `out[u] = sum_k (-1)^popcount(u & k) * x[k]`.
pub fn fwht_in_place(data: &mut [f64]) {
    let len = data.len();
    assert!(len.is_power_of_two(), "FWHT length must be a power of two");
    let mut half = 1;
    while half < len {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half <<= 1;
    }
}

/// Same coefficients as [`walsh_transform`], computed with a fast
/// Walsh-Hadamard transform in `O(N log N)`.
pub fn walsh_transform_fast(f: &SampledFunction, terms: usize) -> Result<WalshSpectrum> {
    let n = f.qubits();
    let (m, clamped) = resolve_terms(terms, n)?;
    let mut hadamard = f.values().to_vec();
    fwht_in_place(&mut hadamard);
    // w_h(k) = (-1)^popcount(h & rev(k)) = (-1)^popcount(rev(h) & k)
    let scale = 1.0 / f.len() as f64;
    let coefficients = (0..m)
        .map(|h| hadamard[bit_reverse(h, n)] * scale)
        .collect();
    Ok(WalshSpectrum {
        n,
        coefficients,
        eps1: None,
        clamped,
    })
}

/// Truncated spectrum for an accepted error `eps1`, using the fast transform.
pub fn spectrum_for_eps1(f: &SampledFunction, eps1: f64) -> Result<WalshSpectrum> {
    let (m, clamped) = terms_for_eps1(eps1, f.qubits())?;
    let mut spectrum = walsh_transform_fast(f, m)?;
    spectrum.eps1 = Some(eps1);
    spectrum.clamped = clamped;
    Ok(spectrum)
}

/// Truncated series `f_M(k) = sum_{h<M} a_h w_h(k)`.
pub fn series_eval(spectrum: &WalshSpectrum, k: usize) -> Result<f64> {
    let n = spectrum.qubits();
    if k >= 1 << n {
        return Err(WslError::domain(format!(
            "point {k} out of range for n={n}"
        )));
    }
    Ok(spectrum
        .coefficients()
        .iter()
        .enumerate()
        .map(|(h, a)| walsh_sign(h, k, n) * a)
        .sum())
}

/// Samples `spec` on `N = 2^n` points `x = k / N`.
pub fn discretize(spec: &FunctionSpec, n: usize) -> Result<SampledFunction> {
    check_qubits(n)?;
    let size = 1usize << n;
    let values = (0..size).map(|k| spec.sample(k, size)).collect();
    SampledFunction::new(spec.id(), values)
}
