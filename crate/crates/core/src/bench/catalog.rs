//! Target functions for the infidelity experiments.
//!
//! The continuous functions live on `[0, 1)` and are sampled at `x = k / N`.
//! The GHZ target is already discrete.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, WslError};
use crate::walsh::{self, SampledFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionSpec {
    /// `exp(-(x - mu)^2 / (2 sigma^2)) / sigma`
    Gaussian { mu: f64, sigma: f64 },
    /// `s * g(mu1, sigma1) + (1 - s) * g(mu2, sigma2)`
    BimodalGaussian {
        mu1: f64,
        mu2: f64,
        sigma1: f64,
        sigma2: f64,
        s: f64,
    },
    /// `gamma / (gamma^2 + 4 (x - mu)^2)`
    Lorentzian { gamma: f64, mu: f64 },
    /// `sin(frequency * x) / (frequency * x)`, 1 at `x = 0`.
    Sinc { frequency: f64 },
    /// `sqrt(|x - center|)`
    SqrtAbs { center: f64 },
    /// `1/sqrt(2)` on the first and last points, zero elsewhere.
    Ghz,
}

impl FunctionSpec {
    /// Every catalog id, in canonical order.
    pub const IDS: [&'static str; 6] = [
        "gaussian",
        "bimodal_gaussian",
        "lorentzian",
        "sinc",
        "sqrt_abs",
        "ghz",
    ];

    /// The full catalog with default parameters.
    pub fn all() -> Vec<FunctionSpec> {
        Self::IDS
            .iter()
            .map(|id| Self::from_id(id).expect("catalog id"))
            .collect()
    }

    /// The five continuous functions (everything but GHZ).
    pub fn continuous() -> Vec<FunctionSpec> {
        Self::all().into_iter().filter(|f| !f.is_ghz()).collect()
    }

    /// Looks up a catalog entry with its default parameters.
    pub fn from_id(id: &str) -> Result<Self> {
        Ok(match id {
            "gaussian" => FunctionSpec::Gaussian {
                mu: 0.5,
                sigma: 1.0,
            },
            "bimodal_gaussian" | "bimodal" => FunctionSpec::BimodalGaussian {
                mu1: 0.25,
                mu2: 0.75,
                sigma1: 0.3,
                sigma2: 0.04,
                s: 0.1,
            },
            "lorentzian" => FunctionSpec::Lorentzian {
                gamma: 1.0,
                mu: 0.5,
            },
            "sinc" => FunctionSpec::Sinc {
                frequency: 6.0 * PI,
            },
            "sqrt_abs" => FunctionSpec::SqrtAbs { center: 0.5 },
            "ghz" => FunctionSpec::Ghz,
            other => {
                return Err(WslError::domain(format!(
                    "unknown function id '{other}' (expected one of {})",
                    Self::IDS.join(", ")
                )))
            }
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            FunctionSpec::Gaussian { .. } => "gaussian",
            FunctionSpec::BimodalGaussian { .. } => "bimodal_gaussian",
            FunctionSpec::Lorentzian { .. } => "lorentzian",
            FunctionSpec::Sinc { .. } => "sinc",
            FunctionSpec::SqrtAbs { .. } => "sqrt_abs",
            FunctionSpec::Ghz => "ghz",
        }
    }

    pub fn is_ghz(&self) -> bool {
        matches!(self, FunctionSpec::Ghz)
    }

    /// Named parameters and their current values.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            FunctionSpec::Gaussian { mu, sigma } => vec![("mu", mu), ("sigma", sigma)],
            FunctionSpec::BimodalGaussian {
                mu1,
                mu2,
                sigma1,
                sigma2,
                s,
            } => vec![
                ("mu1", mu1),
                ("mu2", mu2),
                ("sigma1", sigma1),
                ("sigma2", sigma2),
                ("s", s),
            ],
            FunctionSpec::Lorentzian { gamma, mu } => vec![("gamma", gamma), ("mu", mu)],
            FunctionSpec::Sinc { frequency } => vec![("frequency", frequency)],
            FunctionSpec::SqrtAbs { center } => vec![("center", center)],
            FunctionSpec::Ghz => Vec::new(),
        }
    }

    /// Overrides one named parameter.
    pub fn with_param(mut self, name: &str, value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(WslError::domain(format!("parameter {name} must be finite")));
        }
        let slot = match (&mut self, name) {
            (FunctionSpec::Gaussian { mu, .. }, "mu") => mu,
            (FunctionSpec::Gaussian { sigma, .. }, "sigma") => sigma,
            (FunctionSpec::BimodalGaussian { mu1, .. }, "mu1") => mu1,
            (FunctionSpec::BimodalGaussian { mu2, .. }, "mu2") => mu2,
            (FunctionSpec::BimodalGaussian { sigma1, .. }, "sigma1") => sigma1,
            (FunctionSpec::BimodalGaussian { sigma2, .. }, "sigma2") => sigma2,
            (FunctionSpec::BimodalGaussian { s, .. }, "s") => s,
            (FunctionSpec::Lorentzian { gamma, .. }, "gamma") => gamma,
            (FunctionSpec::Lorentzian { mu, .. }, "mu") => mu,
            (FunctionSpec::Sinc { frequency }, "frequency") => frequency,
            (FunctionSpec::SqrtAbs { center }, "center") => center,
            (spec, _) => {
                return Err(WslError::domain(format!(
                    "function '{}' has no parameter '{name}'",
                    spec.id()
                )))
            }
        };
        *slot = value;
        Ok(self)
    }

    /// Value at grid point `k` of a `size`-point grid.
    pub fn sample(&self, k: usize, size: usize) -> f64 {
        let x = k as f64 / size as f64;
        match *self {
            FunctionSpec::Gaussian { mu, sigma } => gaussian(x, mu, sigma),
            FunctionSpec::BimodalGaussian {
                mu1,
                mu2,
                sigma1,
                sigma2,
                s,
            } => s * gaussian(x, mu1, sigma1) + (1.0 - s) * gaussian(x, mu2, sigma2),
            FunctionSpec::Lorentzian { gamma, mu } => {
                gamma / (gamma * gamma + 4.0 * (x - mu) * (x - mu))
            }
            FunctionSpec::Sinc { frequency } => {
                let arg = frequency * x;
                if arg == 0.0 {
                    1.0
                } else {
                    arg.sin() / arg
                }
            }
            FunctionSpec::SqrtAbs { center } => (x - center).abs().sqrt(),
            FunctionSpec::Ghz => {
                if k == 0 || k + 1 == size {
                    FRAC_1_SQRT_2
                } else {
                    0.0
                }
            }
        }
    }
}

fn gaussian(x: f64, mu: f64, sigma: f64) -> f64 {
    let d = x - mu;
    (-d * d / (2.0 * sigma * sigma)).exp() / sigma
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FunctionSpec {
    type Err = WslError;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_id(s)
    }
}

/// Samples a catalog function on `2^n` points.
pub fn catalog(spec: &FunctionSpec, n: usize) -> Result<SampledFunction> {
    walsh::discretize(spec, n)
}
