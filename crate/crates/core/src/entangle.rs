//! Schmidt decomposition of the squeezed state and what survives after one
//! variable is traced out.
//!
//! The squeezed Gaussian expands as
//! `ψ_η(x, y) = (1/cosh η) Σ_k tanh^k η φ_k(x) φ_k(y)`, so tracing over `y`
//! leaves a state diagonal in the oscillator basis with weights
//! `p_k = (1 − tanh²η) tanh^{2k} η`: a geometric (thermal) distribution.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::basis::{phi, phi_sequence, MAX_MODE};
use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::squeezed::{eval_position, SqueezeParam};

/// Default number of Schmidt terms kept in truncated sums.
pub const DEFAULT_TRUNCATION: usize = 400;

/// Amplitude `tanh^k η / cosh η` multiplying `φ_k(x) φ_k(y)`.
pub fn schmidt_coefficient(eta: SqueezeParam, k: usize) -> f64 {
    eta.tanh().powi(k as i32) / eta.cosh()
}

/// Expansion coefficient `C_k(y)` of `ψ(x, y) = Σ C_k(y) φ_k(x)`.
pub fn expansion_coefficient_fn(eta: SqueezeParam, k: usize, y: f64) -> Result<f64> {
    Ok(schmidt_coefficient(eta, k) * phi(k, y)?)
}

/// Partial Schmidt sum over the first `n` terms.
pub fn reconstruct_wavefunction(eta: SqueezeParam, a: f64, b: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptyTruncation);
    }
    let phi_a = phi_sequence(n, a)?;
    let phi_b = phi_sequence(n, b)?;
    let ratio = eta.tanh();
    let mut amplitude = 1.0 / eta.cosh();
    let mut sum = 0.0;
    for (fa, fb) in phi_a.iter().zip(&phi_b) {
        sum += amplitude * fa * fb;
        amplitude *= ratio;
    }
    Ok(sum)
}

/// Eigenvalues of the reduced density matrix, truncated to `n` terms.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    eta: SqueezeParam,
    eigenvalues: Vec<f64>,
}

impl SchmidtSpectrum {
    pub fn new(eta: SqueezeParam, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTruncation);
        }
        let ratio = eta.tanh().powi(2);
        let mut p = 1.0 / eta.cosh().powi(2);
        let eigenvalues = (0..n)
            .map(|_| {
                let current = p;
                p *= ratio;
                current
            })
            .collect();
        Ok(Self { eta, eigenvalues })
    }

    pub fn eta(&self) -> SqueezeParam {
        self.eta
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Probability dropped by the truncation, `tanh^{2N} η`.
    pub fn tail_bound(&self) -> f64 {
        self.eta.tanh().abs().powf(2.0 * self.len() as f64)
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// `Σ p_k²`
    pub fn purity(&self) -> f64 {
        self.eigenvalues.iter().map(|p| p * p).sum()
    }

    pub fn entropy(&self) -> f64 {
        entropy_from_spectrum(self)
    }

    /// `Σ p_k φ_k(a) φ_k(a')`.
    pub fn kernel(&self, a: f64, a_prime: f64) -> Result<f64> {
        let n = self.len().min(MAX_MODE + 1);
        let fa = phi_sequence(n, a)?;
        let fb = phi_sequence(n, a_prime)?;
        Ok(self
            .eigenvalues
            .iter()
            .zip(fa.iter().zip(&fb))
            .map(|(p, (x, y))| p * x * y)
            .sum())
    }
}

/// `Tr ρ² = 1/cosh 2η`.
pub fn purity(eta: SqueezeParam) -> f64 {
    1.0 / (2.0 * eta.value()).cosh()
}

/// Entanglement entropy `2{cosh²η ln cosh η − sinh²η ln sinh η}`, in units
/// of Boltzmann's constant.
///
/// Evaluated as `ln(1+n) + n ln(1 + 1/n)` with `n = sinh²η`, which is the
/// same expression without the cancellation between two large terms.
pub fn entropy(eta: SqueezeParam) -> f64 {
    let n = eta.sinh().powi(2);
    if n == 0.0 {
        return 0.0;
    }
    n.ln_1p() + n * (1.0 / n).ln_1p()
}

/// `−Σ p_k ln p_k` with `0 ln 0 = 0`.
pub fn entropy_from_spectrum(spectrum: &SchmidtSpectrum) -> f64 {
    -spectrum
        .eigenvalues
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum::<f64>()
}

/// How `η` is identified with a temperature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TemperatureMapping {
    /// `tanh²η = e^{−ħω/kT}`, the identification under which the thermal
    /// entropy equals the entanglement entropy.
    #[default]
    Squared,
    /// `tanh η = e^{−ħω/kT}`, as the relation is often quoted. Its thermal
    /// entropy does not reproduce the entanglement entropy.
    Literal,
}

impl TemperatureMapping {
    /// Dimensionless `ħω/kT` for a given `η > 0`.
    pub fn thermal_argument(self, eta: SqueezeParam) -> Result<f64> {
        let e = eta.value();
        if e <= 0.0 {
            return Err(Error::NonPositiveEta(e));
        }
        // ln tanh η = ln(1 − e^{−2η}) − ln(1 + e^{−2η})
        let q = (-2.0 * e).exp();
        let minus_ln_tanh = q.ln_1p() - (-q).ln_1p();
        Ok(match self {
            TemperatureMapping::Squared => 2.0 * minus_ln_tanh,
            TemperatureMapping::Literal => minus_ln_tanh,
        })
    }
}

/// Temperature (with `k_B = ħ = 1`) corresponding to `η` for level spacing
/// `omega`.
pub fn effective_temperature(
    eta: SqueezeParam,
    omega: f64,
    mapping: TemperatureMapping,
) -> Result<f64> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    Ok(omega / mapping.thermal_argument(eta)?)
}

/// Entropy of a thermal oscillator, `x/(e^x − 1) − ln(1 − e^{−x})`.
pub fn thermal_entropy(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::NonPositiveThermalArgument(x));
    }
    Ok(x / x.exp_m1() - (-(-x).exp()).ln_1p())
}

/// Pure-state density matrix `ψ(a, b) ψ(a', b')`.
pub fn pure_density_eval(eta: SqueezeParam, a: f64, b: f64, a_prime: f64, b_prime: f64) -> f64 {
    eval_position(eta, a, b) * eval_position(eta, a_prime, b_prime)
}

/// Reduced density matrix `ρ(a, a') = ∫ ψ(a, b) ψ(a', b) db` in closed form.
///
/// With `c = cosh 2η` the Gaussian integral gives
/// `(π c)^{-1/2} exp{−(c/4)(a − a')² − (a + a')²/(4c)}`.
pub fn reduced_density_kernel(eta: SqueezeParam, a: f64, a_prime: f64) -> f64 {
    let c = (2.0 * eta.value()).cosh();
    let d = a - a_prime;
    let s = a + a_prime;
    (PI * c).sqrt().recip() * (-0.25 * (c * d * d + s * s / c)).exp()
}

/// Reduced density matrix of one variable.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensityMatrix {
    spectrum: SchmidtSpectrum,
}

impl ReducedDensityMatrix {
    pub fn new(eta: SqueezeParam, n: usize) -> Result<Self> {
        Ok(Self {
            spectrum: SchmidtSpectrum::new(eta, n)?,
        })
    }

    pub fn spectrum(&self) -> &SchmidtSpectrum {
        &self.spectrum
    }

    pub fn kernel(&self, a: f64, a_prime: f64) -> f64 {
        reduced_density_kernel(self.spectrum.eta, a, a_prime)
    }

    /// `W^{1/2} K W^{1/2}` on `grid`, whose eigenvalues approximate the
    /// operator spectrum.
    pub fn grid_matrix(&self, grid: &UniformGrid) -> DMatrix<f64> {
        let nodes = grid.nodes();
        let roots: Vec<f64> = grid.weights().iter().map(|w| w.sqrt()).collect();
        DMatrix::from_fn(grid.len(), grid.len(), |i, j| {
            roots[i] * self.kernel(nodes[i], nodes[j]) * roots[j]
        })
    }

    pub fn smallest_grid_eigenvalue(&self, grid: &UniformGrid) -> f64 {
        SymmetricEigen::new(self.grid_matrix(grid))
            .eigenvalues
            .min()
    }
}
