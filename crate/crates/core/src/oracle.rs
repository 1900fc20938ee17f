//! Brute-force numerical references for the closed forms.
//!
//! Everything here works from raw wave-function evaluations and the Hermite
//! functions in [`crate::basis`]: quadrature partial traces, Nyström
//! eigen-decomposition of the resulting kernel, plane integrals and
//! finite-difference operators. Nothing calls the analytic results of
//! [`crate::entangle`] that these routines are meant to check.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::basis::phi_unchecked;
use crate::error::{Error, Result};
use crate::grid::{PlaneGrid, UniformGrid};
use crate::squeezed::{eval_position, SqueezeParam};

/// Probability allowed outside an integration grid.
pub const COVERAGE_LIMIT: f64 = 1e-10;
/// Eigenvalues in `[−NEGATIVE_EIGENVALUE_LIMIT, 0)` are treated as zero.
pub const NEGATIVE_EIGENVALUE_LIMIT: f64 = 1e-6;
pub const MIN_TRACE_POINTS: usize = 128;

/// Grids for the kept variable `a` and the traced-out variable `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialTraceGrid {
    pub kept: UniformGrid,
    pub traced: UniformGrid,
}

impl PartialTraceGrid {
    pub fn new(kept: UniformGrid, traced: UniformGrid) -> Self {
        Self { kept, traced }
    }

    /// Smallest half-width accepted for a given squeeze.
    pub fn min_half_width(eta: SqueezeParam) -> f64 {
        6.0 + 3.0 * eta.value().abs()
    }

    /// Grid sized for `eta`: at least 7.5 marginal standard deviations wide,
    /// with a step below the narrow width of `|ψ|²` across the diagonal.
    pub fn for_eta(eta: SqueezeParam) -> Self {
        let c = (2.0 * eta.value()).cosh();
        let half_width = Self::min_half_width(eta).max(7.5 * (0.5 * c).sqrt()).ceil();
        let step = 0.1f64.min(0.75 / (2.0 * c).sqrt());
        let mut grid = UniformGrid::with_max_step(half_width, step).expect("positive half-width");
        if grid.len() < MIN_TRACE_POINTS {
            grid = UniformGrid::new(half_width, MIN_TRACE_POINTS).expect("positive half-width");
        }
        Self::new(grid, grid)
    }

    pub fn refined(&self) -> Self {
        Self::new(self.kept.refined(), self.traced.refined())
    }
}

/// A kernel sampled on a grid together with its quadrature weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GridKernel {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub values: DMatrix<f64>,
}

impl GridKernel {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫ K(a, a) da`
    pub fn weighted_trace(&self) -> f64 {
        (0..self.len())
            .map(|i| self.weights[i] * self.values[(i, i)])
            .sum()
    }

    /// `∬ K(a, a')² da da'`, i.e. `Tr ρ²`.
    pub fn weighted_trace_of_square(&self) -> f64 {
        let mut total = 0.0;
        for j in 0..self.len() {
            for i in 0..self.len() {
                total += self.weights[i] * self.weights[j] * self.values[(i, j)].powi(2);
            }
        }
        total
    }

    /// `W^{1/2} K W^{1/2}`, symmetrized.
    pub fn symmetrized(&self) -> DMatrix<f64> {
        let roots = DVector::from_iterator(self.len(), self.weights.iter().map(|w| w.sqrt()));
        let n = self.len();
        DMatrix::from_fn(n, n, |i, j| {
            0.5 * roots[i] * (self.values[(i, j)] + self.values[(j, i)]) * roots[j]
        })
    }

    /// Eigenvalues of the discretized operator, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.symmetrized())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }

    /// Largest pointwise deviation from `reference`.
    pub fn max_deviation(&self, reference: impl Fn(f64, f64) -> f64) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..self.len() {
            for i in 0..self.len() {
                let d = (self.values[(i, j)] - reference(self.nodes[i], self.nodes[j])).abs();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// `K(a, a') = ∫ ψ_η(a, b) ψ_η(a', b) db` by trapezoid quadrature over `b`.
pub fn numeric_partial_trace(eta: SqueezeParam, grid: &PartialTraceGrid) -> Result<GridKernel> {
    let required = PartialTraceGrid::min_half_width(eta);
    for g in [&grid.kept, &grid.traced] {
        if g.half_width() < required {
            return Err(Error::GridTooNarrow {
                half_width: g.half_width(),
                required,
            });
        }
        if g.len() < MIN_TRACE_POINTS {
            return Err(Error::TooFewGridPoints {
                points: g.len(),
                required: MIN_TRACE_POINTS,
            });
        }
    }

    let a_nodes = grid.kept.nodes();
    let b_nodes = grid.traced.nodes();
    let b_weights = grid.traced.weights();
    let psi = DMatrix::from_fn(a_nodes.len(), b_nodes.len(), |i, j| {
        eval_position(eta, a_nodes[i], b_nodes[j])
    });
    let mut weighted = psi.clone();
    for (j, w) in b_weights.iter().enumerate() {
        weighted.column_mut(j).scale_mut(*w);
    }
    let values = &weighted * psi.transpose();

    let kernel = GridKernel {
        nodes: a_nodes,
        weights: grid.kept.weights(),
        values,
    };

    // tail beyond ±L of a Gaussian-like density f with variance σ²:
    // ≈ f(L) σ² / L on each side
    let variance = kernel
        .nodes
        .iter()
        .enumerate()
        .map(|(i, a)| kernel.weights[i] * a * a * kernel.values[(i, i)])
        .sum::<f64>()
        / kernel.weighted_trace();
    let last = kernel.len() - 1;
    let kept_edge = kernel.values[(0, 0)] + kernel.values[(last, last)];
    let traced_edge: f64 = [b_nodes[0], b_nodes[b_nodes.len() - 1]]
        .iter()
        .map(|&b| grid.kept.integrate(|a| eval_position(eta, a, b).powi(2)))
        .sum();
    let mass = kept_edge.max(traced_edge) * variance
        / grid.kept.half_width().min(grid.traced.half_width());
    if mass.is_nan() || mass > COVERAGE_LIMIT {
        return Err(Error::InsufficientCoverage {
            mass,
            limit: COVERAGE_LIMIT,
        });
    }
    Ok(kernel)
}

/// `−Σ λ ln λ` over the eigenvalues of the discretized kernel.
pub fn kernel_entropy(kernel: &GridKernel) -> Result<f64> {
    let mut entropy = 0.0;
    for lambda in kernel.eigenvalues() {
        if lambda < -NEGATIVE_EIGENVALUE_LIMIT {
            return Err(Error::NegativeEigenvalue(lambda));
        }
        let p = lambda.clamp(0.0, 1.0);
        if p > 0.0 {
            entropy -= p * p.ln();
        }
    }
    Ok(entropy)
}

/// `∬ f² dz dt` over a Cartesian grid.
pub fn numeric_norm(f: impl Fn(f64, f64) -> f64, grid: &PlaneGrid) -> f64 {
    grid.integrate(|z, t| f(z, t).powi(2))
}

/// `∬ f² dz dt` with the grid laid out along the light-cone axes `(u, v)`;
/// the map to `(z, t)` has unit Jacobian.
pub fn numeric_norm_lightcone(f: impl Fn(f64, f64) -> f64, grid: &PlaneGrid) -> f64 {
    grid.integrate(|u, v| {
        let z = (u + v) * std::f64::consts::FRAC_1_SQRT_2;
        let t = (u - v) * std::f64::consts::FRAC_1_SQRT_2;
        f(z, t).powi(2)
    })
}

/// `∬ f(z,t) g(z,t) dz dt` over a light-cone grid.
pub fn numeric_overlap_lightcone(
    f: impl Fn(f64, f64) -> f64,
    g: impl Fn(f64, f64) -> f64,
    grid: &PlaneGrid,
) -> f64 {
    grid.integrate(|u, v| {
        let z = (u + v) * std::f64::consts::FRAC_1_SQRT_2;
        let t = (u - v) * std::f64::consts::FRAC_1_SQRT_2;
        f(z, t) * g(z, t)
    })
}

/// Light-cone grid that resolves a boosted state with up to `n` quanta: the
/// rest-frame extent stretched by `e^{|η|}` along one axis and compressed
/// along the other.
pub fn lightcone_plane_for(eta: SqueezeParam, n: usize) -> PlaneGrid {
    let stretch = eta.value().abs().exp();
    let rest_half_width = 10.0 + (2.0 * n as f64 + 1.0).sqrt();
    let long =
        UniformGrid::with_max_step(rest_half_width * stretch, 0.1 * stretch).expect("positive");
    let short =
        UniformGrid::with_max_step(rest_half_width / stretch, 0.1 / stretch).expect("positive");
    if eta.value() >= 0.0 {
        PlaneGrid::new(long, short)
    } else {
        PlaneGrid::new(short, long)
    }
}

/// Normalization and second moment of the first variable of `f²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalMoments {
    pub norm: f64,
    pub second_moment: f64,
}

impl MarginalMoments {
    pub fn variance(&self) -> f64 {
        self.second_moment / self.norm
    }

    pub fn width(&self) -> f64 {
        self.variance().sqrt()
    }
}

/// Integrates out the second variable of `f²` and returns the moments of the
/// first.
pub fn marginal_moments(f: impl Fn(f64, f64) -> f64, grid: &PlaneGrid) -> MarginalMoments {
    let mut norm = 0.0;
    let mut second_moment = 0.0;
    for i in 0..grid.first.len() {
        let a = grid.first.node(i);
        let marginal = grid.second.integrate(|b| f(a, b).powi(2));
        let w = grid.first.weight(i);
        norm += w * marginal;
        second_moment += w * a * a * marginal;
    }
    MarginalMoments {
        norm,
        second_moment,
    }
}

/// Cartesian grid for [`marginal_moments`] of the squeezed Gaussian: wide
/// enough for the marginal, and with a step along the integrated variable
/// fine enough for the conditional width `1/√(2 cosh 2η)`.
pub fn marginal_plane_for(eta: SqueezeParam) -> PlaneGrid {
    let c = (2.0 * eta.value()).cosh();
    let half_width = 9.0 * (0.5 * c).sqrt() + 2.0;
    let outer =
        UniformGrid::with_max_step(half_width, 0.25 * (0.5 * c).sqrt().min(1.0)).expect("positive");
    let inner = UniformGrid::with_max_step(half_width, 0.1f64.min(0.8 / (2.0 * c).sqrt()))
        .expect("positive");
    PlaneGrid::new(outer, inner)
}

/// `max |½(x² φ_k − φ_k'') − (k + ½) φ_k|` with the fourth-order central
/// second difference of step `step` on `[-half_width, half_width]`.
pub fn oscillator_eigen_residual(k: usize, half_width: f64, step: f64) -> f64 {
    let n = (2.0 * half_width / step).round() as usize;
    let energy = k as f64 + 0.5;
    let f = |x: f64| phi_unchecked(k, x);
    (2..n - 1)
        .map(|i| {
            let x = -half_width + i as f64 * step;
            let mid = f(x);
            let second = (-f(x - 2.0 * step) + 16.0 * f(x - step) - 30.0 * mid
                + 16.0 * f(x + step)
                - f(x + 2.0 * step))
                / (12.0 * step * step);
            (0.5 * (x * x * mid - second) - energy * mid).abs()
        })
        .fold(0.0, f64::max)
}
