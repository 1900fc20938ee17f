//! Lorentz kinematics in the longitudinal `(z, t)` plane and the covariant
//! oscillator states built on it.
//!
//! A boost with rapidity `η` acts on light-cone variables `u = (z+t)/√2`,
//! `v = (z−t)/√2` as the squeeze `u → e^η u`, `v → e^{−η} v`.
//!
//! The invariant oscillator equation is taken in the `(z, t)` plane with the
//! operator `½[(z² − t²) − (∂²_z − ∂²_t)]`; the states `φ_n(z') φ_0(t')`
//! are its eigenfunctions with eigenvalue `n` in every frame. The fully
//! invariant Gaussian `exp{−(z² − t²)/2}` is not normalizable in `t` and is
//! never constructed here.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::basis::phi_unchecked;
use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::squeezed::SqueezeParam;

/// Highest longitudinal excitation accepted by [`BoostedState`].
pub const MAX_EXCITATION: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint {
    pub z: f64,
    pub t: f64,
}

impl SpacetimePoint {
    pub fn new(z: f64, t: f64) -> Self {
        Self { z, t }
    }

    /// `z² − t²`
    pub fn interval(&self) -> f64 {
        (self.z - self.t) * (self.z + self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }

    pub fn to_spacetime(self) -> SpacetimePoint {
        SpacetimePoint {
            z: (self.u + self.v) * FRAC_1_SQRT_2,
            t: (self.u - self.v) * FRAC_1_SQRT_2,
        }
    }
}

/// `z' = z cosh η + t sinh η`, `t' = z sinh η + t cosh η`.
pub fn boost(p: SpacetimePoint, eta: f64) -> SpacetimePoint {
    let (sh, ch) = (eta.sinh(), eta.cosh());
    SpacetimePoint {
        z: p.z * ch + p.t * sh,
        t: p.z * sh + p.t * ch,
    }
}

pub fn to_lightcone(p: SpacetimePoint) -> LightConePoint {
    LightConePoint {
        u: (p.z + p.t) * FRAC_1_SQRT_2,
        v: (p.z - p.t) * FRAC_1_SQRT_2,
    }
}

pub fn squeeze_lightcone(q: LightConePoint, eta: f64) -> LightConePoint {
    LightConePoint {
        u: eta.exp() * q.u,
        v: (-eta).exp() * q.v,
    }
}

/// Oscillator state with `n` longitudinal quanta, no time-like excitation,
/// seen from a frame moving with rapidity `η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostedState {
    n: usize,
    eta: SqueezeParam,
}

impl BoostedState {
    pub fn new(n: usize, eta: SqueezeParam) -> Result<Self> {
        if n > MAX_EXCITATION {
            return Err(Error::ExcitationTooHigh {
                n,
                max: MAX_EXCITATION,
            });
        }
        Ok(Self { n, eta })
    }

    pub fn excitation(&self) -> usize {
        self.n
    }

    pub fn eta(&self) -> SqueezeParam {
        self.eta
    }

    /// Eigenvalue of the invariant operator, `n_z − n_t` with `n_t = 0`.
    pub fn eigenvalue(&self) -> f64 {
        self.n as f64
    }

    pub fn eval(&self, z: f64, t: f64) -> f64 {
        boosted_state_eval(self, z, t)
    }
}

/// `C_n H_n(z') exp{−(z'² + t'²)/2}` at the inverse-boosted coordinates
/// `z' = z cosh η − t sinh η`, `t' = t cosh η − z sinh η`.
pub fn boosted_state_eval(state: &BoostedState, z: f64, t: f64) -> f64 {
    let rest = boost(SpacetimePoint { z, t }, -state.eta.value());
    phi_unchecked(state.n, rest.z) * phi_unchecked(0, rest.t)
}

/// Grid for the finite-difference check of the invariant operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteDifferenceGrid {
    grid: UniformGrid,
}

impl FiniteDifferenceGrid {
    pub const MAX_STEP: f64 = 1e-2;
    pub const MIN_HALF_WIDTH: f64 = 6.0;

    pub fn new(half_width: f64, step: f64) -> Result<Self> {
        if half_width < Self::MIN_HALF_WIDTH {
            return Err(Error::GridTooNarrow {
                half_width,
                required: Self::MIN_HALF_WIDTH,
            });
        }
        if !(step > 0.0 && step <= Self::MAX_STEP) {
            return Err(Error::GridTooCoarse {
                step,
                max_step: Self::MAX_STEP,
            });
        }
        let intervals = (2.0 * half_width / step).round() as usize;
        let grid = UniformGrid::new(half_width, intervals + 1)?;
        if grid.step() > Self::MAX_STEP * (1.0 + 1e-12) {
            return Err(Error::GridTooCoarse {
                step: grid.step(),
                max_step: Self::MAX_STEP,
            });
        }
        Ok(Self { grid })
    }

    pub fn step(&self) -> f64 {
        self.grid.step()
    }

    pub fn half_width(&self) -> f64 {
        self.grid.half_width()
    }
}

impl Default for FiniteDifferenceGrid {
    fn default() -> Self {
        Self::new(Self::MIN_HALF_WIDTH, Self::MAX_STEP).expect("default grid is valid")
    }
}

/// Result of applying the invariant operator on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorCheck {
    /// `max |Op ψ − n ψ|` over interior points.
    pub max_residual: f64,
    /// `⟨ψ, Op ψ⟩ / ⟨ψ, ψ⟩` on the grid.
    pub rayleigh_quotient: f64,
}

/// Applies `½[(z² − t²) − (∂²_z − ∂²_t)]` with second-order central
/// differences and compares against the eigenvalue `n`.
pub fn fkr_operator_check(state: &BoostedState, grid: &FiniteDifferenceGrid) -> OperatorCheck {
    let g = grid.grid;
    let n = g.len();
    let h2 = g.step() * g.step();
    let nodes = g.nodes();
    // row-major, first index z
    let values: Vec<f64> = nodes
        .iter()
        .flat_map(|&z| nodes.iter().map(move |&t| (z, t)))
        .map(|(z, t)| state.eval(z, t))
        .collect();
    let at = |i: usize, j: usize| values[i * n + j];

    let eigenvalue = state.eigenvalue();
    let mut max_residual = 0.0f64;
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    for (i, &z) in nodes.iter().enumerate().take(n - 1).skip(1) {
        for (j, &t) in nodes.iter().enumerate().take(n - 1).skip(1) {
            let psi = at(i, j);
            let d2z = (at(i + 1, j) - 2.0 * psi + at(i - 1, j)) / h2;
            let d2t = (at(i, j + 1) - 2.0 * psi + at(i, j - 1)) / h2;
            let op = 0.5 * ((z * z - t * t) * psi - (d2z - d2t));
            max_residual = max_residual.max((op - eigenvalue * psi).abs());
            numerator += psi * op;
            denominator += psi * psi;
        }
    }
    OperatorCheck {
        max_residual,
        rayleigh_quotient: numerator / denominator,
    }
}

/// Maximum residual of the invariant-operator eigen-relation on `grid`.
pub fn fkr_operator_residual(state: &BoostedState, grid: &FiniteDifferenceGrid) -> f64 {
    fkr_operator_check(state, grid).max_residual
}

/// Axes of the `1/e` contour of the squeezed ground state in the `(z, t)`
/// plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeometry {
    pub major: f64,
    pub minor: f64,
    /// Unit vector `(z, t)` of the major axis.
    pub major_axis: [f64; 2],
    pub minor_axis: [f64; 2],
}

/// Major axis `e^{|η|}`, minor axis `e^{−|η|}`; the major axis lies along the
/// `u` light-cone direction for `η ≥ 0` and along `v` otherwise.
pub fn ellipse_geometry(eta: SqueezeParam) -> EllipseGeometry {
    let e = eta.value();
    let u_axis = [FRAC_1_SQRT_2, FRAC_1_SQRT_2];
    let v_axis = [FRAC_1_SQRT_2, -FRAC_1_SQRT_2];
    let (major_axis, minor_axis) = if e >= 0.0 {
        (u_axis, v_axis)
    } else {
        (v_axis, u_axis)
    };
    EllipseGeometry {
        major: e.abs().exp(),
        minor: (-e.abs()).exp(),
        major_axis,
        minor_axis,
    }
}

/// One point on the contour `e^{−2η}u² + e^{2η}v² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourPoint {
    pub theta: f64,
    pub spacetime: SpacetimePoint,
    pub lightcone: LightConePoint,
}

/// `n_points` equally spaced (in parameter angle) points on the squeeze
/// ellipse, the contour where the wave function falls to `e^{−1/2}` of its
/// peak.
pub fn ellipse_contour(eta: SqueezeParam, n_points: usize) -> Vec<ContourPoint> {
    let e = eta.value();
    (0..n_points)
        .map(|i| {
            let theta = std::f64::consts::TAU * i as f64 / n_points as f64;
            let lightcone = LightConePoint {
                u: e.exp() * theta.cos(),
                v: (-e).exp() * theta.sin(),
            };
            ContourPoint {
                theta,
                spacetime: lightcone.to_spacetime(),
                lightcone,
            }
        })
        .collect()
}
