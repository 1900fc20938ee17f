//! Hermite functions and Gauss–Hermite quadrature.
//!
//! The oscillator eigenfunctions are evaluated with the normalized three-term
//! recurrence
//!
//! ```text
//! φ_{k+1}(x) = sqrt(2/(k+1)) x φ_k(x) − sqrt(k/(k+1)) φ_{k−1}(x)
//! ```
//!
//! started from `φ_0(x) = π^{-1/4} e^{-x²/2}`. The Gaussian factor is kept in
//! a separate log-scale so that the recurrence stays finite far into the
//! classically forbidden region, where `e^{-x²/2}` alone would underflow.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Largest mode index accepted by [`phi`].
pub const MAX_MODE: usize = 1000;

const RESCALE_ABOVE: f64 = 1e150;
const RESCALE_FACTOR: f64 = 1e-150;
// ln(1e150)
const RESCALE_LOG: f64 = 345.387_763_949_106_8;

/// Index of a harmonic-oscillator eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HermiteMode(usize);

impl HermiteMode {
    pub fn new(k: usize) -> Result<Self> {
        if k > MAX_MODE {
            return Err(Error::ModeIndexTooLarge { k, max: MAX_MODE });
        }
        Ok(Self(k))
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn eval(self, x: f64) -> f64 {
        phi_unchecked(self.0, x)
    }

    /// Energy eigenvalue `k + 1/2` in natural units.
    pub fn energy(self) -> f64 {
        self.0 as f64 + 0.5
    }
}

/// Physicists' Hermite polynomial `H_n(x)` from the raw recurrence.
///
/// Fails with [`Error::HermiteOverflow`] as soon as an intermediate value
/// leaves the finite f64 range.
pub fn hermite_poly(n: usize, x: f64) -> Result<f64> {
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut curr = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * curr - 2.0 * k as f64 * prev;
        prev = curr;
        curr = next;
        if !curr.is_finite() {
            return Err(Error::HermiteOverflow { n, x });
        }
    }
    if !curr.is_finite() {
        return Err(Error::HermiteOverflow { n, x });
    }
    Ok(curr)
}

/// Normalized oscillator eigenfunction `φ_k(x)`.
pub fn phi(k: usize, x: f64) -> Result<f64> {
    Ok(HermiteMode::new(k)?.eval(x))
}

/// `φ_0(x), …, φ_{n-1}(x)` in one pass of the recurrence.
pub fn phi_sequence(n: usize, x: f64) -> Result<Vec<f64>> {
    if n > MAX_MODE + 1 {
        return Err(Error::ModeIndexTooLarge {
            k: n - 1,
            max: MAX_MODE,
        });
    }
    let mut out = Vec::with_capacity(n);
    Recurrence::new(x).run(n, |_, value| out.push(value));
    Ok(out)
}

pub(crate) fn phi_unchecked(k: usize, x: f64) -> f64 {
    phi_pair(k, x).1
}

/// `(φ_{k-1}(x), φ_k(x))`, with `φ_{-1} = 0`.
fn phi_pair(k: usize, x: f64) -> (f64, f64) {
    let mut pair = (0.0, 0.0);
    Recurrence::new(x).run(k + 1, |j, value| {
        if j + 1 == k {
            pair.0 = value;
        } else if j == k {
            pair.1 = value;
        }
    });
    pair
}

/// Scaled normalized recurrence; values are `mantissa * exp(log_scale)`.
struct Recurrence {
    x: f64,
    log_scale: f64,
}

impl Recurrence {
    fn new(x: f64) -> Self {
        Self {
            x,
            log_scale: -0.5 * x * x,
        }
    }

    fn run(mut self, n: usize, mut emit: impl FnMut(usize, f64)) {
        if n == 0 {
            return;
        }
        let mut prev = 0.0;
        let mut curr = PI.powf(-0.25);
        emit(0, curr * self.log_scale.exp());
        for k in 0..n - 1 {
            let kf = k as f64;
            let next = (2.0 / (kf + 1.0)).sqrt() * self.x * curr - (kf / (kf + 1.0)).sqrt() * prev;
            prev = curr;
            curr = next;
            if curr.abs() > RESCALE_ABOVE {
                prev *= RESCALE_FACTOR;
                curr *= RESCALE_FACTOR;
                self.log_scale += RESCALE_LOG;
            }
            emit(k + 1, curr * self.log_scale.exp());
        }
    }
}

/// Gauss–Hermite rule for the weight `e^{-x²}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    /// Abscissae, strictly increasing.
    pub nodes: Vec<f64>,
    /// Weights for `∫ e^{-x²} f(x) dx`. Underflow to zero for the outermost
    /// nodes once the order exceeds roughly 360.
    pub weights: Vec<f64>,
    /// `weights[i] * e^{nodes[i]²}`, for integrands that already carry their
    /// own Gaussian decay (such as products of Hermite functions).
    pub scaled_weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureRule {
    /// `∫ e^{-x²} f(x) dx`.
    pub fn integrate_weighted(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// `∫ f(x) dx` for integrands decaying like a unit Gaussian.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.scaled_weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Deviation of `∫ φ_0² dx` from one.
    pub fn self_test_error(&self) -> f64 {
        (self.integrate(|x| phi_unchecked(0, x).powi(2)) - 1.0).abs()
    }
}

/// Builds an `order`-point Gauss–Hermite rule (Golub–Welsch, then Newton
/// polishing of each node on the normalized recurrence).
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule> {
    if !(2..=512).contains(&order) {
        return Err(Error::QuadratureOrder(order));
    }
    let jacobi = DMatrix::from_fn(order, order, |i, j| {
        if i + 1 == j {
            (j as f64 / 2.0).sqrt()
        } else if j + 1 == i {
            (i as f64 / 2.0).sqrt()
        } else {
            0.0
        }
    });
    let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    nodes.sort_by(f64::total_cmp);

    let n = order as f64;
    for x in nodes.iter_mut() {
        for _ in 0..8 {
            let (below, at) = phi_pair(order, *x);
            let derivative = (2.0 * n).sqrt() * below - *x * at;
            let step = at / derivative;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
    }
    // the rule is symmetric; average out residual asymmetry
    for i in 0..order / 2 {
        let j = order - 1 - i;
        let half = 0.5 * (nodes[j] - nodes[i]);
        nodes[i] = -half;
        nodes[j] = half;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }

    let scaled_weights: Vec<f64> = nodes
        .iter()
        .map(|&x| 1.0 / (n * phi_unchecked(order - 1, x).powi(2)))
        .collect();
    let weights = nodes
        .iter()
        .zip(&scaled_weights)
        .map(|(&x, &w)| w * (-x * x).exp())
        .collect();

    Ok(QuadratureRule {
        nodes,
        weights,
        scaled_weights,
        order,
    })
}
