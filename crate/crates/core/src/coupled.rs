//! Two equal-mass oscillators with a bilinear coupling `2C x1 x2`.
//!
//! Rotating to `z1 = (x1+x2)/√2`, `z2 = (x1−x2)/√2` separates the Hamiltonian
//! into `(1/2m)(p̃1²+p̃2²) + (K/2)(e^{-2η} z1² + e^{2η} z2²)` with
//! `K = √(A²−C²)` and `K e^{∓2η} = A ± C`.
//!
//! Note: the normal-mode frequencies are `ω e^{∓η}`, not `ω e^{∓2η}`; the
//! squared frequencies carry the factor `e^{∓2η}`.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::squeezed::SqueezeParam;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    m: f64,
    a: f64,
    c: f64,
}

impl OscillatorParams {
    pub fn new(m: f64, a: f64, c: f64) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::InvalidMass(m));
        }
        if !(a.is_finite() && c.is_finite() && a > c.abs()) {
            return Err(Error::NonConfining { a, c });
        }
        Ok(Self { m, a, c })
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn diagonal(&self) -> f64 {
        self.a
    }

    pub fn coupling(&self) -> f64 {
        self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalModeData {
    /// Effective spring constant `√(A²−C²)`.
    pub k: f64,
    pub eta: f64,
    /// Base frequency `√(K/m)`.
    pub omega: f64,
    /// `√((A+|C|)/m)`
    pub omega_fast: f64,
    /// `√((A−|C|)/m)`
    pub omega_slow: f64,
}

impl NormalModeData {
    pub fn squeeze(&self) -> Result<SqueezeParam> {
        SqueezeParam::new(self.eta)
    }
}

pub fn normal_coordinates(x1: f64, x2: f64) -> (f64, f64) {
    ((x1 + x2) * FRAC_1_SQRT_2, (x1 - x2) * FRAC_1_SQRT_2)
}

pub fn diagonalize(params: &OscillatorParams) -> NormalModeData {
    let OscillatorParams { m, a, c } = *params;
    let sum = a + c;
    let diff = a - c;
    let k = (sum * diff).sqrt();
    let eta = 0.25 * (diff / sum).ln();
    let omega = (k / m).sqrt();
    let (hi, lo) = if sum >= diff {
        (sum, diff)
    } else {
        (diff, sum)
    };
    NormalModeData {
        k,
        eta,
        omega,
        omega_fast: (hi / m).sqrt(),
        omega_slow: (lo / m).sqrt(),
    }
}

pub fn hamiltonian_energy(params: &OscillatorParams, x1: f64, x2: f64, p1: f64, p2: f64) -> f64 {
    let OscillatorParams { m, a, c } = *params;
    0.5 * ((p1 * p1 + p2 * p2) / m + a * (x1 * x1 + x2 * x2) + 2.0 * c * x1 * x2)
}

/// The same energy written in normal coordinates and their conjugate momenta.
pub fn normal_mode_energy(
    modes: &NormalModeData,
    m: f64,
    z1: f64,
    z2: f64,
    pz1: f64,
    pz2: f64,
) -> f64 {
    (pz1 * pz1 + pz2 * pz2) / (2.0 * m)
        + 0.5 * modes.k * ((-2.0 * modes.eta).exp() * z1 * z1 + (2.0 * modes.eta).exp() * z2 * z2)
}
