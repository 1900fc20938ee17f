//! Two-mode squeezed oscillator states.
//!
//! A pair of coupled oscillators, a Lorentz-boosted bound state and the
//! partons of a fast hadron all share one Gaussian wave function whose shape
//! is fixed by a single squeeze parameter `η`. This crate evaluates that
//! state in each reading, decomposes it into Schmidt modes, computes the
//! entropy left behind when one variable is unobserved, and checks every
//! closed form against brute-force quadrature.
//!
//! Natural units `ħ = m = ω = 1` are used throughout, except for the
//! temperature map in [`entangle`] and the GeV inputs of [`parton`].

pub mod basis;
pub mod coupled;
pub mod covariant;
pub mod entangle;
mod error;
pub mod grid;
pub mod oracle;
pub mod parton;
pub mod squeezed;
pub mod verify;

pub use error::{Error, Result};
pub use squeezed::{SqueezeParam, TwoModeGaussian, VariablePair};
