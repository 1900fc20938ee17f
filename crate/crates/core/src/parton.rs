//! Quark-parton kinematics of a boosted two-quark hadron.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::squeezed::{marginal_variance, SqueezeParam};

/// Proton mass in GeV.
pub const PROTON_MASS_GEV: f64 = 0.938;

/// Energy and longitudinal momentum; transverse components are zero.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourMomentum {
    pub e: f64,
    pub pz: f64,
}

impl FourMomentum {
    pub fn new(e: f64, pz: f64) -> Self {
        Self { e, pz }
    }

    /// `e² − pz²`, of either sign.
    pub fn mass_squared(&self) -> f64 {
        (self.e - self.pz) * (self.e + self.pz)
    }

    /// Boost along `z` with rapidity `eta`.
    pub fn boosted(&self, eta: f64) -> Self {
        let (sh, ch) = (eta.sinh(), eta.cosh());
        Self {
            e: self.e * ch + self.pz * sh,
            pz: self.e * sh + self.pz * ch,
        }
    }
}

impl Add for FourMomentum {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.e + rhs.e, self.pz + rhs.pz)
    }
}

impl Sub for FourMomentum {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.e - rhs.e, self.pz - rhs.pz)
    }
}

impl Mul<f64> for FourMomentum {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        Self::new(self.e * rhs, self.pz * rhs)
    }
}

/// Total momentum `P = pa + pb` and relative momentum `q = √2 (pa − pb)`.
pub fn momentum_split(pa: FourMomentum, pb: FourMomentum) -> (FourMomentum, FourMomentum) {
    (pa + pb, (pa - pb) * SQRT_2)
}

/// `(q_u, q_v) = ((q_0 − q_z)/√2, (q_0 + q_z)/√2)`.
pub fn momentum_lightcone(q: FourMomentum) -> (f64, f64) {
    ((q.e - q.pz) * FRAC_1_SQRT_2, (q.e + q.pz) * FRAC_1_SQRT_2)
}

/// Rapidity of a hadron of mass `hadron_mass` with lab energy `lab_energy`,
/// `arccosh(E/m)`.
pub fn rapidity_from_energy(lab_energy: f64, hadron_mass: f64) -> Result<f64> {
    if !(hadron_mass.is_finite() && hadron_mass > 0.0) {
        return Err(Error::InvalidMass(hadron_mass));
    }
    if !(lab_energy.is_finite() && lab_energy >= hadron_mass) {
        return Err(Error::EnergyBelowMass {
            energy: lab_energy,
            mass: hadron_mass,
        });
    }
    let gamma = lab_energy / hadron_mass;
    // ln(γ + √(γ² − 1)), with γ² − 1 factored to keep precision near γ = 1
    Ok((gamma + ((gamma - 1.0) * (gamma + 1.0)).sqrt()).ln())
}

/// Time dilation of the internal oscillation and contraction of the
/// external crossing time at rapidity `η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherenceFactors {
    /// Oscillation period stretch `e^{η}`.
    pub dilation: f64,
    /// Crossing-time shrink `e^{−η}`.
    pub contraction: f64,
    /// `contraction / dilation = e^{−2η}`.
    pub ratio: f64,
}

impl DecoherenceFactors {
    pub fn new(eta: f64) -> Result<Self> {
        if !(eta.is_finite() && eta >= 0.0) {
            return Err(Error::NegativeRapidity(eta));
        }
        Ok(Self {
            dilation: eta.exp(),
            contraction: (-eta).exp(),
            ratio: (-2.0 * eta).exp(),
        })
    }
}

/// Ratio of the external signal's crossing time to the internal period.
pub fn decoherence_ratio(eta: f64) -> Result<f64> {
    Ok(DecoherenceFactors::new(eta)?.ratio)
}

/// Standard deviation of `q_z` under the squeezed momentum wave function;
/// identical to the spatial width of `z`.
pub fn momentum_width(eta: SqueezeParam) -> f64 {
    marginal_variance(eta).sqrt()
}

/// A hadron of given mass and lab energy, with its derived rapidity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartonKinematics {
    pub hadron_mass: f64,
    pub lab_energy: f64,
    pub eta: f64,
    pub factors: DecoherenceFactors,
}

impl PartonKinematics {
    pub fn new(lab_energy: f64, hadron_mass: f64) -> Result<Self> {
        let eta = rapidity_from_energy(lab_energy, hadron_mass)?;
        Ok(Self {
            hadron_mass,
            lab_energy,
            eta,
            factors: DecoherenceFactors::new(eta)?,
        })
    }

    pub fn ratio(&self) -> f64 {
        self.factors.ratio
    }
}
