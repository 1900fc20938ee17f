//! The full analytic-versus-oracle suite behind `squeezelab verify`.

use crate::basis::{gauss_hermite, phi_unchecked};
use crate::covariant::{fkr_operator_check, BoostedState, FiniteDifferenceGrid};
use crate::entangle::{
    entropy, purity, reconstruct_wavefunction, reduced_density_kernel, thermal_entropy,
    SchmidtSpectrum, TemperatureMapping, DEFAULT_TRUNCATION,
};
use crate::error::Result;
use crate::oracle::{
    kernel_entropy, lightcone_plane_for, marginal_moments, marginal_plane_for,
    numeric_norm_lightcone, numeric_overlap_lightcone, numeric_partial_trace,
    oscillator_eigen_residual, PartialTraceGrid,
};
use crate::parton::{decoherence_ratio, momentum_width, rapidity_from_energy, PROTON_MASS_GEV};
use crate::squeezed::{eval_momentum, eval_position, marginal_variance, SqueezeParam};

/// Squeeze values exercised by the entanglement checks.
pub const ETA_SET: [f64; 5] = [0.25, 0.5, 1.0, 1.5, 2.0];

/// Schmidt terms for the pointwise reconstruction check; `tanh^N 2` is
/// still 4e-7 at `N = 400`.
const RECONSTRUCTION_TERMS: usize = 1000;

/// Default Gauss–Hermite order for the basis checks.
pub const DEFAULT_QUAD_ORDER: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ToleranceProfile {
    #[default]
    Default,
    /// Every tolerance replaced by 1e-14; most checks cannot meet it.
    Tight,
}

impl ToleranceProfile {
    fn apply(self, tolerance: f64) -> f64 {
        match self {
            ToleranceProfile::Default => tolerance,
            ToleranceProfile::Tight => 1e-14,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub profile: ToleranceProfile,
    pub quad_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            profile: ToleranceProfile::Default,
            quad_order: DEFAULT_QUAD_ORDER,
        }
    }
}

/// One analytic value compared against its numerical reference.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub analytic: f64,
    pub oracle: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn deviation(&self) -> f64 {
        (self.analytic - self.oracle).abs()
    }

    pub fn passed(&self) -> bool {
        self.deviation() <= self.tolerance
    }
}

struct Suite {
    profile: ToleranceProfile,
    checks: Vec<Check>,
}

impl Suite {
    fn push(&mut self, name: impl Into<String>, analytic: f64, oracle: f64, tolerance: f64) {
        self.checks.push(Check {
            name: name.into(),
            analytic,
            oracle,
            tolerance: self.profile.apply(tolerance),
        });
    }
}

fn eta(v: f64) -> SqueezeParam {
    SqueezeParam::new(v).expect("suite values are in range")
}

pub fn run_suite(config: &VerifyConfig) -> Result<Vec<Check>> {
    let mut suite = Suite {
        profile: config.profile,
        checks: Vec::new(),
    };
    basis_checks(&mut suite, config.quad_order)?;
    entanglement_checks(&mut suite)?;
    covariant_checks(&mut suite)?;
    width_checks(&mut suite);
    parton_checks(&mut suite)?;
    Ok(suite.checks)
}

fn basis_checks(suite: &mut Suite, order: usize) -> Result<()> {
    let rule = gauss_hermite(order)?;
    suite.push(
        format!("basis.gauss_hermite_self_test[order={order}]"),
        1.0,
        rule.integrate(|x| phi_unchecked(0, x).powi(2)),
        1e-12,
    );
    let kmax = (order / 2).min(50);
    let mut worst = 0.0f64;
    for j in 0..=kmax {
        for k in j..=kmax {
            let overlap = rule.integrate(|x| phi_unchecked(j, x) * phi_unchecked(k, x));
            let expected = if j == k { 1.0 } else { 0.0 };
            worst = worst.max((overlap - expected).abs());
        }
    }
    suite.push(
        format!("basis.orthonormality[k<={kmax}]"),
        0.0,
        worst,
        1e-10,
    );
    let residual = (0..=5)
        .map(|k| oscillator_eigen_residual(k, 8.0, 1e-3))
        .fold(0.0, f64::max);
    suite.push(
        "basis.oscillator_equation[k<=5,h=1e-3]",
        0.0,
        residual,
        1e-6,
    );
    Ok(())
}

fn entanglement_checks(suite: &mut Suite) -> Result<()> {
    for &e in &ETA_SET {
        let s = eta(e);
        let spectrum = SchmidtSpectrum::new(s, DEFAULT_TRUNCATION)?;
        let kernel = numeric_partial_trace(s, &PartialTraceGrid::for_eta(s))?;
        suite.push(
            format!("entangle.trace.kernel[eta={e}]"),
            1.0,
            kernel.weighted_trace(),
            1e-8,
        );
        suite.push(
            format!("entangle.purity.series[eta={e}]"),
            purity(s),
            spectrum.purity(),
            1e-10,
        );
        suite.push(
            format!("entangle.purity.kernel[eta={e}]"),
            purity(s),
            kernel.weighted_trace_of_square(),
            1e-7,
        );
        suite.push(
            format!("entangle.entropy.series[eta={e}]"),
            entropy(s),
            spectrum.entropy(),
            1e-10,
        );
        suite.push(
            format!("entangle.entropy.kernel[eta={e}]"),
            entropy(s),
            kernel_entropy(&kernel)?,
            1e-5,
        );
        let x = TemperatureMapping::Squared.thermal_argument(s)?;
        suite.push(
            format!("entangle.thermal_entropy[eta={e}]"),
            entropy(s),
            thermal_entropy(x)?,
            1e-9,
        );
        suite.push(
            format!("entangle.kernel.pointwise[eta={e}]"),
            0.0,
            kernel.max_deviation(|a, b| reduced_density_kernel(s, a, b)),
            1e-8,
        );
        suite.push(
            format!("entangle.kernel.series[eta={e}]"),
            reduced_density_kernel(s, 0.7, -0.4),
            spectrum.kernel(0.7, -0.4)?,
            1e-10,
        );
        suite.push(
            format!("entangle.reconstruction[eta={e},N={RECONSTRUCTION_TERMS}]"),
            eval_position(s, 0.5, -0.3),
            reconstruct_wavefunction(s, 0.5, -0.3, RECONSTRUCTION_TERMS)?,
            1e-10,
        );
    }
    Ok(())
}

fn covariant_checks(suite: &mut Suite) -> Result<()> {
    for e in [0.0, 0.5, 1.0, 2.0] {
        let s = eta(e);
        let norm =
            numeric_norm_lightcone(|z, t| eval_position(s, z, t), &lightcone_plane_for(s, 0));
        suite.push(format!("squeezed.norm[eta={e}]"), 1.0, norm, 1e-9);
    }
    for e in [0.0, 1.0, 2.0] {
        let s = eta(e);
        let plane = lightcone_plane_for(s, 5);
        let states = (0..=5)
            .map(|n| BoostedState::new(n, s))
            .collect::<Result<Vec<_>>>()?;
        let mut norm_dev = 0.0f64;
        let mut overlap_dev = 0.0f64;
        for (i, a) in states.iter().enumerate() {
            for b in &states[i..] {
                let overlap =
                    numeric_overlap_lightcone(|z, t| a.eval(z, t), |z, t| b.eval(z, t), &plane);
                if a.excitation() == b.excitation() {
                    norm_dev = norm_dev.max((overlap - 1.0).abs());
                } else {
                    overlap_dev = overlap_dev.max(overlap.abs());
                }
            }
        }
        suite.push(format!("covariant.norm[n<=5,eta={e}]"), 0.0, norm_dev, 1e-8);
        suite.push(
            format!("covariant.orthogonality[n<=5,eta={e}]"),
            0.0,
            overlap_dev,
            1e-8,
        );
    }
    let grid = FiniteDifferenceGrid::default();
    for n in 0..=2 {
        for e in [0.0, 0.5, 1.0] {
            let state = BoostedState::new(n, eta(e))?;
            let check = fkr_operator_check(&state, &grid);
            suite.push(
                format!("covariant.fkr_eigenvalue[n={n},eta={e}]"),
                state.eigenvalue(),
                check.rayleigh_quotient,
                1e-3,
            );
            suite.push(
                format!("covariant.fkr_residual[n={n},eta={e}]"),
                0.0,
                check.max_residual,
                1e-3,
            );
        }
    }
    Ok(())
}

fn width_checks(suite: &mut Suite) {
    for e in [0.0, 1.0, 2.0, 3.0] {
        let s = eta(e);
        let plane = marginal_plane_for(s);
        let spatial = marginal_moments(|z, t| eval_position(s, z, t), &plane);
        suite.push(
            format!("width.spatial[eta={e}]"),
            marginal_variance(s).sqrt(),
            spatial.width(),
            1e-7,
        );
        let momentum = marginal_moments(|qz, q0| eval_momentum(s, qz, q0), &plane);
        suite.push(
            format!("width.momentum[eta={e}]"),
            momentum_width(s),
            momentum.width(),
            1e-7,
        );
    }
}

fn parton_checks(suite: &mut Suite) -> Result<()> {
    let eta = rapidity_from_energy(900.0, PROTON_MASS_GEV)?;
    let ratio = decoherence_ratio(eta)?;
    let gamma = 900.0 / PROTON_MASS_GEV;
    // e^{-2η} with η ≈ ln 2γ
    let asymptotic = 1.0 / (2.0 * gamma).powi(2);
    suite.push(
        "parton.ratio_vs_ln2gamma[900GeV]",
        ratio,
        asymptotic,
        5e-4 * asymptotic,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_profile_fails() {
        let mut suite = Suite {
            profile: ToleranceProfile::Tight,
            checks: Vec::new(),
        };
        basis_checks(&mut suite, DEFAULT_QUAD_ORDER).unwrap();
        assert!(suite.checks.iter().any(|c| !c.passed()));
        assert!(suite.checks.iter().all(|c| c.tolerance == 1e-14));
    }

    #[test]
    fn parton_check_passes() {
        let mut suite = Suite {
            profile: ToleranceProfile::Default,
            checks: Vec::new(),
        };
        parton_checks(&mut suite).unwrap();
        assert!(suite.checks.iter().all(Check::passed), "{:?}", suite.checks);
    }
}
