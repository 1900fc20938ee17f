//! The two-variable squeezed Gaussian.
//!
//! The same wave function describes the coupled-oscillator ground state in
//! `(x1, x2)`, the observed/unobserved pair `(x, y)`, the boosted hadron in
//! `(z, t)` and its momentum-energy counterpart in `(q_z, q_0)`. Only the
//! labels differ, so one kernel serves all four.
//!
//! `|ψ|²` is a centered bivariate normal whose covariance has principal axes
//! along `(1, 1)/√2` and `(1, −1)/√2` with variances `e^{2η}/2` and
//! `e^{-2η}/2`. Evaluation goes through those principal variances rather than
//! the expanded `cosh 2η`/`sinh 2η` quadratic form, which cancels
//! catastrophically for large `|η|`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use nalgebra::Matrix2;

use crate::error::{Error, Result};

/// Dimensionless squeeze (coupling, rapidity) parameter, `|η| ≤ 20`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SqueezeParam(f64);

impl SqueezeParam {
    pub const MAX_ABS: f64 = 20.0;
    pub const ZERO: SqueezeParam = SqueezeParam(0.0);

    pub fn new(eta: f64) -> Result<Self> {
        if eta.is_finite() && eta.abs() <= Self::MAX_ABS {
            Ok(Self(eta))
        } else {
            Err(Error::EtaOutOfRange(eta))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `tanh η`
    pub fn tanh(self) -> f64 {
        self.0.tanh()
    }

    pub fn cosh(self) -> f64 {
        self.0.cosh()
    }

    pub fn sinh(self) -> f64 {
        self.0.sinh()
    }
}

impl fmt::Display for SqueezeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<f64> for SqueezeParam {
    type Error = Error;

    fn try_from(eta: f64) -> Result<Self> {
        Self::new(eta)
    }
}

/// Which physical pair of variables a [`TwoModeGaussian`] is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariablePair {
    X1X2,
    XY,
    ZT,
    Momentum,
}

impl VariablePair {
    pub fn names(self) -> [&'static str; 2] {
        match self {
            VariablePair::X1X2 => ["x1", "x2"],
            VariablePair::XY => ["x", "y"],
            VariablePair::ZT => ["z", "t"],
            VariablePair::Momentum => ["q_z", "q_0"],
        }
    }
}

/// Squeezed ground state over two variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeGaussian {
    eta: SqueezeParam,
    labels: VariablePair,
    /// Variances of `|ψ|²` along `(1,1)/√2` and `(1,−1)/√2`.
    principal_variances: [f64; 2],
}

impl TwoModeGaussian {
    pub fn new(eta: SqueezeParam, labels: VariablePair) -> Self {
        let e2 = (2.0 * eta.value()).exp();
        Self {
            eta,
            labels,
            principal_variances: [0.5 * e2, 0.5 / e2],
        }
    }

    pub fn eta(&self) -> SqueezeParam {
        self.eta
    }

    pub fn labels(&self) -> VariablePair {
        self.labels
    }

    pub fn principal_variances(&self) -> [f64; 2] {
        self.principal_variances
    }

    /// Covariance matrix of `|ψ|²` in the labelled variables.
    pub fn covariance(&self) -> Matrix2<f64> {
        let [su, sv] = self.principal_variances;
        let diag = 0.5 * (su + sv);
        let off = 0.5 * (su - sv);
        Matrix2::new(diag, off, off, diag)
    }

    pub fn covariance_determinant(&self) -> f64 {
        self.principal_variances[0] * self.principal_variances[1]
    }

    /// `ψ(a, b) = (2π √det Σ)^{-1/2} exp(−¼ rᵀ Σ⁻¹ r)`.
    pub fn eval(&self, a: f64, b: f64) -> f64 {
        let u = (a + b) * FRAC_1_SQRT_2;
        let v = (a - b) * FRAC_1_SQRT_2;
        self.eval_principal(u, v)
    }

    fn eval_principal(&self, u: f64, v: f64) -> f64 {
        let [su, sv] = self.principal_variances;
        let norm = (2.0 * PI * self.covariance_determinant().sqrt()).powf(-0.5);
        norm * (-0.25 * (u * u / su + v * v / sv)).exp()
    }
}

/// `(1/√π) exp{−¼[e^{−2η}(a+b)² + e^{2η}(a−b)²]}`.
pub fn eval_position(eta: SqueezeParam, a: f64, b: f64) -> f64 {
    TwoModeGaussian::new(eta, VariablePair::X1X2).eval(a, b)
}

/// `(1/√π) exp{−½(e^{−2η}u² + e^{2η}v²)}`.
pub fn eval_lightcone(eta: SqueezeParam, u: f64, v: f64) -> f64 {
    TwoModeGaussian::new(eta, VariablePair::ZT).eval_principal(u, v)
}

/// Momentum-energy wave function with `q_u = (q_0 − q_z)/√2`,
/// `q_v = (q_0 + q_z)/√2`.
pub fn eval_momentum(eta: SqueezeParam, qz: f64, q0: f64) -> f64 {
    let qu = (q0 - qz) * FRAC_1_SQRT_2;
    let qv = (q0 + qz) * FRAC_1_SQRT_2;
    TwoModeGaussian::new(eta, VariablePair::Momentum).eval_principal(qu, qv)
}

/// Variance of one variable once the other is integrated out: `cosh(2η)/2`.
pub fn marginal_variance(eta: SqueezeParam) -> f64 {
    0.5 * (2.0 * eta.value()).cosh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn eta(v: f64) -> SqueezeParam {
        SqueezeParam::new(v).unwrap()
    }

    /// The expanded closed form, used as an independent reference.
    fn closed_form(eta: f64, a: f64, b: f64) -> f64 {
        (-0.25 * ((-2.0 * eta).exp() * (a + b).powi(2) + (2.0 * eta).exp() * (a - b).powi(2))).exp()
            / PI.sqrt()
    }

    #[test]
    fn range_is_enforced() {
        assert!(SqueezeParam::new(20.0).is_ok());
        assert_eq!(
            SqueezeParam::new(20.5).unwrap_err(),
            Error::EtaOutOfRange(20.5)
        );
        assert!(SqueezeParam::new(f64::NAN).is_err());
    }

    #[test]
    fn position_examples() {
        assert_abs_diff_eq!(
            eval_position(eta(0.0), 0.0, 0.0),
            0.564_189_583_547_756_3,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            eval_position(eta(0.0), 1.0, 1.0),
            0.207_553_748_710_297_35,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            eval_position(eta(1.0), 1.0, 1.0),
            0.492_776_169_064_655_7,
            epsilon = 1e-15
        );
    }

    #[test]
    fn lightcone_examples() {
        for e in [-3.0, 0.0, 2.5] {
            assert_abs_diff_eq!(
                eval_lightcone(eta(e), 0.0, 0.0),
                1.0 / PI.sqrt(),
                epsilon = 1e-15
            );
        }
        assert_abs_diff_eq!(
            eval_lightcone(eta(0.5), 1.0, 0.0),
            0.469_397_808_871_633_7,
            epsilon = 1e-15
        );
    }

    #[test]
    fn momentum_examples() {
        assert_abs_diff_eq!(
            eval_momentum(eta(1.3), 0.0, 0.0),
            1.0 / PI.sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            eval_momentum(eta(0.0), 1.0, 0.0),
            0.342_198_280_312_216_5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn marginal_variance_examples() {
        assert_eq!(marginal_variance(eta(0.0)), 0.5);
        assert_abs_diff_eq!(
            marginal_variance(eta(1.0)),
            1.881_097_845_541_815_7,
            epsilon = 1e-15
        );
        assert_eq!(marginal_variance(eta(-1.7)), marginal_variance(eta(1.7)));
    }

    #[test]
    fn covariance_matrix_form() {
        let g = TwoModeGaussian::new(eta(0.8), VariablePair::XY);
        let cov = g.covariance();
        assert_abs_diff_eq!(cov[(0, 0)], 0.5 * 1.6f64.cosh(), epsilon = 1e-14);
        assert_abs_diff_eq!(cov[(0, 1)], 0.5 * 1.6f64.sinh(), epsilon = 1e-14);
        assert_abs_diff_eq!(cov.determinant(), 0.25, epsilon = 1e-13);
        assert_eq!(g.labels().names(), ["x", "y"]);
    }

    #[test]
    fn large_eta_stays_finite() {
        let g = TwoModeGaussian::new(eta(20.0), VariablePair::ZT);
        let value = g.eval(1e3, 1e3);
        assert!(value.is_finite() && value > 0.0);
    }

    proptest! {
        #[test]
        fn matches_expanded_closed_form(e in -3.0f64..3.0, a in -4.0f64..4.0, b in -4.0f64..4.0) {
            let got = eval_position(eta(e), a, b);
            prop_assert!((got - closed_form(e, a, b)).abs() <= 1e-14);
        }

        #[test]
        fn lightcone_is_a_change_of_variables(e in -5.0f64..5.0, a in -4.0f64..4.0, b in -4.0f64..4.0) {
            let u = (a + b) * FRAC_1_SQRT_2;
            let v = (a - b) * FRAC_1_SQRT_2;
            prop_assert!((eval_lightcone(eta(e), u, v) - eval_position(eta(e), a, b)).abs() <= 1e-15);
        }

        #[test]
        fn momentum_mirrors_position(e in -5.0f64..5.0, qz in -4.0f64..4.0, q0 in -4.0f64..4.0) {
            // (q_u, q_v) plays the role of (u, v) with (a, b) = (q_0, −q_z)
            let via_position = eval_position(eta(e), q0, -qz);
            prop_assert!((eval_momentum(eta(e), qz, q0) - via_position).abs() <= 1e-15);
            prop_assert!((eval_momentum(eta(e), qz, q0) - eval_position(eta(-e), qz, q0)).abs() <= 1e-15);
        }

        #[test]
        fn exchange_symmetry(e in -5.0f64..5.0, a in -4.0f64..4.0, b in -4.0f64..4.0) {
            prop_assert_eq!(eval_position(eta(e), a, b), eval_position(eta(e), b, a));
        }

        #[test]
        fn covariance_determinant_is_invariant(e in -20.0f64..20.0) {
            let g = TwoModeGaussian::new(eta(e), VariablePair::X1X2);
            let [su, sv] = g.principal_variances();
            prop_assert!((su * sv - 0.25).abs() <= 1e-12 * 0.25);
        }
    }

    #[test]
    fn peak_is_squeeze_invariant() {
        for e in [0.0, 0.5, 1.0, 2.0, -1.5] {
            let g = TwoModeGaussian::new(eta(e), VariablePair::X1X2);
            let mut peak = 0.0f64;
            for i in -40..=40 {
                for j in -40..=40 {
                    peak = peak.max(g.eval(0.1 * i as f64, 0.1 * j as f64));
                }
            }
            assert_abs_diff_eq!(peak, 1.0 / PI.sqrt(), epsilon = 1e-12);
        }
    }
}
