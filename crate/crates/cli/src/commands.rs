use clap::ValueEnum;
use squeezelab::coupled::{diagonalize as diagonalize_params, OscillatorParams};
use squeezelab::covariant::ellipse_contour;
use squeezelab::entangle::{
    effective_temperature, entropy, purity, schmidt_coefficient, thermal_entropy,
    TemperatureMapping,
};
use squeezelab::parton::PartonKinematics;
use squeezelab::verify::{run_suite, ToleranceProfile, VerifyConfig};
use squeezelab::SqueezeParam;

use crate::error::CliError;
use crate::record::OutputRecord;

pub const MIN_ELLIPSE_POINTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Mapping {
    #[default]
    Squared,
    Literal,
}

impl Mapping {
    fn name(self) -> &'static str {
        match self {
            Mapping::Squared => "squared",
            Mapping::Literal => "literal",
        }
    }
}

impl From<Mapping> for TemperatureMapping {
    fn from(m: Mapping) -> Self {
        match m {
            Mapping::Squared => TemperatureMapping::Squared,
            Mapping::Literal => TemperatureMapping::Literal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Profile {
    #[default]
    Default,
    Tight,
}

impl Profile {
    fn name(self) -> &'static str {
        match self {
            Profile::Default => "default",
            Profile::Tight => "tight",
        }
    }
}

impl From<Profile> for ToleranceProfile {
    fn from(p: Profile) -> Self {
        match p {
            Profile::Default => ToleranceProfile::Default,
            Profile::Tight => ToleranceProfile::Tight,
        }
    }
}

pub fn diagonalize(m: f64, a: f64, c: f64) -> Result<OutputRecord, CliError> {
    let params = OscillatorParams::new(m, a, c)?;
    let modes = diagonalize_params(&params);
    let mut record = OutputRecord::new(
        "diagonalize",
        &["k", "eta", "omega", "omega_fast", "omega_slow"],
    )
    .param("m", m)
    .param("a", a)
    .param("c", c);
    record.push(vec![
        modes.k,
        modes.eta,
        modes.omega,
        modes.omega_fast,
        modes.omega_slow,
    ]);
    Ok(record)
}

pub fn entropy_scan(
    eta_min: f64,
    eta_max: f64,
    steps: usize,
    mapping: Mapping,
    omega: f64,
) -> Result<OutputRecord, CliError> {
    if steps < 2 {
        return Err(CliError::Invalid(format!(
            "steps must be at least 2 (got {steps})"
        )));
    }
    if eta_min.is_nan() || eta_max.is_nan() || eta_min >= eta_max {
        return Err(CliError::Invalid(format!(
            "eta-min must be below eta-max (got {eta_min} and {eta_max})"
        )));
    }
    SqueezeParam::new(eta_min)?;
    SqueezeParam::new(eta_max)?;
    let mut record = OutputRecord::new(
        "entropy-scan",
        &[
            "eta",
            "purity",
            "entropy",
            "effective_temperature",
            "thermal_entropy",
        ],
    )
    .param("eta_min", eta_min)
    .param("eta_max", eta_max)
    .param("steps", steps)
    .param("mapping", mapping.name())
    .param("omega", omega);
    let span = eta_max - eta_min;
    for i in 0..steps {
        let value = if i + 1 == steps {
            eta_max
        } else {
            eta_min + span * i as f64 / (steps - 1) as f64
        };
        let eta = SqueezeParam::new(value)?;
        let magnitude = SqueezeParam::new(value.abs())?;
        let (temperature, thermal) = if value == 0.0 {
            (0.0, 0.0)
        } else {
            let mapping = TemperatureMapping::from(mapping);
            (
                effective_temperature(magnitude, omega, mapping)?,
                thermal_entropy(mapping.thermal_argument(magnitude)?)?,
            )
        };
        record.push(vec![value, purity(eta), entropy(eta), temperature, thermal]);
    }
    Ok(record)
}

pub fn ellipse(eta: f64, n_points: usize) -> Result<OutputRecord, CliError> {
    if n_points < MIN_ELLIPSE_POINTS {
        return Err(CliError::Invalid(format!(
            "n-points must be at least {MIN_ELLIPSE_POINTS} (got {n_points})"
        )));
    }
    let squeeze = SqueezeParam::new(eta)?;
    let mut record = OutputRecord::new("ellipse", &["theta", "z", "t", "u", "v"])
        .param("eta", eta)
        .param("n_points", n_points);
    for p in ellipse_contour(squeeze, n_points) {
        record.push(vec![
            p.theta,
            p.spacetime.z,
            p.spacetime.t,
            p.lightcone.u,
            p.lightcone.v,
        ]);
    }
    Ok(record)
}

/// Rows `k = 0..kmax`, stopping early once the coefficients vanish exactly.
pub fn schmidt(eta: f64, kmax: usize) -> Result<OutputRecord, CliError> {
    if kmax < 1 {
        return Err(CliError::Invalid("kmax must be at least 1".to_owned()));
    }
    let squeeze = SqueezeParam::new(eta)?;
    let mut record = OutputRecord::new("schmidt", &["k", "coefficient", "p_k", "cumulative"])
        .param("eta", eta)
        .param("kmax", kmax);
    let mut cumulative = 0.0;
    for k in 0..kmax {
        let coefficient = schmidt_coefficient(squeeze, k);
        if coefficient == 0.0 {
            break;
        }
        let p = coefficient * coefficient;
        cumulative += p;
        record.push(vec![k as f64, coefficient, p, cumulative]);
    }
    Ok(record)
}

pub fn parton(energy: f64, mass: f64) -> Result<OutputRecord, CliError> {
    let kin = PartonKinematics::new(energy, mass)?;
    let mut record = OutputRecord::new("parton", &["eta", "dilation", "contraction", "ratio"])
        .param("energy_gev", energy)
        .param("mass_gev", mass);
    record.push(vec![
        kin.eta,
        kin.factors.dilation,
        kin.factors.contraction,
        kin.factors.ratio,
    ]);
    Ok(record)
}

/// The check table, plus the names of any failed checks.
pub fn verify(
    profile: Profile,
    quad_order: usize,
) -> Result<(OutputRecord, Vec<String>), CliError> {
    let config = VerifyConfig {
        profile: profile.into(),
        quad_order,
    };
    let checks = run_suite(&config)?;
    let mut record = OutputRecord::new(
        "verify",
        &["analytic", "oracle", "deviation", "tolerance", "pass"],
    )
    .param("profile", profile.name())
    .param("quad_order", quad_order);
    let mut failed = Vec::new();
    for check in &checks {
        let pass = check.passed();
        if !pass {
            failed.push(check.name.clone());
        }
        record.push_labeled(
            check.name.clone(),
            vec![
                check.analytic,
                check.oracle,
                check.deviation(),
                check.tolerance,
                if pass { 1.0 } else { 0.0 },
            ],
        );
    }
    Ok((record, failed))
}
