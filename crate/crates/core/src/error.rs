use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("squeeze parameter {0} is outside the supported range |eta| <= 20")]
    EtaOutOfRange(f64),

    #[error("Hermite polynomial H_{n}({x}) exceeds the f64 range")]
    HermiteOverflow { n: usize, x: f64 },

    #[error("mode index {k} exceeds the supported maximum {max}")]
    ModeIndexTooLarge { k: usize, max: usize },

    #[error("quadrature order {0} is outside 2..=512")]
    QuadratureOrder(usize),

    #[error("mass must be positive and finite, got {0}")]
    InvalidMass(f64),

    #[error("A must exceed |C| for a confining potential (A = {a}, C = {c})")]
    NonConfining { a: f64, c: f64 },

    #[error("truncation must keep at least one term")]
    EmptyTruncation,

    #[error("no finite positive temperature exists for eta = {0}; eta must be > 0")]
    NonPositiveEta(f64),

    #[error("frequency must be positive, got {0}")]
    NonPositiveFrequency(f64),

    #[error("thermal argument x = hbar*omega/kT must be positive, got {0}")]
    NonPositiveThermalArgument(f64),

    #[error("excitation level {n} exceeds the supported maximum {max}")]
    ExcitationTooHigh { n: usize, max: usize },

    #[error("grid step {step} is coarser than the required {max_step}")]
    GridTooCoarse { step: f64, max_step: f64 },

    #[error("grid half-width {half_width} does not cover the required {required}")]
    GridTooNarrow { half_width: f64, required: f64 },

    #[error("grid has {points} points, at least {required} are required")]
    TooFewGridPoints { points: usize, required: usize },

    #[error("probability mass outside the grid is about {mass:e}, above {limit:e}")]
    InsufficientCoverage { mass: f64, limit: f64 },

    #[error("kernel eigenvalue {0:e} is below -1e-6; the discretization failed")]
    NegativeEigenvalue(f64),

    #[error("lab energy {energy} GeV is below the hadron mass {mass} GeV")]
    EnergyBelowMass { energy: f64, mass: f64 },

    #[error("rapidity must be non-negative and finite, got {0}")]
    NegativeRapidity(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
