//! `squeezelab`: tables, CSV and JSON for the squeezed-oscillator library.

mod commands;
mod error;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use squeezelab::verify::DEFAULT_QUAD_ORDER;

use commands::{Mapping, Profile};
use error::CliError;
use record::{emit, Format};

const QUAD_ORDER_VAR: &str = "SQUEEZELAB_QUAD_ORDER";

#[derive(Debug, Parser)]
#[command(
    name = "squeezelab",
    version,
    about = "Coupled oscillators, squeezed states and their entanglement"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal modes of two coupled oscillators with potential ½(A x₁² + A x₂² + 2C x₁x₂).
    Diagonalize {
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        c: f64,
    },
    /// Purity, entropy and effective temperature over a range of η.
    EntropyScan {
        #[arg(long, allow_hyphen_values = true)]
        eta_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        eta_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Mapping::Squared)]
        mapping: Mapping,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
    },
    /// Points on the squeeze ellipse in (z, t) and light-cone (u, v) coordinates.
    Ellipse {
        #[arg(long, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = 64)]
        n_points: usize,
    },
    /// Schmidt coefficients and reduced-state probabilities, `kmax` terms.
    Schmidt {
        #[arg(long, allow_hyphen_values = true)]
        eta: f64,
        #[arg(long, default_value_t = 20)]
        kmax: usize,
    },
    /// Time dilation and decoherence ratio for a hadron of given energy.
    Parton {
        /// Lab energy in GeV.
        #[arg(long)]
        energy: f64,
        /// Hadron mass in GeV.
        #[arg(long, default_value_t = squeezelab::parton::PROTON_MASS_GEV)]
        mass: f64,
    },
    /// Run every analytic-versus-numerical check; exits 3 if any fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Profile::Default)]
        profile: Profile,
    },
}

fn quad_order() -> Result<usize, CliError> {
    match std::env::var(QUAD_ORDER_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Invalid(format!(
                "{QUAD_ORDER_VAR} must be a positive integer (got {text:?})"
            ))
        }),
        Err(_) => Ok(DEFAULT_QUAD_ORDER),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut failures = Vec::new();
    let record = match cli.command {
        Command::Diagonalize { m, a, c } => commands::diagonalize(m, a, c)?,
        Command::EntropyScan {
            eta_min,
            eta_max,
            steps,
            mapping,
            omega,
        } => commands::entropy_scan(eta_min, eta_max, steps, mapping, omega)?,
        Command::Ellipse { eta, n_points } => commands::ellipse(eta, n_points)?,
        Command::Schmidt { eta, kmax } => commands::schmidt(eta, kmax)?,
        Command::Parton { energy, mass } => commands::parton(energy, mass)?,
        Command::Verify { profile } => {
            let (record, failed) = commands::verify(profile, quad_order()?)?;
            failures = failed;
            record
        }
    };
    emit(&record.render(cli.format)?, cli.out.as_deref())?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification {
            failed: failures.len(),
            total: record.rows.len(),
            names: failures.join(", "),
        })
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
