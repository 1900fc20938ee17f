//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use squeezelab::covariant::{
    boost, fkr_operator_check, squeeze_lightcone, to_lightcone, BoostedState, FiniteDifferenceGrid,
    SpacetimePoint,
};
use squeezelab::entangle::{
    entropy, purity, reconstruct_wavefunction, thermal_entropy, SchmidtSpectrum,
};
use squeezelab::oracle::{
    kernel_entropy, lightcone_plane_for, marginal_moments, marginal_plane_for,
    numeric_norm_lightcone, numeric_partial_trace, PartialTraceGrid,
};
use squeezelab::parton::{decoherence_ratio, momentum_width, rapidity_from_energy};
use squeezelab::squeezed::{eval_momentum, eval_position, marginal_variance};
use squeezelab::SqueezeParam;

const ETA_SET: [f64; 5] = [0.25, 0.5, 1.0, 1.5, 2.0];
const SEED: u64 = 0x5eed_2024;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

fn eta(v: f64) -> SqueezeParam {
    SqueezeParam::new(v).unwrap()
}

fn purity_identity() -> Outcome {
    let start = Instant::now();
    let mut worst_series = 0.0f64;
    let mut worst_kernel = 0.0f64;
    for &e in &ETA_SET {
        let s = eta(e);
        let exact = 1.0 / (2.0 * e).cosh();
        assert_eq!(purity(s), exact);
        let series = SchmidtSpectrum::new(s, 400).unwrap().purity();
        let kernel = numeric_partial_trace(s, &PartialTraceGrid::for_eta(s)).unwrap();
        worst_series = worst_series.max((series - exact).abs());
        worst_kernel = worst_kernel.max((kernel.weighted_trace_of_square() - exact).abs());
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst_series <= 1e-10 && worst_kernel <= 1e-7 && elapsed < Duration::from_secs(10),
        format!("series {worst_series:.2e} (tol 1e-10), quadrature {worst_kernel:.2e} (tol 1e-7), {elapsed:.2?} (limit 10s)"),
    )
}

fn entropy_triple() -> Outcome {
    let start = Instant::now();
    let mut worst_series = 0.0f64;
    let mut worst_kernel = 0.0f64;
    for &e in &ETA_SET {
        let s = eta(e);
        let (ch, sh) = (e.cosh(), e.sinh());
        let closed = 2.0 * (ch * ch * ch.ln() - sh * sh * sh.ln());
        assert!((closed - entropy(s)).abs() < 1e-12);
        let series = SchmidtSpectrum::new(s, 400).unwrap().entropy();
        let kernel =
            kernel_entropy(&numeric_partial_trace(s, &PartialTraceGrid::for_eta(s)).unwrap())
                .unwrap();
        worst_series = worst_series.max((series - closed).abs());
        worst_kernel = worst_kernel.max((kernel - closed).abs());
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst_series <= 1e-10 && worst_kernel <= 1e-5 && elapsed < Duration::from_secs(30),
        format!("eigenvalue sum {worst_series:.2e} (tol 1e-10), kernel eigen {worst_kernel:.2e} (tol 1e-5), {elapsed:.2?} (limit 30s)"),
    )
}

fn thermal_identity() -> Outcome {
    let worst = ETA_SET
        .iter()
        .map(|&e| {
            let x = -2.0 * e.tanh().ln();
            (thermal_entropy(x).unwrap() - entropy(eta(e))).abs()
        })
        .fold(0.0, f64::max);
    Outcome::new(worst <= 1e-9, format!("max |Δ| {worst:.2e} (tol 1e-9)"))
}

fn schmidt_reconstruction() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    let mut worst_at = (0.0, 0.0, 0.0);
    for _ in 0..100 {
        let e = rng.gen_range(0.0..=1.5);
        let a = rng.gen_range(-3.0..3.0);
        let b = rng.gen_range(-3.0..3.0);
        let s = eta(e);
        let err = (reconstruct_wavefunction(s, a, b, 50).unwrap() - eval_position(s, a, b)).abs();
        if err > worst {
            worst = err;
            worst_at = (e, a, b);
        }
    }
    let (e, a, b) = worst_at;
    Outcome::new(
        worst <= 1e-8,
        format!("max |Δ| {worst:.2e} at η={e:.3}, a={a:.3}, b={b:.3} (tol 1e-8, N=50, 100 points)"),
    )
}

fn boost_squeeze() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 5);
    let mut conj = 0.0f64;
    let mut product = 0.0f64;
    for _ in 0..1000 {
        let p = SpacetimePoint::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let e = rng.gen_range(-2.0..2.0);
        let direct = to_lightcone(boost(p, e));
        let squeezed = squeeze_lightcone(to_lightcone(p), e);
        conj = conj.max(
            (direct.u - squeezed.u)
                .abs()
                .max((direct.v - squeezed.v).abs()),
        );
        let before = to_lightcone(p);
        product = product.max((direct.u * direct.v - before.u * before.v).abs());
    }
    let mut norm = 0.0f64;
    for e in [0.0, 0.5, 1.0, 2.0] {
        let s = eta(e);
        let plane = lightcone_plane_for(s, 5);
        for n in 0..=5 {
            let state = BoostedState::new(n, s).unwrap();
            let v = numeric_norm_lightcone(|z, t| state.eval(z, t), &plane);
            norm = norm.max((v - 1.0).abs());
        }
    }
    let grid = FiniteDifferenceGrid::new(6.0, 1e-2).unwrap();
    let mut drift = 0.0f64;
    for n in 0..=2 {
        let at_rest =
            fkr_operator_check(&BoostedState::new(n, eta(0.0)).unwrap(), &grid).rayleigh_quotient;
        for e in [0.5, 1.0] {
            let moving =
                fkr_operator_check(&BoostedState::new(n, eta(e)).unwrap(), &grid).rayleigh_quotient;
            drift = drift.max((moving - at_rest).abs());
        }
    }
    Outcome::new(
        conj <= 1e-12 && product <= 1e-12 && norm <= 1e-8 && drift <= 1e-3,
        format!(
            "conjugation {conj:.2e}, u'v'-uv {product:.2e} (tol 1e-12), norm {norm:.2e} (tol 1e-8), eigenvalue drift {drift:.2e} (tol 1e-3, h=1e-2)"
        ),
    )
}

fn parton_decoherence() -> Outcome {
    let energy = 900.0;
    let mass = 0.938;
    let ratio = decoherence_ratio(rapidity_from_energy(energy, mass).unwrap()).unwrap();
    let gamma = energy / mass;
    let asymptotic = (-2.0 * (2.0 * gamma).ln()).exp();
    let in_band = (1e-7..=1e-5).contains(&ratio);
    let three_figures = format!("{ratio:.2e}") == format!("{asymptotic:.2e}");
    Outcome::new(
        in_band && three_figures,
        format!("ratio {ratio:.5e} in [1e-7, 1e-5]: {in_band}; ln 2γ estimate {asymptotic:.5e}, 3 s.f. match: {three_figures}"),
    )
}

fn width_covariance() -> Outcome {
    let etas: Vec<f64> = (0..=12).map(|i| 0.25 * i as f64).collect();
    let mut spatial_widths = Vec::new();
    let mut momentum_widths = Vec::new();
    let mut worst = 0.0f64;
    for &e in &etas {
        let s = eta(e);
        let exact = ((2.0 * e).cosh() / 2.0).sqrt();
        assert!((marginal_variance(s).sqrt() - exact).abs() <= 1e-14 * exact);
        assert!((momentum_width(s) - exact).abs() <= 1e-14 * exact);
        let plane = marginal_plane_for(s);
        let spatial = marginal_moments(|z, t| eval_position(s, z, t), &plane).width();
        let momentum = marginal_moments(|qz, q0| eval_momentum(s, qz, q0), &plane).width();
        worst = worst
            .max((spatial - exact).abs())
            .max((momentum - exact).abs());
        spatial_widths.push(spatial);
        momentum_widths.push(momentum);
    }
    let increasing = |w: &[f64]| w.windows(2).all(|p| p[1] > p[0]);
    let monotone = increasing(&spatial_widths) && increasing(&momentum_widths);
    Outcome::new(
        worst <= 1e-7 && monotone,
        format!("quadrature vs closed form {worst:.2e} (tol 1e-7), strictly increasing on [0,3]: {monotone}"),
    )
}

fn cli_determinism() -> Outcome {
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_squeezelab"));
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let run = |args: &[&str]| {
        Command::new(&bin)
            .args(args)
            .env_remove("SQUEEZELAB_QUAD_ORDER")
            .output()
            .expect("binary runs")
    };
    let cases: [(&[&str], &str); 3] = [
        (
            &[
                "entropy-scan",
                "--eta-min",
                "0",
                "--eta-max",
                "2",
                "--steps",
                "9",
                "--format",
                "csv",
            ],
            "entropy_scan.csv",
        ),
        (
            &["schmidt", "--eta", "1", "--kmax", "12", "--format", "csv"],
            "schmidt.csv",
        ),
        (
            &["parton", "--energy", "900", "--format", "csv"],
            "parton.csv",
        ),
    ];
    let mut stable = true;
    for (args, file) in cases {
        let expected = std::fs::read(golden.join(file)).expect("golden file present");
        let first = run(args);
        let second = run(args);
        stable &=
            first.status.success() && first.stdout == second.stdout && first.stdout == expected;
    }
    let start = Instant::now();
    let verify = run(&["verify"]);
    let elapsed = start.elapsed();
    let verified = verify.status.code() == Some(0) && elapsed < Duration::from_secs(60);
    Outcome::new(
        stable && verified,
        format!(
            "golden files byte-stable: {stable}; verify exit {:?} in {elapsed:.2?} (limit 60s)",
            verify.status.code()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("purity identity", purity_identity),
        ("entropy triple agreement", entropy_triple),
        ("thermal identity", thermal_identity),
        ("Schmidt reconstruction", schmidt_reconstruction),
        ("boost/squeeze conjugation and invariance", boost_squeeze),
        ("parton decoherence", parton_decoherence),
        ("width covariance", width_covariance),
        ("CLI determinism", cli_determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {} {name}: {status} ({})", i + 1, outcome.detail);
        if !outcome.passed {
            failures += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
