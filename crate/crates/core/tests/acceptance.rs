//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use absphase::classical_limit::{
    fourier_abs_sin, fourier_abs_theta, limit_sweeps, Observable, DEFAULT_NBAR_LIST,
};
use absphase::oscillator::{
    action_integral, inverse_transform, trajectory_phase_check, Orientation, OscillatorParams,
};
use absphase::phase_ops::{
    build_operator_from_phase_function, build_phi_analytic, number_state_moment, trig_closure,
    verify_cos_identity, verify_sin2_identity,
};
use absphase::quadrature::{default_grid_points, make_phase_grid};
use absphase::restricted::{
    commutator_closed_form, commutator_expectation, finite_theta_matrix, finite_to_rotator_limit,
    npcr_counterexample, random_superposition, subspace_c_projection, uncertainty_check, BoxConfig,
    FiniteDimConfig, WindowExponent,
};
use absphase::{Complex64, Result};

const N_MAX: usize = 128;

type Check = fn() -> Result<Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn phi_oracle() -> Result<Outcome> {
    let analytic = build_phi_analytic(N_MAX)?;
    let grid = make_phase_grid(1024)?;
    let quad = build_operator_from_phase_function(|phi| phi, &grid, N_MAX)?.operator;
    let diff = analytic.max_abs_diff(&quad)?;
    outcome(
        diff < 1e-8,
        format!("max |analytic - quadrature| = {diff:.3e}"),
    )
}

fn diagonal_law() -> Result<Outcome> {
    let phi = build_phi_analytic(N_MAX)?;
    let diag = (0..=N_MAX)
        .map(|n| (phi.get(n, n).re - FRAC_PI_2).abs())
        .fold(0.0, f64::max);
    let off = (phi.get(0, 1).re + 2.0 * SQRT_2 / PI).abs();
    outcome(
        diag < 1e-12 && off < 1e-12,
        format!("diagonal err {diag:.3e}, <0|Phi|1> err {off:.3e}"),
    )
}

fn correction_identities() -> Result<Outcome> {
    let cos = verify_cos_identity(N_MAX)?;
    let sin2 = verify_sin2_identity(N_MAX)?;
    outcome(
        cos < 1e-10 && sin2 < 1e-10,
        format!("cos residual {cos:.3e}, sin^2 residual {sin2:.3e}"),
    )
}

fn closure() -> Result<Outcome> {
    let grid = make_phase_grid(default_grid_points(N_MAX))?;
    let t = trig_closure(N_MAX, &grid)?;
    outcome(
        t.pythagorean < 1e-10 && t.commutator < 1e-10,
        format!(
            "sin^2+cos^2-I {:.3e}, [sin,cos] {:.3e}",
            t.pythagorean, t.commutator
        ),
    )
}

fn acid_test() -> Result<Outcome> {
    let mut first = 0.0f64;
    for n in 0..=N_MAX {
        first = first.max((number_state_moment(n, 1)? - FRAC_PI_2).abs());
    }
    let mut second = 0.0f64;
    let mut decreasing = true;
    let mut prev = f64::INFINITY;
    for n in 1..=50 {
        let excess = number_state_moment(n, 2)? - PI * PI / 3.0;
        second = second.max((excess - 0.5 / (n * n) as f64).abs());
        decreasing &= excess < prev;
        prev = excess;
    }
    outcome(
        first < 1e-12 && second < 1e-10 && decreasing,
        format!(
            "first moment err {first:.3e}, second moment err {second:.3e}, decreasing {decreasing}"
        ),
    )
}

fn classical_limit() -> Result<Outcome> {
    let thetas = [0.5, 1.0, 2.0];
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for obs in Observable::ALL {
        for sweep in limit_sweeps(obs, &thetas, &DEFAULT_NBAR_LIST)? {
            let last = sweep.final_error().unwrap_or(f64::INFINITY);
            worst = worst.max(last);
            if !sweep.is_monotone_after_first() || last >= 0.08 {
                failures.push(format!("{obs} at theta {}", sweep.theta));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("worst final error {worst:.3e}; failing sweeps {failures:?}"),
    )
}

fn fourier_oracles() -> Result<Outcome> {
    let mut ok = true;
    let mut worst_slack = f64::INFINITY;
    for s_max in [3, 11, 51, 201, 1001] {
        for k in 0..=200 {
            let theta = -PI + 2.0 * PI * k as f64 / 200.0;
            let a = fourier_abs_theta(theta, s_max)?;
            let b = fourier_abs_sin(theta, s_max)?;
            let ea = (a.value - theta.abs()).abs();
            let eb = (b.value - theta.sin().abs()).abs();
            ok &= ea <= a.tail_bound && eb <= b.tail_bound;
            worst_slack = worst_slack.min(a.tail_bound - ea).min(b.tail_bound - eb);
        }
    }
    let spot_theta = (fourier_abs_theta(FRAC_PI_2, 1001)?.value - FRAC_PI_2).abs();
    let spot_sin = fourier_abs_sin(FRAC_PI_2, 100_000)?;
    let spot_sin_err = (spot_sin.value - 1.0).abs();
    ok &= spot_theta < 1e-12 && spot_sin_err <= spot_sin.tail_bound && spot_sin_err < 1e-4;
    outcome(
        ok,
        format!(
            "min bound slack {worst_slack:.3e}, |theta|(pi/2) err {spot_theta:.3e}, |sin|(pi/2) err {spot_sin_err:.3e}"
        ),
    )
}

fn restricted_commutator() -> Result<Outcome> {
    let box_cfg = BoxConfig::default();
    let hbar = box_cfg.hbar();
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_917);
    let (mut direct, mut projected, mut violations) = (0.0f64, 0.0f64, 0usize);
    for _ in 0..1000 {
        let state = random_superposition(&mut rng, 8, -20..=20, box_cfg)?;
        direct =
            direct.max((commutator_expectation(&state) - commutator_closed_form(&state)).norm());
        let p = subspace_c_projection(&state)?;
        projected = projected.max((commutator_expectation(&p) - Complex64::new(0.0, hbar)).norm());
        if !uncertainty_check(&state).satisfied || !uncertainty_check(&p).satisfied {
            violations += 1;
        }
    }
    outcome(
        direct < 1e-10 && projected < 1e-10 && violations == 0,
        format!("closed form err {direct:.3e}, projected err {projected:.3e}, uncertainty violations {violations}"),
    )
}

fn finite_dimension() -> Result<Outcome> {
    let m_list = [64, 128, 256, 512, 1024];
    let mut spectrum = 0.0f64;
    for &m in &m_list {
        let cfg = FiniteDimConfig::new(m, BoxConfig::default())?;
        let eig = finite_theta_matrix(&cfg)?.eigenvalues()?;
        for (a, b) in eig.iter().zip(cfg.angle_spectrum()) {
            spectrum = spectrum.max((a - b).abs());
        }
    }
    let limit = finite_to_rotator_limit(0, 1, &m_list)?;
    let ratios_ok = limit.ratios_within(0.4, 0.6);
    outcome(
        spectrum < 1e-10 && ratios_ok,
        format!(
            "spectrum err {spectrum:.3e}, halving ratios {:?}",
            limit.ratios
        ),
    )
}

fn classical_oscillator() -> Result<Outcome> {
    let params = OscillatorParams::new(1.3, 0.7)?;
    let t_grid: Vec<f64> = (0..=2000).map(|k| k as f64 * 0.01).collect();
    let deviation = trajectory_phase_check(&params, 1.1, 0.3, &t_grid)?;

    let mut invariant = true;
    for k in 0..360 {
        let a = k as f64 * PI / 180.0 + 0.01;
        let (q, p) = (0.8 * a.sin(), 1.7 * a.cos());
        invariant &= inverse_transform(q, p, &params)? == inverse_transform(-q, -p, &params)?;
    }

    let energy = 2.5;
    let j = energy / params.omega();
    let fwd = action_integral(&params, energy, Orientation::Forward, 64)?;
    let rev = action_integral(&params, energy, Orientation::Reverse, 64)?;
    let action_err = (fwd.abs() - j).abs().max((rev.abs() - j).abs());
    let opposite = fwd.signum() == -rev.signum();
    outcome(
        deviation < 1e-9 && invariant && action_err < 1e-6 && opposite,
        format!(
            "trajectory dev {deviation:.3e}, sign invariant {invariant}, |J| err {action_err:.3e}, opposite signs {opposite}"
        ),
    )
}

fn npcr() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for n in 1..=3u32 {
        for (exp, target) in [
            (WindowExponent::Negative, n as f64),
            (WindowExponent::Positive, -(n as f64)),
        ] {
            let v = npcr_counterexample(n, exp, (0.4, 1.2), 64)?;
            worst = worst.max((v - target).abs());
        }
    }
    outcome(worst < 1e-8, format!("max |<N> -/+ n| = {worst:.3e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 11] = [
        ("phi_oracle_equivalence", phi_oracle),
        ("phi_diagonal_law", diagonal_law),
        ("correction_identities", correction_identities),
        ("trig_closure", closure),
        ("acid_test_moments", acid_test),
        ("classical_limit", classical_limit),
        ("fourier_oracles", fourier_oracles),
        ("restricted_commutator", restricted_commutator),
        ("finite_dimensional_limit", finite_dimension),
        ("classical_oscillator", classical_oscillator),
        ("npcr_counterexample", npcr),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (passed, detail) = match check() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!passed);
        println!(
            "{} {:>2} {name}: {detail}",
            if passed { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
