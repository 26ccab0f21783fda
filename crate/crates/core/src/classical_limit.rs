//! Coherent-state averages of phase observables and their classical limits.
//!
//! The exact route sums ⟨γ|f(Φ)|γ⟩ over the full truncated double sum.
//! The Fourier partial sums give the targets |θ| and |sin θ| independently.

use std::f64::consts::{FRAC_2_PI, PI};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{PhaseError, Result};
use crate::fock::{
    coherent_coeffs, default_cutoff, expectation, CoherentAmplitude, TruncatedOperator,
};
use crate::phase_ops::{build_operator_from_phase_function, build_phi_analytic};
use crate::quadrature::{default_grid_points, make_phase_grid};

/// Imaginary part tolerated in a Hermitian expectation value.
pub const IMAG_TOL: f64 = 1e-10;

/// Round-off slack in the monotone-decrease gate.
pub const MONOTONE_NOISE_FLOOR: f64 = 1e-12;

/// Default geometric sweep of mean photon numbers.
pub const DEFAULT_NBAR_LIST: [f64; 4] = [4.0, 16.0, 64.0, 256.0];

/// Minimum odd-term truncation for [`phi_asymptotic_average`].
pub const MIN_ASYMPTOTIC_TERMS: usize = 51;

/// ⟨γ|A|γ⟩ using the operator's own cutoff.
pub fn coherent_expectation_exact(
    op: &TruncatedOperator,
    gamma: &CoherentAmplitude,
) -> Result<f64> {
    let state = coherent_coeffs(gamma, op.n_max())?;
    let e = expectation(op, &state)?;
    if op.is_hermitian() && e.imag.abs() >= IMAG_TOL {
        return Err(PhaseError::invalid(format!(
            "Hermitian expectation has imaginary part {:e}",
            e.imag
        )));
    }
    Ok(e.value)
}

/// Large-N̄ approximation of ⟨γ|Φ|γ⟩: π/2 − (4/π) Σ_{odd s ≤ s_max} cos(sθ)/s².
///
/// After the large-N̄ substitutions the N̄ dependence cancels; `nbar` only
/// guards the regime of validity.
pub fn phi_asymptotic_average(theta: f64, nbar: f64, s_max: usize) -> Result<f64> {
    if !(nbar >= 1.0) {
        return Err(PhaseError::OutOfDomain {
            name: "nbar",
            value: nbar,
            domain: "[1, ∞)",
        });
    }
    if s_max < MIN_ASYMPTOTIC_TERMS {
        return Err(PhaseError::invalid(format!(
            "s_max must be at least {MIN_ASYMPTOTIC_TERMS}, got {s_max}"
        )));
    }
    Ok(abs_theta_series(theta, s_max))
}

/// A truncated Fourier series with a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourierPartialSum {
    pub value: f64,
    pub tail_bound: f64,
}

fn check_fourier_args(theta: f64, s_max: usize) -> Result<()> {
    if !(theta.abs() <= PI) {
        return Err(PhaseError::OutOfDomain {
            name: "theta",
            value: theta,
            domain: "[-π, π]",
        });
    }
    if s_max < 2 {
        return Err(PhaseError::invalid(format!(
            "s_max must be at least 2, got {s_max}"
        )));
    }
    Ok(())
}

fn abs_theta_series(theta: f64, s_max: usize) -> f64 {
    let sum: f64 = (1..=s_max)
        .step_by(2)
        .map(|s| {
            let sf = s as f64;
            (sf * theta).cos() / (sf * sf)
        })
        .sum();
    PI / 2.0 - 4.0 / PI * sum
}

/// Partial Fourier sum of |θ| on (−π, π) over odd s ≤ s_max.
pub fn fourier_abs_theta(theta: f64, s_max: usize) -> Result<FourierPartialSum> {
    check_fourier_args(theta, s_max)?;
    Ok(FourierPartialSum {
        value: abs_theta_series(theta, s_max),
        tail_bound: 4.0 / (PI * s_max as f64),
    })
}

/// Partial Fourier sum of |sin θ| over even s in 2..=s_max.
pub fn fourier_abs_sin(theta: f64, s_max: usize) -> Result<FourierPartialSum> {
    check_fourier_args(theta, s_max)?;
    let sum: f64 = (2..=s_max)
        .step_by(2)
        .map(|s| {
            let sf = s as f64;
            (sf * theta).cos() / (sf * sf - 1.0)
        })
        .sum();
    Ok(FourierPartialSum {
        value: FRAC_2_PI - 4.0 / PI * sum,
        tail_bound: 4.0 / (PI * (s_max as f64 - 1.0)),
    })
}

/// Phase observables with a known classical limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Observable {
    Phi,
    Sin,
    Cos,
    Sin2,
    Cos2,
}

impl Observable {
    pub const ALL: [Observable; 5] = [
        Observable::Phi,
        Observable::Sin,
        Observable::Cos,
        Observable::Sin2,
        Observable::Cos2,
    ];

    /// Classical value the coherent-state average should approach.
    pub fn target(self, theta: f64) -> f64 {
        match self {
            Observable::Phi => theta.abs(),
            Observable::Sin => theta.sin().abs(),
            Observable::Cos => theta.cos(),
            Observable::Sin2 => theta.sin().powi(2),
            Observable::Cos2 => theta.cos().powi(2),
        }
    }

    /// f(φ) for the quadrature construction.
    pub fn function(self) -> fn(f64) -> f64 {
        match self {
            Observable::Phi => |x| x,
            Observable::Sin => f64::sin,
            Observable::Cos => f64::cos,
            Observable::Sin2 => |x| x.sin().powi(2),
            Observable::Cos2 => |x| x.cos().powi(2),
        }
    }

    /// The operator at cutoff `n_max`. Φ uses its closed form, the rest quadrature.
    pub fn build(self, n_max: usize) -> Result<TruncatedOperator> {
        match self {
            Observable::Phi => build_phi_analytic(n_max),
            other => {
                let grid = make_phase_grid(default_grid_points(n_max))?;
                Ok(build_operator_from_phase_function(other.function(), &grid, n_max)?.operator)
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Observable::Phi => "phi",
            Observable::Sin => "sin",
            Observable::Cos => "cos",
            Observable::Sin2 => "sin2",
            Observable::Cos2 => "cos2",
        }
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Observable {
    type Err = PhaseError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi" => Ok(Observable::Phi),
            "sin" => Ok(Observable::Sin),
            "cos" => Ok(Observable::Cos),
            "sin2" => Ok(Observable::Sin2),
            "cos2" => Ok(Observable::Cos2),
            other => Err(PhaseError::invalid(format!(
                "unknown observable {other:?} (expected phi, sin, cos, sin2, cos2)"
            ))),
        }
    }
}

/// Coherent-state averages of one observable along a sweep in N̄.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitSweepResult {
    pub observable: Observable,
    pub theta: f64,
    pub nbar_list: Vec<f64>,
    pub values: Vec<f64>,
    pub target: f64,
    pub errors: Vec<f64>,
}

impl LimitSweepResult {
    /// Errors are non-increasing from the second entry on, up to
    /// [`MONOTONE_NOISE_FLOOR`].
    pub fn is_monotone_after_first(&self) -> bool {
        self.errors
            .iter()
            .skip(1)
            .zip(self.errors.iter().skip(2))
            .all(|(prev, next)| *next <= *prev + MONOTONE_NOISE_FLOOR)
    }

    pub fn final_error(&self) -> Option<f64> {
        self.errors.last().copied()
    }
}

fn check_sweep_args(theta: f64, nbar_list: &[f64]) -> Result<()> {
    if !(theta > -PI && theta <= PI) {
        return Err(PhaseError::OutOfDomain {
            name: "theta",
            value: theta,
            domain: "(-π, π]",
        });
    }
    if nbar_list.is_empty() {
        return Err(PhaseError::invalid("nbar list is empty"));
    }
    if nbar_list.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(PhaseError::invalid("nbar list must be strictly ascending"));
    }
    if nbar_list.iter().any(|n| !(*n >= 0.0) || !n.is_finite()) {
        return Err(PhaseError::invalid(
            "nbar values must be finite and non-negative",
        ));
    }
    Ok(())
}

fn sweep_point(observable: Observable, thetas: &[f64], nbar: f64) -> Result<Vec<f64>> {
    let op = observable.build(default_cutoff(nbar))?;
    thetas
        .iter()
        .map(|&theta| coherent_expectation_exact(&op, &CoherentAmplitude::new(nbar, theta)?))
        .collect()
}

fn assemble(
    observable: Observable,
    thetas: &[f64],
    nbar_list: &[f64],
    per_nbar: Vec<Vec<f64>>,
) -> Vec<LimitSweepResult> {
    thetas
        .iter()
        .enumerate()
        .map(|(i, &theta)| {
            let values: Vec<f64> = per_nbar.iter().map(|row| row[i]).collect();
            let target = observable.target(theta);
            let errors = values.iter().map(|v| (v - target).abs()).collect();
            LimitSweepResult {
                observable,
                theta,
                nbar_list: nbar_list.to_vec(),
                values,
                target,
                errors,
            }
        })
        .collect()
}

/// Exact coherent-state averages of `observable` for each N̄, at the default cutoff.
pub fn limit_sweep(
    observable: Observable,
    theta: f64,
    nbar_list: &[f64],
) -> Result<LimitSweepResult> {
    let mut all = limit_sweeps(observable, &[theta], nbar_list)?;
    Ok(all.remove(0))
}

/// Several θ at once; each operator is built once per N̄ and reused.
pub fn limit_sweeps(
    observable: Observable,
    thetas: &[f64],
    nbar_list: &[f64],
) -> Result<Vec<LimitSweepResult>> {
    for &theta in thetas {
        check_sweep_args(theta, nbar_list)?;
    }
    let per_nbar = nbar_list
        .iter()
        .map(|&nbar| sweep_point(observable, thetas, nbar))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(observable, thetas, nbar_list, per_nbar))
}

/// As [`limit_sweeps`], evaluating the N̄ entries concurrently. Output order
/// and values are identical to the sequential version.
pub fn limit_sweeps_par(
    observable: Observable,
    thetas: &[f64],
    nbar_list: &[f64],
) -> Result<Vec<LimitSweepResult>> {
    for &theta in thetas {
        check_sweep_args(theta, nbar_list)?;
    }
    let per_nbar = nbar_list
        .par_iter()
        .map(|&nbar| sweep_point(observable, thetas, nbar))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(observable, thetas, nbar_list, per_nbar))
}
