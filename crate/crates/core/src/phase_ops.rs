//! Number and absolute-phase operators, their trigonometric functions, and
//! the Susskind–Glogower / Carruthers–Nieto comparison operators.

use std::f64::consts::{FRAC_2_PI, PI, SQRT_2};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{PhaseError, Result};
use crate::fock::{check_n_max, phase_state_coeffs_unchecked, TruncatedOperator};
use crate::quadrature::{default_grid_points, make_phase_grid, PhaseGrid};

/// Asymptotic value of ⟨n|sin Φ|n⟩ for large n.
pub const SIN_PHI_DIAGONAL_ASYMPTOTIC: f64 = FRAC_2_PI;

/// N = Σ n|n⟩⟨n|
pub fn build_number(n_max: usize) -> Result<TruncatedOperator> {
    check_n_max(n_max)?;
    TruncatedOperator::from_fn(n_max, |r, c| {
        if r == c {
            Complex64::new(r as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Closed-form Fock matrix element ⟨n|Φ|n'⟩.
pub fn phi_element(n: usize, n_prime: usize) -> f64 {
    if n == n_prime {
        return PI / 2.0;
    }
    if (n + n_prime).is_multiple_of(2) {
        return 0.0;
    }
    let (lo, hi) = if n < n_prime {
        (n, n_prime)
    } else {
        (n_prime, n)
    };
    let hi_f = hi as f64;
    if lo == 0 {
        return -2.0 * SQRT_2 / (PI * hi_f * hi_f);
    }
    let sum = (hi + lo) as f64;
    let diff = (hi - lo) as f64;
    -2.0 / PI * (1.0 / (sum * sum) + 1.0 / (diff * diff))
}

/// Φ from its closed-form matrix elements.
pub fn build_phi_analytic(n_max: usize) -> Result<TruncatedOperator> {
    check_n_max(n_max)?;
    TruncatedOperator::from_fn(n_max, |r, c| Complex64::new(phi_element(r, c), 0.0))
}

/// Whether a grid resolves the cosine bandwidth needed at a given cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridAccuracy {
    Adequate,
    /// Fewer than `4·n_max` nodes; entries near the cutoff may be inaccurate.
    Insufficient {
        points: usize,
        recommended: usize,
    },
}

/// Operator built by quadrature together with a note on grid adequacy.
#[derive(Debug, Clone)]
pub struct PhaseFunctionOperator {
    pub operator: TruncatedOperator,
    pub accuracy: GridAccuracy,
}

/// f(Φ) = ∫₀^π f(φ)|φ⟩⟨φ| dφ, evaluated on `grid`.
///
/// Entry (n, n') is Σ_k w_k f(φ_k) c_n(φ_k) c_{n'}(φ_k), summed in ascending k.
pub fn build_operator_from_phase_function<F>(
    f: F,
    grid: &PhaseGrid,
    n_max: usize,
) -> Result<PhaseFunctionOperator>
where
    F: Fn(f64) -> f64,
{
    check_n_max(n_max)?;
    let dim = n_max + 1;
    let weighted: Vec<f64> = grid.iter().map(|(x, w)| w * f(x)).collect();

    // levels[n][k] = c_n(φ_k)
    let mut levels = vec![Vec::with_capacity(grid.len()); dim];
    for &phi in grid.nodes() {
        for (n, c) in phase_state_coeffs_unchecked(phi, n_max)
            .into_iter()
            .enumerate()
        {
            levels[n].push(c);
        }
    }

    let upper: Vec<Vec<f64>> = (0..dim)
        .into_par_iter()
        .map(|r| {
            let row = &levels[r];
            (r..dim)
                .map(|c| {
                    let col = &levels[c];
                    let mut acc = 0.0;
                    for k in 0..weighted.len() {
                        acc += weighted[k] * row[k] * col[k];
                    }
                    acc
                })
                .collect()
        })
        .collect();

    let mut m = DMatrix::<f64>::zeros(dim, dim);
    for (r, row) in upper.iter().enumerate() {
        for (offset, &v) in row.iter().enumerate() {
            let c = r + offset;
            m[(r, c)] = v;
            m[(c, r)] = v;
        }
    }

    let recommended = 4 * n_max;
    let accuracy = if grid.len() >= recommended {
        GridAccuracy::Adequate
    } else {
        GridAccuracy::Insufficient {
            points: grid.len(),
            recommended,
        }
    };
    Ok(PhaseFunctionOperator {
        operator: TruncatedOperator::from_real(&m)?,
        accuracy,
    })
}

fn default_grid(n_max: usize) -> Result<PhaseGrid> {
    make_phase_grid(default_grid_points(n_max))
}

/// cos Φ by quadrature.
pub fn build_cos_phi(n_max: usize, grid: &PhaseGrid) -> Result<TruncatedOperator> {
    Ok(build_operator_from_phase_function(f64::cos, grid, n_max)?.operator)
}

/// sin Φ by quadrature. There is no closed form for the off-diagonal entries;
/// [`sin_phi_diagonal`] gives the diagonal independently.
pub fn build_sin_phi(n_max: usize, grid: &PhaseGrid) -> Result<TruncatedOperator> {
    Ok(build_operator_from_phase_function(f64::sin, grid, n_max)?.operator)
}

/// sin²Φ by quadrature.
pub fn build_sin2_phi(n_max: usize, grid: &PhaseGrid) -> Result<TruncatedOperator> {
    Ok(build_operator_from_phase_function(|x| x.sin().powi(2), grid, n_max)?.operator)
}

/// cos²Φ by quadrature.
pub fn build_cos2_phi(n_max: usize, grid: &PhaseGrid) -> Result<TruncatedOperator> {
    Ok(build_operator_from_phase_function(|x| x.cos().powi(2), grid, n_max)?.operator)
}

/// Exact ⟨n|sin Φ|n⟩ = (1/π)(2 + 2/(1 − 4n²)); 2/π at n = 0.
pub fn sin_phi_diagonal(n: usize) -> f64 {
    if n == 0 {
        return FRAC_2_PI;
    }
    let nf = n as f64;
    (2.0 + 2.0 / (1.0 - 4.0 * nf * nf)) / PI
}

/// Susskind–Glogower shifts and the Carruthers–Nieto cosine/sine.
#[derive(Debug, Clone)]
pub struct LadderOperators {
    /// E = Σ |n⟩⟨n+1|
    pub e: TruncatedOperator,
    pub e_dag: TruncatedOperator,
    /// C = (E + E†)/2
    pub c: TruncatedOperator,
    /// S = (E − E†)/(2i)
    pub s: TruncatedOperator,
}

pub fn build_ladder_and_trig(n_max: usize) -> Result<LadderOperators> {
    if n_max < 2 {
        return Err(PhaseError::invalid(format!(
            "ladder operators need n_max >= 2, got {n_max}"
        )));
    }
    check_n_max(n_max)?;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let e = TruncatedOperator::from_fn(n_max, |r, c| if c == r + 1 { one } else { zero })?;
    let e_dag = e.adjoint();
    let c = e.add(&e_dag)?.scale_real(0.5);
    let s = e.sub(&e_dag)?.scale(Complex64::new(0.0, -0.5));
    Ok(LadderOperators { e, e_dag, c, s })
}

/// max |cos Φ − C − ½(√2−1)(|0⟩⟨1| + |1⟩⟨0|)| over n, n' ≤ n_max − 1.
pub fn verify_cos_identity(n_max: usize) -> Result<f64> {
    verify_cos_identity_on(n_max, &default_grid(n_max)?)
}

pub fn verify_cos_identity_on(n_max: usize, grid: &PhaseGrid) -> Result<f64> {
    let cos_phi = build_cos_phi(n_max, grid)?;
    let ladder = build_ladder_and_trig(n_max)?;
    let correction = TruncatedOperator::outer(n_max, 0, 1)?
        .add(&TruncatedOperator::outer(n_max, 1, 0)?)?
        .scale_real(0.5 * (SQRT_2 - 1.0));
    let predicted = ladder.c.add(&correction)?;
    cos_phi.max_abs_diff_block(&predicted, n_max - 1)
}

/// max |sin²Φ − S² − ¼(1−√2)(|0⟩⟨2| + |2⟩⟨0|) − ¼(|0⟩⟨0| − |1⟩⟨1|)| over
/// n, n' ≤ n_max − 1.
pub fn verify_sin2_identity(n_max: usize) -> Result<f64> {
    verify_sin2_identity_on(n_max, &default_grid(n_max)?)
}

pub fn verify_sin2_identity_on(n_max: usize, grid: &PhaseGrid) -> Result<f64> {
    if n_max < 3 {
        return Err(PhaseError::invalid(format!(
            "sin² identity needs n_max >= 3, got {n_max}"
        )));
    }
    let sin2 = build_sin2_phi(n_max, grid)?;
    let ladder = build_ladder_and_trig(n_max)?;
    let s2 = ladder.s.matmul(&ladder.s)?;
    let off = TruncatedOperator::outer(n_max, 0, 2)?
        .add(&TruncatedOperator::outer(n_max, 2, 0)?)?
        .scale_real(0.25 * (1.0 - SQRT_2));
    let diag = TruncatedOperator::outer(n_max, 0, 0)?
        .sub(&TruncatedOperator::outer(n_max, 1, 1)?)?
        .scale_real(0.25);
    let predicted = s2.add(&off)?.add(&diag)?;
    sin2.max_abs_diff_block(&predicted, n_max - 1)
}

/// Residuals of the trigonometric closure relations on the interior block
/// n, n' ≤ n_max − 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigClosure {
    /// max |sin²Φ + cos Φ·cos Φ − 1|
    pub pythagorean: f64,
    /// max |[sin Φ, cos Φ]|
    pub commutator: f64,
}

pub fn trig_closure(n_max: usize, grid: &PhaseGrid) -> Result<TrigClosure> {
    if n_max < 3 {
        return Err(PhaseError::invalid(format!(
            "trig closure needs n_max >= 3, got {n_max}"
        )));
    }
    let cos_phi = build_cos_phi(n_max, grid)?;
    let sin_phi = build_sin_phi(n_max, grid)?;
    let sin2 = build_sin2_phi(n_max, grid)?;
    let block = n_max - 2;
    let sum = sin2.add(&cos_phi.matmul(&cos_phi)?)?;
    let pythagorean = sum.max_abs_diff_block(&TruncatedOperator::identity(n_max)?, block)?;
    let commutator = sin_phi.commutator(&cos_phi)?.max_abs_block(block);
    Ok(TrigClosure {
        pythagorean,
        commutator,
    })
}

/// P_n(φ) = |⟨n|φ⟩|²: 1/π for n = 0, (1 + cos 2nφ)/π otherwise.
pub fn number_state_density(n: usize, phi: f64) -> f64 {
    if n == 0 {
        1.0 / PI
    } else {
        (1.0 + (2.0 * n as f64 * phi).cos()) / PI
    }
}

/// Phase distribution of the number state |n⟩ tabulated on a grid.
#[derive(Debug, Clone)]
pub struct PhaseDistribution {
    n: usize,
    grid: PhaseGrid,
    density: Vec<f64>,
}

impl PhaseDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &PhaseGrid {
        &self.grid
    }

    /// Density at each grid node, 1/radian.
    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn density_at(&self, phi: f64) -> f64 {
        number_state_density(self.n, phi)
    }

    pub fn total_probability(&self) -> f64 {
        self.grid
            .weights()
            .iter()
            .zip(&self.density)
            .map(|(w, p)| w * p)
            .sum()
    }

    /// ∫ φ^m P_n(φ) dφ on the stored grid.
    pub fn moment(&self, m: u32) -> f64 {
        self.grid
            .iter()
            .zip(&self.density)
            .map(|((x, w), p)| w * p * x.powi(m as i32))
            .sum()
    }
}

pub fn number_state_distribution(n: usize, grid: &PhaseGrid) -> PhaseDistribution {
    let density = grid
        .nodes()
        .iter()
        .map(|&x| number_state_density(n, x))
        .collect();
    PhaseDistribution {
        n,
        grid: grid.clone(),
        density,
    }
}

/// ⟨Φ^m⟩ in the number state |n⟩, by quadrature against P_n.
pub fn number_state_moment(n: usize, m: u32) -> Result<f64> {
    // GL is exact for the φ^m factor once 2·points − 1 ≥ m; 4n covers cos 2nφ.
    let points = (4 * n + m as usize).max(1024);
    let grid = make_phase_grid(points)?;
    Ok(number_state_distribution(n, &grid).moment(m))
}

/// Closed form of ⟨Φ²⟩_n: π²/3 + 1/(2n²), or π²/3 for the vacuum.
pub fn second_moment_closed_form(n: usize) -> f64 {
    let uniform = PI * PI / 3.0;
    if n == 0 {
        uniform
    } else {
        let nf = n as f64;
        uniform + 1.0 / (2.0 * nf * nf)
    }
}

/// |t| = Φ/ω
pub fn time_operator(phi: &TruncatedOperator, omega: f64) -> Result<TruncatedOperator> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(PhaseError::invalid(format!(
            "frequency must be positive, got {omega}"
        )));
    }
    Ok(phi.scale_real(1.0 / omega))
}
