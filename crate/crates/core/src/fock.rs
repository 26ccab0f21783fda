//! Truncated Fock-space operators, phase and coherent state expansions.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::DMatrix;
use num_complex::Complex64;
use statrs::function::gamma::ln_gamma;

use crate::error::{PhaseError, Result};

/// Largest supported Fock cutoff. Everything is dense.
pub const MAX_N_MAX: usize = 4096;

/// Elementwise tolerance for the Hermitian flag.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Tolerated probability lost to truncation for coherent states.
pub const NORM_DEFICIT_TOL: f64 = 1e-10;

/// Tolerance on `1 - ‖ψ‖²` accepted by [`expectation`].
pub const UNIT_NORM_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense operator on Fock levels `0..=n_max`.
///
/// The Hermitian flag is always computed from the entries, never asserted by
/// the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedOperator {
    n_max: usize,
    entries: DMatrix<Complex64>,
    hermitian: bool,
}

impl TruncatedOperator {
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(PhaseError::DimensionMismatch {
                expected: entries.nrows(),
                actual: entries.ncols(),
            });
        }
        let dim = entries.nrows();
        check_n_max(dim.saturating_sub(1))?;
        let hermitian = is_hermitian(&entries);
        Ok(TruncatedOperator {
            n_max: dim - 1,
            entries,
            hermitian,
        })
    }

    pub fn from_real(entries: &DMatrix<f64>) -> Result<Self> {
        Self::new(entries.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn from_fn<F>(n_max: usize, f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        check_n_max(n_max)?;
        let dim = n_max + 1;
        Self::new(DMatrix::from_fn(dim, dim, f))
    }

    pub fn zeros(n_max: usize) -> Result<Self> {
        Self::from_fn(n_max, |_, _| ZERO)
    }

    pub fn identity(n_max: usize) -> Result<Self> {
        Self::from_fn(n_max, |r, c| if r == c { ONE } else { ZERO })
    }

    /// `|row⟩⟨col|`
    pub fn outer(n_max: usize, row: usize, col: usize) -> Result<Self> {
        if row > n_max || col > n_max {
            return Err(PhaseError::invalid(format!(
                "projector |{row}⟩⟨{col}| outside cutoff {n_max}"
            )));
        }
        Self::from_fn(n_max, |r, c| if r == row && c == col { ONE } else { ZERO })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.n_max + 1
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<Complex64> {
        self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    /// `⟨row|A|col⟩`
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[(row, col)]
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn adjoint(&self) -> Self {
        TruncatedOperator {
            n_max: self.n_max,
            entries: self.entries.adjoint(),
            hermitian: self.hermitian,
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Self::new(&self.entries * &rhs.entries)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Self::new(&self.entries + &rhs.entries)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Self::new(&self.entries - &rhs.entries)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let entries = &self.entries * factor;
        let hermitian = is_hermitian(&entries);
        TruncatedOperator {
            n_max: self.n_max,
            entries,
            hermitian,
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// `[A, B] = AB − BA`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.matmul(rhs)?.sub(&rhs.matmul(self)?)
    }

    /// Largest `|A_{nn'} − B_{nn'}|` over the block `n, n' ≤ block_max`.
    pub fn max_abs_diff_block(&self, rhs: &Self, block_max: usize) -> Result<f64> {
        self.same_shape(rhs)?;
        let last = block_max.min(self.n_max);
        let mut worst = 0.0f64;
        for c in 0..=last {
            for r in 0..=last {
                worst = worst.max((self.entries[(r, c)] - rhs.entries[(r, c)]).norm());
            }
        }
        Ok(worst)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> Result<f64> {
        self.max_abs_diff_block(rhs, self.n_max)
    }

    /// Largest `|A_{nn'}|` over the block `n, n' ≤ block_max`.
    pub fn max_abs_block(&self, block_max: usize) -> f64 {
        let last = block_max.min(self.n_max);
        let mut worst = 0.0f64;
        for c in 0..=last {
            for r in 0..=last {
                worst = worst.max(self.entries[(r, c)].norm());
            }
        }
        worst
    }

    /// Ascending eigenvalues. Only defined for Hermitian operators.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.hermitian {
            return Err(PhaseError::invalid(
                "eigenvalues requested for a non-Hermitian operator",
            ));
        }
        Ok(hermitian_eigenvalues(self.entries.clone()))
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.n_max != rhs.n_max {
            return Err(PhaseError::DimensionMismatch {
                expected: self.dim(),
                actual: rhs.dim(),
            });
        }
        Ok(())
    }
}

pub(crate) fn check_n_max(n_max: usize) -> Result<()> {
    if n_max < 1 {
        return Err(PhaseError::invalid("n_max must be at least 1"));
    }
    if n_max > MAX_N_MAX {
        return Err(PhaseError::invalid(format!(
            "n_max = {n_max} exceeds the dense limit {MAX_N_MAX}"
        )));
    }
    Ok(())
}

pub(crate) fn is_hermitian(m: &DMatrix<Complex64>) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    let n = m.nrows();
    for c in 0..n {
        for r in c..n {
            if (m[(r, c)] - m[(c, r)].conj()).norm() > HERMITIAN_TOL {
                return false;
            }
        }
    }
    true
}

/// Ascending eigenvalues of a Hermitian matrix.
pub(crate) fn hermitian_eigenvalues(m: DMatrix<Complex64>) -> Vec<f64> {
    let eig = nalgebra::SymmetricEigen::new(m);
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

/// Coherent-state label γ = √N̄ e^{iθ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentAmplitude {
    nbar: f64,
    theta: f64,
}

impl CoherentAmplitude {
    /// `theta` must lie in (−π, π].
    pub fn new(nbar: f64, theta: f64) -> Result<Self> {
        if !nbar.is_finite() || nbar < 0.0 {
            return Err(PhaseError::OutOfDomain {
                name: "nbar",
                value: nbar,
                domain: "[0, ∞)",
            });
        }
        if !theta.is_finite() || theta <= -PI || theta > PI {
            return Err(PhaseError::OutOfDomain {
                name: "theta",
                value: theta,
                domain: "(-π, π]",
            });
        }
        Ok(CoherentAmplitude { nbar, theta })
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn gamma(&self) -> Complex64 {
        Complex64::from_polar(self.nbar.sqrt(), self.theta)
    }
}

/// Default Fock cutoff for a coherent state of mean number `nbar`:
/// ceil(N̄ + 10√N̄ + 50).
pub fn default_cutoff(nbar: f64) -> usize {
    (nbar + 10.0 * nbar.sqrt() + 50.0).ceil() as usize
}

/// Fock amplitudes of the phase state |φ⟩: c₀ = 1/√π, c_n = √(2/π) cos nφ.
pub fn phase_state_coeffs(phi: f64, n_max: usize) -> Result<Vec<f64>> {
    if !(phi > 0.0 && phi < PI) {
        return Err(PhaseError::OutOfDomain {
            name: "phi",
            value: phi,
            domain: "(0, π)",
        });
    }
    Ok(phase_state_coeffs_unchecked(phi, n_max))
}

pub(crate) fn phase_state_coeffs_unchecked(phi: f64, n_max: usize) -> Vec<f64> {
    let c0 = 1.0 / PI.sqrt();
    let cn = (2.0 / PI).sqrt();
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                c0
            } else {
                cn * (n as f64 * phi).cos()
            }
        })
        .collect()
}

/// Fock amplitudes e^{−N̄/2} γⁿ/√(n!) up to `n_max`, computed in log space.
///
/// Fails with [`PhaseError::CutoffInsufficient`] if the truncated vector
/// misses more than [`NORM_DEFICIT_TOL`] of the probability.
pub fn coherent_coeffs(gamma: &CoherentAmplitude, n_max: usize) -> Result<Vec<Complex64>> {
    check_n_max(n_max)?;
    let nbar = gamma.nbar();
    let coeffs: Vec<Complex64> = if nbar == 0.0 {
        (0..=n_max)
            .map(|n| if n == 0 { ONE } else { ZERO })
            .collect()
    } else {
        let half_log_nbar = 0.5 * nbar.ln();
        (0..=n_max)
            .map(|n| {
                let nf = n as f64;
                let log_mag = -0.5 * nbar + nf * half_log_nbar - 0.5 * ln_gamma(nf + 1.0);
                Complex64::from_polar(log_mag.exp(), nf * gamma.theta())
            })
            .collect()
    };
    let deficit = 1.0 - coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>();
    if deficit > NORM_DEFICIT_TOL {
        return Err(PhaseError::CutoffInsufficient {
            n_max,
            deficit,
            tolerance: NORM_DEFICIT_TOL,
        });
    }
    Ok(coeffs)
}

/// Coherent amplitudes at [`default_cutoff`].
pub fn coherent_state(gamma: &CoherentAmplitude) -> Result<Vec<Complex64>> {
    coherent_coeffs(gamma, default_cutoff(gamma.nbar()))
}

/// `⟨ψ|A|ψ⟩` split into real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expectation {
    pub value: f64,
    pub imag: f64,
}

/// `⟨ψ|A|ψ⟩` for a unit vector ψ.
pub fn expectation(op: &TruncatedOperator, state: &[Complex64]) -> Result<Expectation> {
    let norm_sqr: f64 = state.iter().map(|c| c.norm_sqr()).sum();
    if (norm_sqr - 1.0).abs() > UNIT_NORM_TOL {
        return Err(PhaseError::invalid(format!(
            "state is not normalized: ‖ψ‖² = {norm_sqr}"
        )));
    }
    expectation_unnormalized(op, state)
}

/// `⟨ψ|A|ψ⟩` without the unit-norm check.
pub fn expectation_unnormalized(
    op: &TruncatedOperator,
    state: &[Complex64],
) -> Result<Expectation> {
    if state.len() != op.dim() {
        return Err(PhaseError::DimensionMismatch {
            expected: op.dim(),
            actual: state.len(),
        });
    }
    let m = op.entries();
    let mut total = ZERO;
    for (r, bra) in state.iter().enumerate() {
        let mut row = ZERO;
        for (c, ket) in state.iter().enumerate() {
            row += m[(r, c)] * ket;
        }
        total += bra.conj() * row;
    }
    Ok(Expectation {
        value: total.re,
        imag: total.im,
    })
}

/// |n⟩ as a vector of length `n_max + 1`.
pub fn number_state(n: usize, n_max: usize) -> Result<Vec<Complex64>> {
    if n > n_max {
        return Err(PhaseError::invalid(format!("|{n}⟩ outside cutoff {n_max}")));
    }
    Ok((0..=n_max)
        .map(|k| if k == n { ONE } else { ZERO })
        .collect())
}

/// (|a⟩ + |b⟩)/√2, handy for tests and examples.
pub fn even_superposition(a: usize, b: usize, n_max: usize) -> Result<Vec<Complex64>> {
    if a == b || a > n_max || b > n_max {
        return Err(PhaseError::invalid(
            "need two distinct levels inside the cutoff",
        ));
    }
    let amp = Complex64::new(FRAC_1_SQRT_2, 0.0);
    Ok((0..=n_max)
        .map(|k| if k == a || k == b { amp } else { ZERO })
        .collect())
}
