//! A particle in a periodic box of length L: momentum basis |p_n⟩ with
//! p_n = 2πħn/L, and the bounded position operator on (−L/2, L/2].
//!
//! Position matrix elements follow ⟨x|p_n⟩ = L^{-1/2} e^{−ixp_n/ħ}.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::ops::RangeInclusive;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::seq::index::sample;
use rand::Rng;
use serde::Serialize;

use crate::error::{PhaseError, Result};
use crate::fock::{hermitian_eigenvalues, is_hermitian};
use crate::quadrature::{gauss_legendre, MAX_GRID_POINTS};

/// Unit-norm tolerance for momentum superpositions.
pub const NORM_TOL: f64 = 1e-12;

/// Slack on Δx·Δp ≥ bound.
pub const UNCERTAINTY_SLACK: f64 = 1e-12;

/// Residual norm below which a projection counts as annihilating the state.
pub const DEGENERATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoxConfig {
    length: f64,
    hbar: f64,
}

impl Default for BoxConfig {
    /// L = 2π, ħ = 1, so that p_n = n.
    fn default() -> Self {
        BoxConfig {
            length: 2.0 * PI,
            hbar: 1.0,
        }
    }
}

impl BoxConfig {
    pub fn new(length: f64, hbar: f64) -> Result<Self> {
        if !(length > 0.0) || !length.is_finite() {
            return Err(PhaseError::invalid(format!(
                "box length must be positive, got {length}"
            )));
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(PhaseError::invalid(format!(
                "hbar must be positive, got {hbar}"
            )));
        }
        Ok(BoxConfig { length, hbar })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// p_n = 2πħn/L
    pub fn momentum(&self, n: i64) -> f64 {
        2.0 * PI * self.hbar * n as f64 / self.length
    }

    /// ⟨p_n|x|p_n'⟩ = −iL(−1)^{n−n'} / (2π(n−n')), zero on the diagonal.
    pub fn position_element(&self, n: i64, n_prime: i64) -> Complex64 {
        let d = n - n_prime;
        if d == 0 {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::new(0.0, -self.length * parity(d) / (2.0 * PI * d as f64))
    }

    /// ⟨p_n|x²|p_n'⟩: L²/12 on the diagonal, (−1)^{n−n'} L²/(2π²(n−n')²) off it.
    pub fn position_sq_element(&self, n: i64, n_prime: i64) -> f64 {
        let l2 = self.length * self.length;
        let d = n - n_prime;
        if d == 0 {
            l2 / 12.0
        } else {
            let df = d as f64;
            parity(d) * l2 / (2.0 * PI * PI * df * df)
        }
    }
}

fn parity(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Σ ψ_n |p_n⟩ over a finite set of momentum indices.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumSuperposition {
    support: Vec<i64>,
    coeffs: Vec<Complex64>,
    box_cfg: BoxConfig,
}

impl MomentumSuperposition {
    /// Amplitudes must already be unit-norm (to 1e-12).
    pub fn new(support: Vec<i64>, coeffs: Vec<Complex64>, box_cfg: BoxConfig) -> Result<Self> {
        validate_support(&support, &coeffs)?;
        let norm_sqr: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(PhaseError::invalid(format!(
                "superposition is not normalized: Σ|ψ_n|² = {norm_sqr}"
            )));
        }
        Ok(MomentumSuperposition {
            support,
            coeffs,
            box_cfg,
        })
    }

    /// Rescales the amplitudes to unit norm first.
    pub fn normalized(
        support: Vec<i64>,
        coeffs: Vec<Complex64>,
        box_cfg: BoxConfig,
    ) -> Result<Self> {
        validate_support(&support, &coeffs)?;
        let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(PhaseError::invalid("superposition has zero norm"));
        }
        let coeffs = coeffs.into_iter().map(|c| c / norm).collect();
        Self::new(support, coeffs, box_cfg)
    }

    pub fn basis(n: i64, box_cfg: BoxConfig) -> Self {
        MomentumSuperposition {
            support: vec![n],
            coeffs: vec![Complex64::new(1.0, 0.0)],
            box_cfg,
        }
    }

    pub fn support(&self) -> &[i64] {
        &self.support
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn box_config(&self) -> BoxConfig {
        self.box_cfg
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.support
            .iter()
            .copied()
            .zip(self.coeffs.iter().copied())
    }

    /// Σ (−1)^n ψ_n, i.e. √L ⟨x = L/2|ψ⟩.
    pub fn alternating_sum(&self) -> Complex64 {
        self.iter().map(|(n, c)| c * parity(n)).sum()
    }

    /// Amplitude-weighted double sum Σ ψ_n* ψ_n' a(n, n').
    fn double_sum<F: Fn(i64, i64) -> Complex64>(&self, a: F) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for (n, bra) in self.iter() {
            for (m, ket) in self.iter() {
                total += bra.conj() * ket * a(n, m);
            }
        }
        total
    }
}

fn validate_support(support: &[i64], coeffs: &[Complex64]) -> Result<()> {
    if support.is_empty() {
        return Err(PhaseError::invalid("superposition has empty support"));
    }
    if support.len() != coeffs.len() {
        return Err(PhaseError::DimensionMismatch {
            expected: support.len(),
            actual: coeffs.len(),
        });
    }
    let distinct: BTreeSet<_> = support.iter().collect();
    if distinct.len() != support.len() {
        return Err(PhaseError::invalid("support indices must be distinct"));
    }
    if coeffs
        .iter()
        .any(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        return Err(PhaseError::invalid("amplitudes must be finite"));
    }
    Ok(())
}

/// Uniformly chosen distinct indices from `range` with random complex amplitudes.
pub fn random_superposition<R: Rng + ?Sized>(
    rng: &mut R,
    terms: usize,
    range: RangeInclusive<i64>,
    box_cfg: BoxConfig,
) -> Result<MomentumSuperposition> {
    let lo = *range.start();
    let width = (range.end() - lo + 1).max(0) as usize;
    if terms == 0 || terms > width {
        return Err(PhaseError::invalid(format!(
            "cannot draw {terms} distinct indices from a range of width {width}"
        )));
    }
    let mut support: Vec<i64> = sample(rng, width, terms)
        .into_iter()
        .map(|k| lo + k as i64)
        .collect();
    support.sort_unstable();
    let coeffs = (0..terms)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    MomentumSuperposition::normalized(support, coeffs, box_cfg)
}

/// ⟨[p_L, x_L]⟩ as the explicit double sum Σ ψ_n* ψ_n' (p_n − p_n') x_{nn'}.
pub fn commutator_expectation(state: &MomentumSuperposition) -> Complex64 {
    let b = state.box_config();
    state.double_sum(|n, m| (b.momentum(n) - b.momentum(m)) * b.position_element(n, m))
}

/// iħ(1 − |Σ(−1)^n ψ_n|²), the closed form of [`commutator_expectation`].
pub fn commutator_closed_form(state: &MomentumSuperposition) -> Complex64 {
    let hbar = state.box_config().hbar();
    Complex64::new(0.0, hbar * (1.0 - state.alternating_sum().norm_sqr()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UncertaintyReport {
    pub dx: f64,
    pub dp: f64,
    pub product: f64,
    /// (ħ/2)|1 − |Σ(−1)^n ψ_n|²|
    pub bound: f64,
    pub satisfied: bool,
}

pub fn uncertainty_check(state: &MomentumSuperposition) -> UncertaintyReport {
    let b = state.box_config();
    let mean_x = state.double_sum(|n, m| b.position_element(n, m)).re;
    let mean_x2 = state
        .double_sum(|n, m| Complex64::new(b.position_sq_element(n, m), 0.0))
        .re;
    let mut mean_p = 0.0;
    let mut mean_p2 = 0.0;
    for (n, c) in state.iter() {
        let p = b.momentum(n);
        mean_p += c.norm_sqr() * p;
        mean_p2 += c.norm_sqr() * p * p;
    }
    let dx = (mean_x2 - mean_x * mean_x).max(0.0).sqrt();
    let dp = (mean_p2 - mean_p * mean_p).max(0.0).sqrt();
    let bound = 0.5 * b.hbar() * (1.0 - state.alternating_sum().norm_sqr()).abs();
    let product = dx * dp;
    UncertaintyReport {
        dx,
        dp,
        product,
        bound,
        satisfied: product >= bound - UNCERTAINTY_SLACK,
    }
}

/// Orthogonal projection onto {Σ(−1)^n ψ_n = 0} within the state's support,
/// renormalized.
pub fn subspace_c_projection(state: &MomentumSuperposition) -> Result<MomentumSuperposition> {
    if state.support().len() < 2 {
        return Err(PhaseError::DegenerateProjection { residual: 0.0 });
    }
    let overlap = state.alternating_sum() / state.support().len() as f64;
    let projected: Vec<Complex64> = state.iter().map(|(n, c)| c - overlap * parity(n)).collect();
    let residual = projected.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if residual < DEGENERATE_TOL {
        return Err(PhaseError::DegenerateProjection { residual });
    }
    MomentumSuperposition::normalized(state.support().to_vec(), projected, state.box_config())
}

/// Which exponential fills the phase window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowExponent {
    /// ψ(φ) ∝ e^{−inφ}
    Negative,
    /// ψ(φ) ∝ e^{+inφ}
    Positive,
}

/// ⟨ψ|N|ψ⟩ = ∫ψ*(φ)(i d/dφ)ψ(φ)dφ over [φ₀, φ₀+Δ] for ψ = Δ^{-1/2}e^{∓inφ},
/// evaluated with a Gauss–Legendre rule.
///
/// If N were canonically conjugate to the phase in this differential sense,
/// the Positive window would carry a negative mean photon number.
pub fn npcr_counterexample(
    n: u32,
    exponent: WindowExponent,
    window: (f64, f64),
    grid_points: usize,
) -> Result<f64> {
    let (phi0, delta) = window;
    if !(delta > 0.0) || !delta.is_finite() || !phi0.is_finite() {
        return Err(PhaseError::invalid(format!(
            "window width must be positive, got {delta}"
        )));
    }
    if !(2..=MAX_GRID_POINTS).contains(&grid_points) {
        return Err(PhaseError::invalid(format!(
            "grid points out of range: {grid_points}"
        )));
    }
    let k = match exponent {
        WindowExponent::Negative => -(n as f64),
        WindowExponent::Positive => n as f64,
    };
    let amp = delta.powf(-0.5);
    let psi = |phi: f64| Complex64::from_polar(amp, k * phi);
    let dpsi = |phi: f64| Complex64::new(0.0, k) * psi(phi);
    let i = Complex64::new(0.0, 1.0);

    let (x, w) = gauss_legendre(grid_points);
    let half = 0.5 * delta;
    let mut total = Complex64::new(0.0, 0.0);
    for (xi, wi) in x.iter().rev().zip(w.iter().rev()) {
        let phi = phi0 + half * (1.0 + xi);
        total += half * wi * psi(phi).conj() * i * dpsi(phi);
    }
    Ok(total.re)
}

/// A dense matrix indexed by a contiguous range of momentum labels.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumMatrix {
    first: i64,
    entries: DMatrix<Complex64>,
}

impl MomentumMatrix {
    fn from_fn<F: Fn(i64, i64) -> Complex64>(range: RangeInclusive<i64>, f: F) -> Result<Self> {
        let first = *range.start();
        let last = *range.end();
        if last < first {
            return Err(PhaseError::invalid("empty momentum index range"));
        }
        let dim = (last - first + 1) as usize;
        let entries = DMatrix::from_fn(dim, dim, |r, c| f(first + r as i64, first + c as i64));
        Ok(MomentumMatrix { first, entries })
    }

    pub fn indices(&self) -> RangeInclusive<i64> {
        self.first..=self.first + self.entries.nrows() as i64 - 1
    }

    /// Entry at row n, column n'.
    pub fn get(&self, n: i64, n_prime: i64) -> Complex64 {
        self.entries[((n - self.first) as usize, (n_prime - self.first) as usize)]
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        is_hermitian(&self.entries)
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_hermitian() {
            return Err(PhaseError::invalid(
                "eigenvalues requested for a non-Hermitian matrix",
            ));
        }
        Ok(hermitian_eigenvalues(self.entries.clone()))
    }
}

/// Plane-rotator angle element ⟨j_n|Θ|j_n'⟩ = i(−1)^{n−n'}/(n'−n), 0 on the diagonal.
pub fn rotator_angle_element(n: i64, n_prime: i64) -> Complex64 {
    let d = n_prime - n;
    if d == 0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(0.0, parity(n - n_prime) / d as f64)
}

/// Θ = (2π/L)x_L on the momentum labels in `range`. Dimensionless, so
/// independent of the box.
pub fn rotator_angle_matrix(range: RangeInclusive<i64>) -> Result<MomentumMatrix> {
    MomentumMatrix::from_fn(range, rotator_angle_element)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiniteDimConfig {
    m: usize,
    box_cfg: BoxConfig,
}

impl FiniteDimConfig {
    /// `m` must be even and at least 2; the space has dimension m + 1.
    pub fn new(m: usize, box_cfg: BoxConfig) -> Result<Self> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(PhaseError::invalid(format!(
                "m must be even and >= 2, got {m}"
            )));
        }
        Ok(FiniteDimConfig { m, box_cfg })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn box_config(&self) -> BoxConfig {
        self.box_cfg
    }

    pub fn half(&self) -> i64 {
        (self.m / 2) as i64
    }

    /// Position eigenvalues x_l = lL/(m+1), l = −m/2..=m/2.
    pub fn position_spectrum(&self) -> Vec<f64> {
        let h = self.half();
        let scale = self.box_cfg.length() / (self.m + 1) as f64;
        (-h..=h).map(|l| l as f64 * scale).collect()
    }

    /// Θ^m eigenvalues 2πl/(m+1), ascending.
    pub fn angle_spectrum(&self) -> Vec<f64> {
        let h = self.half();
        let scale = 2.0 * PI / (self.m + 1) as f64;
        (-h..=h).map(|l| l as f64 * scale).collect()
    }
}

/// Θ^m at row n, column n':
/// (−1)^{n−n'} / [((m+1)/2π)(1 − e^{2πi(n'−n)/(m+1)})], 0 on the diagonal.
///
/// As m → ∞ this tends to [`rotator_angle_element`]`(n, n')`.
pub fn finite_theta_element(m: usize, n: i64, n_prime: i64) -> Complex64 {
    let d = n_prime - n;
    if d == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let dim = (m + 1) as f64;
    let phase = Complex64::from_polar(1.0, 2.0 * PI * d as f64 / dim);
    let denom = (Complex64::new(1.0, 0.0) - phase) * (dim / (2.0 * PI));
    Complex64::new(parity(n - n_prime), 0.0) / denom
}

/// Θ^m on the symmetric labels −m/2..=m/2.
pub fn finite_theta_matrix(cfg: &FiniteDimConfig) -> Result<MomentumMatrix> {
    let h = cfg.half();
    let m = cfg.m();
    MomentumMatrix::from_fn(-h..=h, |n, np| finite_theta_element(m, n, np))
}

/// Distance of one Θ^m element from its rotator limit along a sweep in m.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RotatorLimit {
    pub n: i64,
    pub n_prime: i64,
    pub target: Complex64,
    pub m_list: Vec<usize>,
    pub errors: Vec<f64>,
    /// errors[k+1]/errors[k]
    pub ratios: Vec<f64>,
}

impl RotatorLimit {
    /// Every consecutive ratio lies in [lo, hi].
    pub fn ratios_within(&self, lo: f64, hi: f64) -> bool {
        self.ratios.iter().all(|r| (lo..=hi).contains(r))
    }
}

pub fn finite_to_rotator_limit(n: i64, n_prime: i64, m_list: &[usize]) -> Result<RotatorLimit> {
    if n == n_prime {
        return Err(PhaseError::invalid("rotator limit needs n != n'"));
    }
    if m_list.is_empty() || m_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PhaseError::invalid(
            "m list must be non-empty and strictly ascending",
        ));
    }
    let min_m = 2 * (n - n_prime).unsigned_abs() as usize + 2;
    let half_needed = n.unsigned_abs().max(n_prime.unsigned_abs()) as usize;
    for &m in m_list {
        FiniteDimConfig::new(m, BoxConfig::default())?;
        if m < min_m || m / 2 < half_needed {
            return Err(PhaseError::invalid(format!(
                "m = {m} too small for indices ({n}, {n_prime})"
            )));
        }
    }
    let target = rotator_angle_element(n, n_prime);
    let errors: Vec<f64> = m_list
        .iter()
        .map(|&m| (finite_theta_element(m, n, n_prime) - target).norm())
        .collect();
    let ratios = errors.windows(2).map(|w| w[1] / w[0]).collect();
    Ok(RotatorLimit {
        n,
        n_prime,
        target,
        m_list: m_list.to_vec(),
        errors,
        ratios,
    })
}
