//! Gauss–Legendre rules on the open phase interval (0, π).
//!
//! Nodes never touch the endpoints, so the φ = 0 phase state (whose
//! self-overlap carries an extra factor of two) never enters an integral.

use std::f64::consts::PI;

use crate::error::{PhaseError, Result};

/// Largest rule we are willing to build; 4 × the dense-operator cutoff limit.
pub const MAX_GRID_POINTS: usize = 4 * crate::fock::MAX_N_MAX;

/// Quadrature nodes and weights on (0, π).
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl PhaseGrid {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// ∫₀^π f(φ) dφ, summed in ascending node order.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }
}

/// Gauss–Legendre rule with `points` nodes mapped onto (0, π).
pub fn make_phase_grid(points: usize) -> Result<PhaseGrid> {
    if points < 2 {
        return Err(PhaseError::invalid(format!(
            "phase grid needs at least 2 points, got {points}"
        )));
    }
    if points > MAX_GRID_POINTS {
        return Err(PhaseError::invalid(format!(
            "phase grid limited to {MAX_GRID_POINTS} points, got {points}"
        )));
    }
    let (x, w) = gauss_legendre(points);
    // x is descending on [-1, 1]; map φ = π(1 + x)/2 and reverse for ascending nodes.
    let half = PI / 2.0;
    let nodes = x.iter().rev().map(|&xi| half * (1.0 + xi)).collect();
    let weights = w.iter().rev().map(|&wi| half * wi).collect();
    Ok(PhaseGrid { nodes, weights })
}

/// Default grid for operators up to `n_max`: keeps cosine products of
/// bandwidth 2·n_max well inside the rule's resolution.
pub fn default_grid_points(n_max: usize) -> usize {
    (4 * n_max).max(1024)
}

/// Nodes (descending) and weights of the n-point Gauss–Legendre rule on [-1, 1].
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        // quadratic convergence: once a step is below 1e-14 the iterate is at round-off
        for _ in 0..30 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-14 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        weights[i] = w;
        nodes[n - 1 - i] = -x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_tiny_grids() {
        assert!(matches!(
            make_phase_grid(1),
            Err(PhaseError::InvalidArgument(_))
        ));
        assert!(make_phase_grid(0).is_err());
    }

    #[test]
    fn two_point_rule() {
        let g = make_phase_grid(2).unwrap();
        assert_eq!(g.len(), 2);
        let sum: f64 = g.weights().iter().sum();
        assert!((sum - PI).abs() < 1e-12);
        assert!(g.nodes().iter().all(|&x| x > 0.0 && x < PI));
        // nodes at π/2 (1 ∓ 1/√3)
        let expected = 0.5 * PI * (1.0 - 1.0 / 3f64.sqrt());
        assert!((g.nodes()[0] - expected).abs() < 1e-14);
    }

    #[test]
    fn nodes_strictly_increasing_and_interior() {
        for points in [2, 3, 7, 64, 1025, 4096] {
            let g = make_phase_grid(points).unwrap();
            assert!(g.nodes().windows(2).all(|w| w[0] < w[1]), "{points}");
            assert!(g.nodes()[0] > 0.0 && *g.nodes().last().unwrap() < PI);
            assert!(g.weights().iter().all(|&w| w > 0.0));
            let sum: f64 = g.weights().iter().sum();
            assert!((sum - PI).abs() < 1e-12, "{points}: {}", sum - PI);
        }
    }

    #[test]
    fn polynomial_exactness() {
        // n points integrate degree 2n-1 exactly.
        let g = make_phase_grid(5).unwrap();
        let got = g.integrate(|x| x.powi(9));
        let exact = PI.powi(10) / 10.0;
        assert!((got - exact).abs() < 1e-10 * exact);
    }

    #[test]
    fn sin_squared_and_orthogonality() {
        let g = make_phase_grid(200).unwrap();
        let s2 = g.integrate(|x| x.sin().powi(2));
        assert!((s2 - PI / 2.0).abs() < 1e-12);
        let orth = g.integrate(|x| (3.0 * x).cos() * (5.0 * x).cos());
        assert!(orth.abs() < 1e-12);
    }
}
