//! The classical harmonic oscillator: the two-branch canonical map
//! (Q, P) → (q, p) with H = ωP, its mod-π inverse, and action-angle variables.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{PhaseError, Result};
use crate::quadrature::{gauss_legendre, MAX_GRID_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorParams {
    mass: f64,
    omega: f64,
}

impl OscillatorParams {
    pub fn new(mass: f64, omega: f64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(PhaseError::invalid(format!(
                "mass must be positive, got {mass}"
            )));
        }
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(PhaseError::invalid(format!(
                "omega must be positive, got {omega}"
            )));
        }
        Ok(OscillatorParams { mass, omega })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// H = (p² + m²ω²q²)/(2m)
    pub fn energy(&self, q: f64, p: f64) -> f64 {
        let mw = self.mass * self.omega;
        (p * p + mw * mw * q * q) / (2.0 * self.mass)
    }
}

/// Which of the two transformations generated by F₁ = (mωq²/2) cot Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    q_angle: f64,
    p_action: f64,
    branch: Branch,
}

impl PhasePoint {
    /// `action` is the new momentum P ≥ 0 (energy/frequency).
    pub fn new(angle: f64, action: f64, branch: Branch) -> Result<Self> {
        if !(action >= 0.0) || !action.is_finite() || !angle.is_finite() {
            return Err(PhaseError::invalid(format!(
                "need finite angle and action >= 0, got ({angle}, {action})"
            )));
        }
        Ok(PhasePoint {
            q_angle: angle,
            p_action: action,
            branch,
        })
    }

    pub fn angle(&self) -> f64 {
        self.q_angle
    }

    pub fn action(&self) -> f64 {
        self.p_action
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }
}

/// (Q, P, branch) → (q, p); the minus branch negates both coordinates.
pub fn forward_transform(pt: &PhasePoint, params: &OscillatorParams) -> (f64, f64) {
    let mw = params.mass() * params.omega();
    let s = pt.branch().sign();
    let p = s * (2.0 * mw * pt.action()).sqrt() * pt.angle().cos();
    let q = s * (2.0 * pt.action() / mw).sqrt() * pt.angle().sin();
    (q, p)
}

/// (q, p) → (Q mod π, P), with Q = arccot(p/(mωq)) taken in [0, π).
///
/// On the axis q = 0 this returns Q = 0 for either sign of p.
pub fn inverse_transform(q: f64, p: f64, params: &OscillatorParams) -> Result<(f64, f64)> {
    if q == 0.0 && p == 0.0 {
        return Err(PhaseError::UndefinedPhase);
    }
    let mw = params.mass() * params.omega();
    let action = params.energy(q, p) / params.omega();
    // fold onto p > 0 (or p = 0, q > 0) so both branches hit the same atan2 call
    let (q, p) = if p < 0.0 || (p == 0.0 && q < 0.0) {
        (-q, -p)
    } else {
        (q, p)
    };
    Ok((reduce_mod_pi((mw * q).atan2(p)), action))
}

/// Representative of `x` mod π in [0, π).
pub fn reduce_mod_pi(x: f64) -> f64 {
    let r = x.rem_euclid(PI);
    if r >= PI || r == 0.0 {
        // rem_euclid can round up to π; also folds −0.0 to +0.0
        0.0
    } else {
        r
    }
}

/// Distance between two angles on the circle of circumference π.
pub fn mod_pi_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// One sample of the analytic orbit and its recovered angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub q: f64,
    pub p: f64,
    pub angle: f64,
    pub expected: f64,
    pub deviation: f64,
    pub action: f64,
}

/// Samples q = A sin(ωt+φ₀), p = mωA cos(ωt+φ₀) on `t_grid` and recovers Q.
pub fn trajectory_samples(
    params: &OscillatorParams,
    amplitude: f64,
    phi0: f64,
    t_grid: &[f64],
) -> Result<Vec<TrajectorySample>> {
    if !(amplitude > 0.0) || !amplitude.is_finite() {
        return Err(PhaseError::invalid(format!(
            "amplitude must be positive, got {amplitude}"
        )));
    }
    let mw = params.mass() * params.omega();
    t_grid
        .iter()
        .map(|&t| {
            let arg = params.omega() * t + phi0;
            let q = amplitude * arg.sin();
            let p = mw * amplitude * arg.cos();
            let (angle, action) = inverse_transform(q, p, params)?;
            let expected = reduce_mod_pi(arg);
            Ok(TrajectorySample {
                t,
                q,
                p,
                angle,
                expected,
                deviation: mod_pi_distance(angle, expected),
                action,
            })
        })
        .collect()
}

/// Largest mod-π distance between the recovered Q(t) and ωt + φ₀.
pub fn trajectory_phase_check(
    params: &OscillatorParams,
    amplitude: f64,
    phi0: f64,
    t_grid: &[f64],
) -> Result<f64> {
    Ok(trajectory_samples(params, amplitude, phi0, t_grid)?
        .iter()
        .map(|s| s.deviation)
        .fold(0.0, f64::max))
}

/// Direction in which the orbit integral ∮ p dq is traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// Along the motion.
    Forward,
    Reverse,
}

/// J = (1/2π)∮ p dq on the orbit of energy `energy`, with `quad_points`
/// Gauss–Legendre nodes over the orbit angle.
///
/// The orbit is parameterized as q = A sin ψ, p = mωA cos ψ, which avoids the
/// turning-point square roots of p(q).
pub fn action_integral(
    params: &OscillatorParams,
    energy: f64,
    orientation: Orientation,
    quad_points: usize,
) -> Result<f64> {
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(PhaseError::invalid(format!(
            "energy must be positive, got {energy}"
        )));
    }
    if !(2..=MAX_GRID_POINTS).contains(&quad_points) {
        return Err(PhaseError::invalid(format!(
            "quadrature points out of range: {quad_points}"
        )));
    }
    let (m, w) = (params.mass(), params.omega());
    let amp = (2.0 * energy / (m * w * w)).sqrt();
    let (x, wt) = gauss_legendre(quad_points);
    let sign = match orientation {
        Orientation::Forward => 1.0,
        Orientation::Reverse => -1.0,
    };
    let mut loop_integral = 0.0;
    for (xi, wi) in x.iter().rev().zip(wt.iter().rev()) {
        // ψ over [0, 2π], traversed backwards for the reverse orientation
        let psi = sign * PI * (1.0 + xi);
        let p = m * w * amp * psi.cos();
        let dq_dpsi = amp * psi.cos();
        loop_integral += PI * wi * p * dq_dpsi * sign;
    }
    Ok(loop_integral / (2.0 * PI))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ActionAngle {
    /// Signed action J.
    pub action: f64,
    /// Angle variable w.
    pub angle: f64,
    /// Initial angle β.
    pub beta: f64,
}

impl ActionAngle {
    /// w(t) = ω sign(J) t + β
    pub fn at_time(action: f64, beta: f64, t: f64, params: &OscillatorParams) -> Self {
        let angle = params.omega() * action.signum() * t + beta;
        ActionAngle {
            action,
            angle,
            beta,
        }
    }
}

/// q = √(2|J|/(mω)) sin w, p = √(2mω|J|) cos w.
pub fn angle_variable_reconstruct(aa: &ActionAngle, params: &OscillatorParams) -> (f64, f64) {
    let mw = params.mass() * params.omega();
    let j = aa.action.abs();
    let q = (2.0 * j / mw).sqrt() * aa.angle.sin();
    let p = (2.0 * mw * j).sqrt() * aa.angle.cos();
    (q, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> OscillatorParams {
        OscillatorParams::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn forward_at_quarter_turn() {
        let params = OscillatorParams::new(2.0, 3.0).unwrap();
        let pt = PhasePoint::new(PI / 2.0, 1.5, Branch::Plus).unwrap();
        let (q, p) = forward_transform(&pt, &params);
        assert!((q - (2.0 * 1.5 / 6.0f64).sqrt()).abs() < 1e-15);
        assert!(p.abs() < 1e-15);
        let (qm, pm) = forward_transform(
            &PhasePoint::new(PI / 2.0, 1.5, Branch::Minus).unwrap(),
            &params,
        );
        assert_eq!((qm, pm), (-q, -p));
        let (q0, p0) =
            forward_transform(&PhasePoint::new(0.0, 0.0, Branch::Minus).unwrap(), &params);
        assert_eq!((q0.abs(), p0.abs()), (0.0, 0.0));
    }

    #[test]
    fn inverse_examples() {
        let (angle, action) = inverse_transform(1.0, 0.0, &unit()).unwrap();
        assert!((angle - PI / 2.0).abs() < 1e-15);
        assert!((action - 0.5).abs() < 1e-15);
        assert!(matches!(
            inverse_transform(0.0, 0.0, &unit()),
            Err(PhaseError::UndefinedPhase)
        ));
        assert_eq!(inverse_transform(0.0, 2.0, &unit()).unwrap().0, 0.0);
        assert_eq!(inverse_transform(0.0, -2.0, &unit()).unwrap().0, 0.0);
        assert_eq!(inverse_transform(-0.0, 2.0, &unit()).unwrap().0, 0.0);
    }

    #[test]
    fn round_trip_and_branch_shift() {
        let params = OscillatorParams::new(0.7, 1.9).unwrap();
        for &angle in &[0.1, 1.0, 2.0, 3.1] {
            for &action in &[0.01, 1.0, 40.0] {
                let (q, p) = forward_transform(
                    &PhasePoint::new(angle, action, Branch::Plus).unwrap(),
                    &params,
                );
                let (a, j) = inverse_transform(q, p, &params).unwrap();
                assert!((a - angle).abs() < 1e-12);
                assert!((j - action).abs() < 1e-12 * action.max(1.0));
                let (qm, pm) = forward_transform(
                    &PhasePoint::new(angle, action, Branch::Minus).unwrap(),
                    &params,
                );
                let (am, jm) = inverse_transform(qm, pm, &params).unwrap();
                assert!(mod_pi_distance(am, a) < 1e-12);
                assert!((jm - j).abs() < 1e-12 * action.max(1.0));
            }
        }
    }

    #[test]
    fn trajectory_is_mod_pi_linear() {
        let t: Vec<f64> = (0..=1000).map(|k| k as f64 * 0.01).collect();
        let params = unit();
        assert!(trajectory_phase_check(&params, 1.3, 0.3, &t).unwrap() < 1e-9);
        let a = trajectory_samples(&params, 1.3, 0.3, &t).unwrap();
        let b = trajectory_samples(&params, 1.3, 0.3 + PI, &t).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!(mod_pi_distance(x.angle, y.angle) < 1e-12);
            assert!((x.action - a[0].action).abs() < 1e-12);
        }
        assert!(trajectory_phase_check(&params, 0.0, 0.3, &t).is_err());
    }

    #[test]
    fn action_values() {
        let params = OscillatorParams::new(1.0, 2.0).unwrap();
        let fwd = action_integral(&params, 1.0, Orientation::Forward, 16).unwrap();
        let rev = action_integral(&params, 1.0, Orientation::Reverse, 16).unwrap();
        assert!((fwd - 0.5).abs() < 1e-6);
        assert!((rev + 0.5).abs() < 1e-6);
        let heavy = OscillatorParams::new(37.0, 2.0).unwrap();
        let j = action_integral(&heavy, 1.0, Orientation::Forward, 16).unwrap();
        assert!((j - fwd).abs() < 1e-12);
        assert!(action_integral(&params, 0.0, Orientation::Forward, 16).is_err());
    }

    #[test]
    fn reconstruct_energy() {
        let params = OscillatorParams::new(1.3, 0.8).unwrap();
        let (q, p) = angle_variable_reconstruct(
            &ActionAngle {
                action: 2.0,
                angle: 0.0,
                beta: 0.0,
            },
            &params,
        );
        assert_eq!(q, 0.0);
        assert!((p - (2.0 * 1.3 * 0.8 * 2.0f64).sqrt()).abs() < 1e-15);
        for &j in &[2.0, -2.0] {
            for &t in &[0.0, 0.4, 7.0] {
                let aa = ActionAngle::at_time(j, 0.3, t, &params);
                let (q, p) = angle_variable_reconstruct(&aa, &params);
                assert!((params.energy(q, p) - params.omega() * j.abs()).abs() < 1e-12);
            }
        }
    }
}
