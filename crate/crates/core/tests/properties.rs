use std::f64::consts::PI;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use absphase::classical_limit::{coherent_expectation_exact, Observable};
use absphase::fock::{
    coherent_state, expectation, phase_state_coeffs, CoherentAmplitude, TruncatedOperator,
};
use absphase::oscillator::{
    forward_transform, inverse_transform, mod_pi_distance, reduce_mod_pi, Branch, OscillatorParams,
    PhasePoint,
};
use absphase::phase_ops::build_number;
use absphase::quadrature::make_phase_grid;
use absphase::restricted::{
    commutator_closed_form, commutator_expectation, random_superposition, BoxConfig,
};
use absphase::Complex64;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grid_integrates_cosine_products(points in 128usize..=1024, a in 0usize..32, b in 0usize..32) {
        let grid = make_phase_grid(points).unwrap();
        let got = grid.integrate(|x| (a as f64 * x).cos() * (b as f64 * x).cos());
        let want = match (a, b) {
            (0, 0) => PI,
            _ if a == b => PI / 2.0,
            _ => 0.0,
        };
        prop_assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    #[test]
    fn coherent_mean_number(nbar in 0.5f64..400.0, theta in -3.1f64..3.1) {
        let state = coherent_state(&CoherentAmplitude::new(nbar, theta).unwrap()).unwrap();
        let mean: f64 = state.iter().enumerate().map(|(n, c)| n as f64 * c.norm_sqr()).sum();
        prop_assert!((mean - nbar).abs() < 1e-6 * nbar);
    }

    #[test]
    fn hermitian_expectation_is_real(
        n_max in 2usize..24,
        raw in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 600),
        amps in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 24),
    ) {
        let dim = n_max + 1;
        let mut a = TruncatedOperator::from_fn(n_max, |r, c| {
            let (re, im) = raw[r * dim + c];
            Complex64::new(re, im)
        }).unwrap();
        a = a.add(&a.adjoint()).unwrap();
        prop_assert!(a.is_hermitian());
        let mut psi: Vec<Complex64> = amps[..dim].iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        let norm = psi.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        psi.iter_mut().for_each(|c| *c /= norm);
        prop_assert!(expectation(&a, &psi).unwrap().imag.abs() < 1e-10);
    }

    #[test]
    fn inverse_is_invariant_under_mod_pi_shift(q in -5.0f64..5.0, p in -5.0f64..5.0) {
        prop_assume!(q.abs() + p.abs() > 1e-6);
        let params = OscillatorParams::new(0.9, 1.4).unwrap();
        prop_assert_eq!(inverse_transform(q, p, &params).unwrap(), inverse_transform(-q, -p, &params).unwrap());
    }

    #[test]
    fn forward_then_inverse_round_trips(angle in 0.0f64..PI, action in 0.01f64..20.0, minus in any::<bool>()) {
        let params = OscillatorParams::new(1.7, 0.6).unwrap();
        let branch = if minus { Branch::Minus } else { Branch::Plus };
        let (q, p) = forward_transform(&PhasePoint::new(angle, action, branch).unwrap(), &params);
        let (a, j) = inverse_transform(q, p, &params).unwrap();
        prop_assert!(mod_pi_distance(a, reduce_mod_pi(angle)) < 1e-12);
        prop_assert!((j - action).abs() < 1e-12 * action.max(1.0));
    }

    #[test]
    fn commutator_matches_closed_form(seed in any::<u64>(), terms in 1usize..12, hbar in 0.1f64..3.0, length in 0.5f64..10.0) {
        let box_cfg = BoxConfig::new(length, hbar).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let state = random_superposition(&mut rng, terms, -15..=15, box_cfg).unwrap();
        let diff = (commutator_expectation(&state) - commutator_closed_form(&state)).norm();
        prop_assert!(diff < 1e-10 * hbar.max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sweep_value_is_even_in_theta(theta in 0.05f64..3.1, nbar in 1.0f64..40.0) {
        for obs in Observable::ALL {
            let op = obs.build(absphase::fock::default_cutoff(nbar)).unwrap();
            let plus = coherent_expectation_exact(&op, &CoherentAmplitude::new(nbar, theta).unwrap()).unwrap();
            let minus = coherent_expectation_exact(&op, &CoherentAmplitude::new(nbar, -theta).unwrap()).unwrap();
            prop_assert!((plus - minus).abs() < 1e-12, "{obs}: {plus} vs {minus}");
        }
    }
}

#[test]
fn phase_states_are_orthonormal_in_fock_index() {
    let n_max = 100;
    let grid = make_phase_grid(2000).unwrap();
    let rows: Vec<Vec<f64>> = grid
        .nodes()
        .iter()
        .map(|&phi| phase_state_coeffs(phi, n_max).unwrap())
        .collect();
    let mut worst = 0.0f64;
    for n in 0..=n_max {
        for m in n..=n_max {
            let s: f64 = rows
                .iter()
                .zip(grid.weights())
                .map(|(c, w)| w * c[n] * c[m])
                .sum();
            let want = if n == m { 1.0 } else { 0.0 };
            worst = worst.max((s - want).abs());
        }
    }
    assert!(worst < 1e-10, "{worst}");
}

#[test]
fn number_operator_counts() {
    let n = build_number(6).unwrap();
    for k in 0..=6 {
        assert_eq!(n.get(k, k).re, k as f64);
    }
}
