//! Box states: the position-momentum commutator picks up a boundary term
//! that vanishes once the alternating coefficient sum is projected out.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use absphase::restricted::{
    commutator_closed_form, commutator_expectation, npcr_counterexample, random_superposition,
    subspace_c_projection, uncertainty_check, BoxConfig, WindowExponent,
};

fn main() -> absphase::Result<()> {
    let box_cfg = BoxConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..5 {
        let state = random_superposition(&mut rng, 6, -10..=10, box_cfg)?;
        let direct = commutator_expectation(&state);
        let closed = commutator_closed_form(&state);
        let projected = commutator_expectation(&subspace_c_projection(&state)?);
        let u = uncertainty_check(&state);
        println!(
            "state {k}: <[p,x]> = {:.6}i  closed form {:.6}i  projected {:.6}i  dx*dp = {:.4} >= {:.4}",
            direct.im, closed.im, projected.im, u.product, u.bound
        );
    }

    for n in 1..=3 {
        let minus = npcr_counterexample(n, WindowExponent::Negative, (0.2, 1.0), 64)?;
        let plus = npcr_counterexample(n, WindowExponent::Positive, (0.2, 1.0), 64)?;
        println!("window n={n}: <N> = {minus:+.12} and {plus:+.12}");
    }
    Ok(())
}
