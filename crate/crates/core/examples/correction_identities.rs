//! cos Φ and sin²Φ differ from their ladder-operator analogues only in the
//! lowest Fock levels.

use absphase::phase_ops::{
    build_cos_phi, build_ladder_and_trig, trig_closure, verify_cos_identity, verify_sin2_identity,
};
use absphase::quadrature::{default_grid_points, make_phase_grid};

fn main() -> absphase::Result<()> {
    let n_max = 128;
    let grid = make_phase_grid(default_grid_points(n_max))?;

    let cos = build_cos_phi(n_max, &grid)?;
    let ladder = build_ladder_and_trig(n_max)?;
    let diff = cos.sub(&ladder.c)?;
    println!("cos Phi - C, top-left corner:");
    for n in 0..3 {
        println!(
            "  {:>9.6} {:>9.6} {:>9.6}",
            diff.get(n, 0).re,
            diff.get(n, 1).re,
            diff.get(n, 2).re
        );
    }
    println!("(sqrt 2 - 1)/2 = {:.6}", (2f64.sqrt() - 1.0) / 2.0);

    println!(
        "cos identity residual   {:.3e}",
        verify_cos_identity(n_max)?
    );
    println!(
        "sin^2 identity residual {:.3e}",
        verify_sin2_identity(n_max)?
    );

    let t = trig_closure(n_max, &grid)?;
    println!("sin^2 + cos^2 - I       {:.3e}", t.pythagorean);
    println!("[sin, cos]              {:.3e}", t.commutator);
    Ok(())
}
