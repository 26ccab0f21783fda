//! Coherent-state averages approach |θ|, |sin θ|, cos θ and their squares.

use absphase::classical_limit::{
    fourier_abs_theta, limit_sweeps_par, Observable, DEFAULT_NBAR_LIST,
};

fn main() -> absphase::Result<()> {
    let thetas = [0.5, 1.0, 2.0, -2.0];
    for obs in Observable::ALL {
        for sweep in limit_sweeps_par(obs, &thetas, &DEFAULT_NBAR_LIST)? {
            let errs: Vec<String> = sweep.errors.iter().map(|e| format!("{e:.2e}")).collect();
            println!(
                "{:<5} theta={:>5.2} target={:>8.5} errors [{}] monotone={}",
                obs.name(),
                sweep.theta,
                sweep.target,
                errs.join(", "),
                sweep.is_monotone_after_first()
            );
        }
    }

    for s_max in [11, 101, 1001] {
        let f = fourier_abs_theta(1.0, s_max)?;
        println!(
            "|theta| series at 1, s_max={s_max}: {:.8} (tail bound {:.2e})",
            f.value, f.tail_bound
        );
    }
    Ok(())
}
