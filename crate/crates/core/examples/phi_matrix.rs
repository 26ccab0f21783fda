//! Builds Φ in closed form and by quadrature and compares them.

use absphase::phase_ops::{build_operator_from_phase_function, build_phi_analytic};
use absphase::quadrature::make_phase_grid;

fn main() -> absphase::Result<()> {
    let n_max = 128;
    let phi = build_phi_analytic(n_max)?;
    println!("<n|Phi|n'> for n, n' < 6:");
    for n in 0..6 {
        let row: Vec<String> = (0..6)
            .map(|m| format!("{:>9.5}", phi.get(n, m).re))
            .collect();
        println!("  {}", row.join(" "));
    }

    let grid = make_phase_grid(1024)?;
    let quad = build_operator_from_phase_function(|x| x, &grid, n_max)?;
    println!("grid accuracy: {:?}", quad.accuracy);
    println!(
        "max |analytic - quadrature| = {:.3e}",
        phi.max_abs_diff(&quad.operator)?
    );

    let eig = phi.eigenvalues()?;
    println!(
        "spectrum of truncated Phi: [{:.6}, {:.6}]",
        eig[0],
        eig[eig.len() - 1]
    );
    Ok(())
}
