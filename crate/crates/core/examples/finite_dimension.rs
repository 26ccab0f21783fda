//! The finite-dimensional angle operator Θ^m: exact spectrum and its
//! approach to the plane-rotator matrix as m grows.

use absphase::restricted::{
    finite_theta_matrix, finite_to_rotator_limit, rotator_angle_element, BoxConfig, FiniteDimConfig,
};

fn main() -> absphase::Result<()> {
    for m in [2, 8, 64] {
        let cfg = FiniteDimConfig::new(m, BoxConfig::default())?;
        let eig = finite_theta_matrix(&cfg)?.eigenvalues()?;
        let err = eig
            .iter()
            .zip(cfg.angle_spectrum())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!(
            "m={m:>3}: spectrum error {err:.2e}, largest eigenvalue {:.6}",
            eig[eig.len() - 1]
        );
    }

    let (n, np) = (0, 1);
    println!(
        "rotator element ({n},{np}) = {}",
        rotator_angle_element(n, np)
    );
    let limit = finite_to_rotator_limit(n, np, &[64, 128, 256, 512, 1024])?;
    for (i, (m, e)) in limit.m_list.iter().zip(&limit.errors).enumerate() {
        let ratio = if i == 0 {
            String::new()
        } else {
            format!("{:.4}", limit.ratios[i - 1])
        };
        println!("m={m:>5} error {e:.4e} {ratio}");
    }
    Ok(())
}
