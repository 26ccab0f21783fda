//! Classical oscillator: the recovered angle tracks ωt + φ₀ mod π, and the
//! loop integral gives the action with a sign set by orientation.

use absphase::oscillator::{
    action_integral, angle_variable_reconstruct, inverse_transform, trajectory_samples,
    ActionAngle, Orientation, OscillatorParams,
};

fn main() -> absphase::Result<()> {
    let params = OscillatorParams::new(1.0, 2.0)?;
    let t: Vec<f64> = (0..=8).map(|k| k as f64 * 0.4).collect();
    for s in trajectory_samples(&params, 0.5, 0.3, &t)? {
        println!(
            "t={:>4.1} q={:>8.4} p={:>8.4} Q={:.6} expected={:.6}",
            s.t, s.q, s.p, s.angle, s.expected
        );
    }

    let (q, p) = (0.3, -0.4);
    println!("Q(q,p) = {:?}", inverse_transform(q, p, &params)?);
    println!("Q(-q,-p) = {:?}", inverse_transform(-q, -p, &params)?);

    let energy = params.energy(q, p);
    for o in [Orientation::Forward, Orientation::Reverse] {
        println!(
            "{o:?}: J = {:.12} (H/omega = {:.12})",
            action_integral(&params, energy, o, 32)?,
            energy / params.omega()
        );
    }

    let aa = ActionAngle::at_time(-1.5, 0.2, 1.0, &params);
    println!(
        "J<0 angle runs backwards: w(1) = {:.4}, (q,p) = {:?}",
        aa.angle,
        angle_variable_reconstruct(&aa, &params)
    );
    Ok(())
}
