//! The Λ term of the Friedman equation absorbed into the time arithmetic.
//! The Λ-free equation solved in the matched arithmetic reproduces the
//! standard scale factor.

use nncalc::cosmo::{friedman_scale_factor, matched_generator, nn_friedman_integrate, nn_friedman_scale_factor, CosmologyParams};
use nncalc::Result;

fn main() -> Result<()> {
    let params = CosmologyParams::default();
    println!("Ω_M = {}, Ω_Λ = {}, κ = {:.4}", params.omega_m, params.omega_lambda, params.kappa());
    let x = matched_generator(&params)?.arithmetic();

    let traj = nn_friedman_integrate(0.05, 3.0, params.omega, &x, 10_000)?;
    println!("{:>8} {:>16} {:>16} {:>16}", "t", "standard", "closed NN", "RK4 in f_X(t)");
    for p in traj.iter().step_by(1000) {
        println!(
            "{:>8.4} {:>16.12} {:>16.12} {:>16.12}",
            p.t,
            friedman_scale_factor(p.t, &params)?,
            nn_friedman_scale_factor(p.t, params.omega, &x)?,
            p.a
        );
    }

    // without Λ the matched generator is the identity and a ∝ t^{2/3}
    let matter = CosmologyParams::new(0.3, 0.0, 0.3)?;
    println!("\nΩ_Λ = 0: a(1) = {:.12}, (1.5√0.3)^{{2/3}} = {:.12}", friedman_scale_factor(1.0, &matter)?, (1.5 * 0.3f64.sqrt()).powf(2.0 / 3.0));
    Ok(())
}
