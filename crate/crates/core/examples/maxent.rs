//! Maximum entropy with probabilities living in a non-Newtonian arithmetic.
//! The conjugate weights are always the Gibbs weights.

use nncalc::statmech::{maxent_solve, EnergySpectrum};
use nncalc::{Arithmetic, Result};

fn main() -> Result<()> {
    let energies = vec![0.0, 0.5, 1.0, 2.0, 3.5];
    let beta = 1.3;
    for x in [Arithmetic::identity(), Arithmetic::log(), Arithmetic::neglog()] {
        let spectrum = EnergySpectrum::plain(energies.clone())?;
        let sol = match maxent_solve(&x, &spectrum, beta) {
            Ok(s) => s,
            Err(e) => {
                println!("{}: {e}", x.label());
                continue;
            }
        };
        println!("{} (C = {:.6}, α = {:.6}, residual {:.2e})", x.label(), sol.c, sol.alpha, sol.stationarity_residual());
        for (k, e) in energies.iter().enumerate() {
            println!("  E = {e:<4} p = {:<18.12} f_X(p) = {:.12}", sol.p[k], sol.weights[k]);
        }
    }

    // energies measured in the log arithmetic enter through ln E
    let spectrum = EnergySpectrum::new(vec![0.5, 1.0, 2.0, 4.0], Arithmetic::log())?;
    let sol = maxent_solve(&Arithmetic::identity(), &spectrum, 1.0)?;
    println!("\nlog-valued energies, β = 1: p = {:?}", sol.p.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>());
    Ok(())
}
