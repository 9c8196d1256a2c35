//! The quantum conditional probability cos²((α − β)/2) recovered as an
//! ordinary-looking integral of a flat density over hidden variables, when
//! the integral is taken in the spin arithmetic.

use std::f64::consts::PI;

use nncalc::escort::{bell_rescaled_check, hidden_variable_integral, quantum_conditional, EscortFamily};
use nncalc::Result;

fn main() -> Result<()> {
    let beta = 0.0;
    println!("{:>8} {:>18} {:>18}", "α", "integral", "cos²((α−β)/2)");
    for k in 0..=8 {
        let alpha = PI * k as f64 / 8.0;
        let v = hidden_variable_integral(alpha, beta, 1e-12)?;
        println!("{alpha:>8.4} {v:>18.15} {:>18.15}", quantum_conditional(alpha - beta)?);
    }

    let p4 = [0.1, 0.4, 0.35, 0.15];
    for fam in [EscortFamily::identity(), EscortFamily::spin()] {
        println!("four-outcome rescaling with {fam:?} preserves normalization: {}", bell_rescaled_check(&fam, p4)?);
    }
    Ok(())
}
