//! Kaniadakis κ-calculus: the κ-derivative, its dual, and the κ-logarithm.

use nncalc::kappa::{
    arcsinh_k, kappa_derivative, kappa_dual_derivative, kappa_exp, kappa_ln, kappa_nn_ln_derivative, sinh_k,
};
use nncalc::Result;

fn main() -> Result<()> {
    let kappa = 0.5;
    println!("κ = {kappa}");
    println!("{:>6} {:>16} {:>16} {:>16}", "x", "f_κ(x)", "exp_κ(x)", "d_κ exp_κ");
    for x in [-2.0, -0.5, 0.0, 0.5, 2.0] {
        let e = kappa_exp(x, kappa)?;
        let d = kappa_derivative(|s| kappa_exp(s, kappa).unwrap(), x, kappa)?;
        println!("{x:>6} {:>16.12} {e:>16.12} {d:>16.12}", arcsinh_k(kappa, x));
    }

    println!("\nround trip sinh_κ(arcsinh_κ(x)):");
    for x in [1e-8, 0.3, 40.0] {
        println!("  {x:e} → {:e}", sinh_k(kappa, arcsinh_k(kappa, x)));
    }

    println!("\nκ-logarithm and the derivative of Ln: ℝ → ℝ_κ");
    for y in [0.5, 1.0, 3.0] {
        println!(
            "  y = {y:<4} ln_κ(y) = {:>14.12}  DLn/Dy = {:>14.12}",
            kappa_ln(y, kappa)?,
            kappa_nn_ln_derivative(y, kappa)?
        );
    }

    // the dual derivative of the κ-log is 1/y
    let y = 2.0;
    let dual = kappa_dual_derivative(|t| kappa_ln(t, kappa).unwrap(), y, kappa)?;
    println!("\ndual derivative of ln_κ at y = {y}: {dual:.12}");
    Ok(())
}
