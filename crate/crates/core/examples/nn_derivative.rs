//! Derivatives and integrals between arithmetics. The exponential from the
//! log arithmetic to ℝ is its own derivative, and differentiation undoes
//! integration.

use nncalc::calculus::exp_function;
use nncalc::{nn_derivative, nn_integral, Arithmetic, NNFunction, Result};

fn main() -> Result<()> {
    let x = Arithmetic::log();
    let y = Arithmetic::identity();
    let exp = exp_function(&x, &y);
    println!("Exp: ℝ_log → ℝ and its derivative");
    for pt in [0.5, 1.0, 2.0, 5.0] {
        println!("  x = {pt:<4} Exp = {:.12}  DExp/Dx = {:.12}", exp.eval(pt), nn_derivative(&exp, pt, None)?);
    }

    // A(x) = x² seen from the log arithmetic on both sides: conjugate 2r
    let log = Arithmetic::log();
    let square = NNFunction::new(log.clone(), log.clone(), |x| x * x);
    println!("\nA(x) = x² in ℝ_log → ℝ_log (derivative is the constant e²)");
    for pt in [0.5, 2.0, 10.0] {
        println!("  x = {pt:<4} DA/Dx = {:.12}", nn_derivative(&square, pt, None)?);
    }
    println!("  e² = {:.12}", 2f64.exp());

    let kappa = Arithmetic::kaniadakis(0.7)?;
    let cubic = NNFunction::from_conjugate(kappa.clone(), kappa.clone(), |r| r * r * r - r);
    let anti = cubic.antiderivative(0.3, 1e-13);
    let back = nn_derivative(&anti, 1.1, Some(1e-2))?;
    println!("\nκ = 0.7, cubic conjugate: D∫A at 1.1 = {back:.12}, A(1.1) = {:.12}", cubic.eval(1.1));
    let integral = nn_integral(&cubic.derivative(None), 0.3, 1.1, None)?;
    let diff = kappa.ominus(cubic.eval(1.1), cubic.eval(0.3))?;
    println!("∫DA from 0.3 to 1.1 = {integral:.12}, A(1.1) ⊖ A(0.3) = {diff:.12}");
    Ok(())
}
