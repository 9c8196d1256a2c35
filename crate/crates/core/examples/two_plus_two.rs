//! The same digits under different arithmetics. Adding two ordinary 2s and
//! reading the result in the logarithmic arithmetic gives e⁴.

use nncalc::arithmetic::{mixed, Op};
use nncalc::{Arithmetic, Result};

fn main() -> Result<()> {
    let plain = Arithmetic::identity();
    let log = Arithmetic::log();
    let kappa = Arithmetic::kaniadakis(1.0)?;

    println!("2 + 2 in each arithmetic");
    for a in [&plain, &log, &kappa] {
        println!("  {:<14} 2 ⊕ 2 = {:.12}   2 ⊙ 2 = {:.12}", a.label(), a.oplus(2.0, 2.0)?, a.odot(2.0, 2.0)?);
    }

    // operands from ℝ, result read in ℝ_log: f_log⁻¹(2 + 2) = e⁴
    let e4 = mixed(&log, Op::Add, &plain, 2.0, &plain, 2.0)?;
    println!("\nmixed: 2 +_ℝ^log 2 = {e4:.12} (e⁴ = {:.12})", 4f64.exp());

    println!("\nneutral elements");
    for a in [&plain, &log, &kappa] {
        println!("  {:<14} zero = {:<16.12} one = {:.12}", a.label(), a.zero()?, a.one()?);
    }

    // a Rényi arithmetic has a range bounded below, so sums can leave it
    let renyi = Arithmetic::renyi(2.0)?;
    match renyi.ominus(0.0, 1.0) {
        Ok(v) => println!("\nrenyi(2): 0 ⊖ 1 = {v}"),
        Err(e) => println!("\nrenyi(2): 0 ⊖ 1 refused: {e}"),
    }
    Ok(())
}
