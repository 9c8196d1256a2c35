//! Escort maps that keep probabilities normalized.

use nncalc::escort::{correspondence_limit, escort_affine, escort_binary, escort_renormalized, EscortFamily};
use nncalc::statmech::ProbabilityVector;
use nncalc::Result;

fn main() -> Result<()> {
    println!("two outcomes: g(p) + g(1 − p)");
    let cubic = EscortFamily::odd_part("cubic", |x| 4.0 * x * x * x)?;
    for fam in [EscortFamily::identity(), EscortFamily::sine(), EscortFamily::spin(), cubic] {
        let (g, gc) = (escort_binary(&fam, 0.2)?, escort_binary(&fam, 0.8)?);
        println!("  {:<10?} g(0.2) = {g:.9}  g(0.8) = {gc:.9}  sum = {:.15}", fam, g + gc);
    }

    println!("\nn outcomes, affine family");
    let p = ProbabilityVector::new(vec![0.1, 0.2, 0.3, 0.4])?;
    for a in [-1.0, 0.0, 0.5, 1.0] {
        let g: Vec<f64> = p.iter().map(|&pk| escort_affine(a, 4, pk)).collect::<Result<_>>()?;
        println!("  a = {a:<4} g = {g:.4?} sum = {:.15}", g.iter().sum::<f64>());
    }

    println!("\ng_n(0.4) at a = 0.6 as n grows");
    for row in correspondence_limit(0.6, 0.4, &[3, 5, 50, 5000])? {
        println!("  n = {:<5} g = {:.6}", row.n, row.g);
    }

    let esc = escort_renormalized(&p, 2.0)?;
    println!("\nrenormalized escort, q = 2: {:.4?}", esc.as_slice());
    Ok(())
}
