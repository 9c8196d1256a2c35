//! Kolmogorov–Nagumo means under the Rényi generator, and the entropies that
//! come out of them.

use nncalc::statmech::{
    kn_mean, kn_mean_as_nd_probability, kn_translation_check, renyi_entropy, shannon_entropy, to_bits,
    ProbabilityVector,
};
use nncalc::{Generator, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let p = ProbabilityVector::random(&mut rng, 6)?;
    println!("p = {:?}", p.as_slice().iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>());

    let info: Vec<f64> = p.iter().map(|&pk| -pk.ln()).collect();
    println!("\n{:>5} {:>14} {:>14} {:>10}", "q", "KN mean of ln(1/p)", "Rényi entropy", "bits");
    for q in [0.25, 0.5, 0.999, 1.0, 2.0, 4.0] {
        let g = Generator::renyi(q)?;
        let mean = kn_mean(&g, &p, &info)?;
        let s = renyi_entropy(&p, q)?;
        println!("{q:>5} {mean:>18.12} {s:>14.12} {:>10.6}", to_bits(s));
    }
    println!("Shannon: {:.12}", shannon_entropy(&p));

    let g = Generator::renyi(2.0)?;
    let nd = kn_mean_as_nd_probability(&g, &p, &info)?;
    println!("\n⊕/⊙ form at q = 2: {nd:.12}");
    println!("translation ⟨a + 3⟩ = ⟨a⟩ + 3 holds: {}", kn_translation_check(&g, &p, &info, 3.0));
    Ok(())
}
