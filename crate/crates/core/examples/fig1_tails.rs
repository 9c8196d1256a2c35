//! Two exponentials built on the Kaniadakis arithmetic with κ = 1. They
//! disagree near zero and share the same 1/(2x) tail. Pass `--csv` to print
//! the full table instead of a summary.

use nncalc::kappa::{fig1_table, tail_table};
use nncalc::Result;

fn main() -> Result<()> {
    let rows = fig1_table(0.01, 1e4, 200, 1.0)?;
    if std::env::args().any(|a| a == "--csv") {
        print!("{}", tail_table(&rows).to_csv());
        return Ok(());
    }
    println!("{:>12} {:>16} {:>16} {:>10}", "x", "Exp_ℝκ→ℝ(−x)", "Exp_ℝκ→ℝκ(−x)", "log ratio");
    for r in rows.iter().step_by(20).chain(rows.last()) {
        println!("{:>12.4e} {:>16.6e} {:>16.6e} {:>10.6}", r.x, r.exp_k1_k0, r.exp_k1_k1, r.log_ratio());
    }
    let last = rows.last().unwrap();
    println!("\n2x·Exp at x = 1e4: {:.8}", 2.0 * last.x * last.exp_k1_k0);
    Ok(())
}
