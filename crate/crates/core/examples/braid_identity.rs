//! Builds the braid operator S for n = 2..4 and checks the braid and Hecke
//! relations symbolically in q.

use rechar::braid::{braid_residual, hecke_residual, BraidOperator};
use rechar::rational::frac;

fn main() -> rechar::Result<()> {
    for n in 2..=4 {
        let s = BraidOperator::build(n)?;
        println!(
            "n = {n}: S is {0}x{0} with {1} nonzero entries; braid residual zero: {2}; Hecke residual zero: {3}",
            n * n,
            s.matrix().count_nonzero(),
            braid_residual(&s).is_zero(),
            hecke_residual(&s).is_zero(),
        );
    }
    println!("\nS for n = 2:\n{}", BraidOperator::build(2)?.matrix());
    println!("S for n = 2 at q = 3/2:\n{}", BraidOperator::build(2)?.at(&frac(3, 2))?);
    Ok(())
}
