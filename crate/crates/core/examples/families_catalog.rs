//! Lists admissible pairs and solution families, and checks each family's
//! symbolic residual.

use rechar::braid::{re_residual, BraidOperator};
use rechar::classification::{count_sigma_choices, enumerate_admissible_pairs, enumerate_families};

fn main() -> rechar::Result<()> {
    let n = 3;
    let pairs = enumerate_admissible_pairs(n);
    println!("{} admissible pairs for n = {n}:", pairs.len());
    for p in &pairs {
        println!("  {p}");
    }

    let s = BraidOperator::build(n)?;
    println!("\nfamilies for n = {n}:");
    for f in enumerate_families(n) {
        let (a, rel) = f.symbolic();
        let ok = re_residual(&a, &s, &rel)?.is_zero();
        println!("  {f}  residual zero: {ok}");
        println!("{}", a.entries());
    }

    println!("maps sigma: Y -> [1, 10] \\ Y for |Y| = K:");
    for k in 0..=5 {
        println!("  K = {k}: {}", count_sigma_choices(10, k));
    }
    Ok(())
}
