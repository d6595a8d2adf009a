//! Re-derives every solution for n = 2 and n = 3 by case splitting and
//! compares the result with the family catalog.

use rechar::classification::enumerate_families;
use rechar::oracle::{compare_with_catalog, solve_unrestricted};
use rechar::rational::{frac, int};

fn main() -> rechar::Result<()> {
    for n in [2, 3] {
        for q in [int(2), int(3), frac(5, 2)] {
            let r = compare_with_catalog(n, &q, &enumerate_families(n))?;
            println!(
                "n = {n}, q = {q}: {} components, {} missing, {} extra",
                r.components.len(),
                r.missing.len(),
                r.extra.len()
            );
        }
    }

    println!("\nn = 2 with every entry unknown:");
    for c in solve_unrestricted(2, &int(2))? {
        println!("  {}", c.to_json());
    }

    let catalog: Vec<_> = enumerate_families(2)
        .into_iter()
        .filter(|f| f.type_number() == 2)
        .collect();
    let r = compare_with_catalog(2, &int(2), &catalog)?;
    println!("\nwithout Type 1 the comparison flags:");
    for m in &r.missing {
        println!("  {}: {}", m.component.signature(), m.reason);
    }
    Ok(())
}
