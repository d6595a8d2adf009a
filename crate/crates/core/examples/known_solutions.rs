//! The explicit solutions known from earlier work, matched against the
//! catalog families.

use rechar::fixtures;

fn main() -> rechar::Result<()> {
    for f in fixtures::all(4) {
        println!(
            "{}  from {}: reproduced {}, residual zero {}",
            f.name,
            f.family,
            fixtures::reproduces(&f)?,
            fixtures::verifies(&f)?
        );
        println!("{}", f.matrix.entries());
    }
    Ok(())
}
