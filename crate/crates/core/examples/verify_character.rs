//! Verifies numeric matrices against the reflection equation and reports
//! the first violated scalar equation when there is one.

use rechar::braid::re_residual_at;
use rechar::matrix::RatMatrix;
use rechar::rational::{frac, int};
use rechar::re_system::{extract_re_system, first_violated};

fn show(name: &str, a: &RatMatrix) -> rechar::Result<()> {
    let q = frac(5, 2);
    let zero = re_residual_at(a, &q)?.is_zero();
    match first_violated(a, &q)? {
        None => println!("{name}: residual zero = {zero}, every equation holds"),
        Some(tag) => println!("{name}: residual zero = {zero}, first violated {tag}"),
    }
    Ok(())
}

fn main() -> rechar::Result<()> {
    let system = extract_re_system(3)?;
    println!("n = 3 has {} scalar equations", system.len());

    let swap = RatMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]])?;
    let diag = RatMatrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(2)]])?;
    let nilpotent = RatMatrix::from_rows(vec![vec![int(0), int(4)], vec![int(0), int(0)]])?;
    show("[[0, 1], [1, 0]]", &swap)?;
    show("[[1, 0], [0, 2]]", &diag)?;
    show("[[0, 4], [0, 0]]", &nilpotent)?;
    Ok(())
}
