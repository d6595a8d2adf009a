//! Instantiates families at sample parameters and recovers the family and
//! parameters from the bare matrix.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rechar::classification::{
    classify_matrix, enumerate_families, instantiate, sample_params, FamilyParams, SolutionFamily, Type1Eigen,
};
use rechar::rational::int;

fn main() -> rechar::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let q = int(2);
    for f in enumerate_families(3).iter().take(6) {
        let a = instantiate(f, &sample_params(f, &mut rng))?;
        let r = classify_matrix(&a, &q)?;
        println!("{f}\n{a}-> {}\n", r.to_json());
    }

    // eigenvalues (1 ± √5)/2 are only reachable through e1 = 1, e2 = -1
    let f = SolutionFamily::type1(2, 1, 2)?;
    let p = FamilyParams::Type1 {
        eigen: Type1Eigen::Symmetric {
            e1: int(1),
            e2: int(-1),
        },
        y: [(1, int(1))].into(),
    };
    let a = instantiate(&f, &p)?;
    println!("irrational eigenvalues:\n{a}-> {}", classify_matrix(&a, &q)?.to_json());
    Ok(())
}
