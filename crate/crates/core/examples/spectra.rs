//! Eigenvalue multiplicities, characteristic polynomials, invariant blocks
//! and semisimplicity of family instances.

use rechar::classification::{instantiate, FamilyParams, SolutionFamily, Type1Eigen};
use rechar::rational::int;
use rechar::spectral::{char_poly, expected_spectrum, geometric_multiplicity, invariant_blocks, is_semisimple};

fn main() -> rechar::Result<()> {
    let f = SolutionFamily::type1(4, 1, 3)?;
    println!("{f}: spectrum {}", expected_spectrum(&f).to_json());
    println!("invariant blocks: {:?}", invariant_blocks(&f.pair()));

    for (lambda, mu) in [(2, 3), (2, 2)] {
        let p = FamilyParams::Type1 {
            eigen: Type1Eigen::Roots {
                lambda: int(lambda),
                mu: int(mu),
            },
            y: [(1, int(1))].into(),
        };
        let a = instantiate(&f, &p)?;
        println!(
            "\nlambda = {lambda}, mu = {mu}:\n{a}char poly {}\ndim ker(A - lambda) = {}, semisimple: {}",
            char_poly(&a)?,
            geometric_multiplicity(&a, &int(lambda)),
            is_semisimple(&a)?,
        );
    }

    let g = SolutionFamily::type2(3, &[1], &[3], 2)?;
    let a = instantiate(
        &g,
        &FamilyParams::Type2 {
            lambda: int(5),
            y: [(1, int(7))].into(),
        },
    )?;
    println!(
        "\n{g}: spectrum {}\n{a}char poly {}",
        expected_spectrum(&g).to_json(),
        char_poly(&a)?
    );
    Ok(())
}
