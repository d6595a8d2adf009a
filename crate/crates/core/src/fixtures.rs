//! Known characters from the literature, written out entry by entry, each
//! paired with the catalog family that reproduces it.

use num_traits::Zero;

use crate::braid::{re_residual, BraidOperator, CharacterMatrix};
use crate::classification::{type1_family, type2_family, SolutionFamily};
use crate::error::{usage, Result};
use crate::matrix::Matrix;
use crate::scalar::{PairRelations, Scalar, Var};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub matrix: CharacterMatrix,
    /// Relations `y_i y_{n+1-i} = -λμ` for the displayed off-diagonal pairs.
    pub relations: PairRelations,
    pub family: SolutionFamily,
}

fn parse_rows(n: usize, rows: &[&[&str]]) -> Result<CharacterMatrix> {
    let m = rows
        .iter()
        .map(|r| r.iter().map(|t| Scalar::parse_in(t, n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    CharacterMatrix::new(Matrix::from_rows(m)?)
}

fn anti_relations(n: usize, upper: &[usize]) -> Result<PairRelations> {
    PairRelations::new(upper.iter().map(|&i| (i, n + 1 - i)))
}

fn displayed(name: &str, n: usize, rows: &[&[&str]], upper: &[usize], family: SolutionFamily) -> Result<Fixture> {
    Ok(Fixture {
        name: name.into(),
        matrix: parse_rows(n, rows)?,
        relations: anti_relations(n, upper)?,
        family,
    })
}

pub fn a11() -> Fixture {
    displayed(
        "A^{1,1}",
        2,
        &[&["l + m", "y1"], &["y2", "0"]],
        &[1],
        SolutionFamily::type1(2, 1, 2).unwrap(),
    )
    .unwrap()
}

pub fn a21() -> Fixture {
    displayed(
        "A^{2,1}",
        3,
        &[&["l + m", "0", "y1"], &["0", "l", "0"], &["y3", "0", "0"]],
        &[1],
        SolutionFamily::type1(3, 1, 3).unwrap(),
    )
    .unwrap()
}

pub fn a22() -> Fixture {
    displayed(
        "A^{2,2}",
        4,
        &[
            &["l + m", "0", "0", "y1"],
            &["0", "l + m", "y2", "0"],
            &["0", "y3", "0", "0"],
            &["y4", "0", "0", "0"],
        ],
        &[1, 2],
        SolutionFamily::type1(4, 2, 3).unwrap(),
    )
    .unwrap()
}

pub fn a31() -> Fixture {
    displayed(
        "A^{3,1}",
        4,
        &[
            &["l + m", "0", "0", "y1"],
            &["0", "l", "0", "0"],
            &["0", "0", "l", "0"],
            &["y4", "0", "0", "0"],
        ],
        &[1],
        SolutionFamily::type1(4, 1, 4).unwrap(),
    )
    .unwrap()
}

/// `D_n = λ Σ e^i_{n+1-i}`: Type 1 with `b₋ = ⌊n/2⌋`, `b₊ = n + 1 - b₋`
/// at `μ = -λ`, `y_i = λ`; for `n = 1` the diagonal Type 2 family.
pub fn d(n: usize) -> Result<Fixture> {
    if n == 0 {
        return Err(usage!("D_n needs n >= 1"));
    }
    let m = Matrix::from_fn(n, n, |r, c| {
        if r + c == n - 1 {
            Scalar::lambda()
        } else {
            Scalar::zero()
        }
    });
    let family = if n == 1 {
        SolutionFamily::type2(1, &[], &[], 1)?
    } else {
        SolutionFamily::type1(n, n / 2, n + 1 - n / 2)?
    };
    Ok(Fixture {
        name: format!("D_{n}"),
        matrix: CharacterMatrix::new(m)?,
        relations: PairRelations::empty(),
        family,
    })
}

/// `P_k = λ Σ_{i ≤ k} e^i_i`: Type 2 with `Y = ∅`, `b = k`.
pub fn p(n: usize, k: usize) -> Result<Fixture> {
    if k == 0 || k > n {
        return Err(usage!("P_k needs 1 <= k <= n, got k = {k}, n = {n}"));
    }
    let m = Matrix::from_fn(n, n, |r, c| {
        if r == c && r < k {
            Scalar::lambda()
        } else {
            Scalar::zero()
        }
    });
    Ok(Fixture {
        name: format!("P_{k} (n = {n})"),
        matrix: CharacterMatrix::new(m)?,
        relations: PairRelations::empty(),
        family: SolutionFamily::type2(n, &[], &[], k)?,
    })
}

/// The four displayed matrices, `D_n` for `n <= max_n` and `P_k` for
/// `k <= n <= max_n`.
pub fn all(max_n: usize) -> Vec<Fixture> {
    let mut out = vec![a11(), a21(), a22(), a31()];
    out.extend((1..=max_n).map(|n| d(n).expect("n >= 1")));
    for n in 1..=max_n {
        out.extend((1..=n).map(|k| p(n, k).expect("k <= n")));
    }
    out
}

/// The family's symbolic matrix, specialized as the fixture requires.
pub fn reproduce(f: &Fixture) -> Result<(CharacterMatrix, PairRelations)> {
    let n = f.family.n();
    match &f.family {
        SolutionFamily::Type1 { b_minus, b_plus, .. } if f.relations.is_empty() => {
            // D_n: μ = -λ and every y_i = λ
            let (a, _) = type1_family(n, *b_minus, *b_plus)?;
            let lambda = Scalar::lambda();
            let m = a.entries().try_map(|s| {
                let mut s = s.substitute(Var::Mu, &-lambda.clone())?;
                for i in 1..=n {
                    s = s.substitute(Var::Y(i), &lambda)?;
                }
                Ok::<_, crate::Error>(s.in_universe(n))
            })?;
            Ok((CharacterMatrix::new(m)?, PairRelations::empty()))
        }
        SolutionFamily::Type1 { b_minus, b_plus, .. } => type1_family(n, *b_minus, *b_plus),
        SolutionFamily::Type2 { pair, b, .. } => Ok((
            type2_family(n, &pair.domain(), &pair.image(), *b)?,
            PairRelations::empty(),
        )),
    }
}

/// Whether the family reproduces the fixture entry for entry, with the
/// same relations.
pub fn reproduces(f: &Fixture) -> Result<bool> {
    let (m, rel) = reproduce(f)?;
    Ok(m == f.matrix && rel == f.relations)
}

/// Whether the symbolic residual of the fixture vanishes modulo its relations.
pub fn verifies(f: &Fixture) -> Result<bool> {
    let s = BraidOperator::build(f.matrix.n())?;
    Ok(re_residual(&f.matrix, &s, &f.relations)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_matrices_are_reproduced_and_verify() {
        for f in [a11(), a21(), a22(), a31()] {
            assert!(reproduces(&f).unwrap(), "{}", f.name);
            assert!(verifies(&f).unwrap(), "{}", f.name);
        }
    }

    #[test]
    fn d_and_p_up_to_four() {
        for f in all(4).into_iter().skip(4) {
            assert!(reproduces(&f).unwrap(), "{}", f.name);
            assert!(verifies(&f).unwrap(), "{}", f.name);
        }
    }

    #[test]
    fn bad_indices() {
        assert!(d(0).is_err());
        assert!(p(3, 4).is_err());
        assert!(p(3, 0).is_err());
    }
}
