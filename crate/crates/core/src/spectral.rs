//! Invariant subspaces, eigenvalue multiplicities, characteristic
//! polynomials and semisimplicity of character matrices.
//!
//! For a Type 1 family the eigenvalues are `μ` with multiplicity `b₋`, `λ`
//! with multiplicity `b₊ - 1` and `0` with multiplicity `n - b₋ - b₊ + 1`:
//! each 2×2 block `[[λ+μ, y_i], [y_σ(i), 0]]` contributes `μ` and `λ`, and
//! every index in `(b₋, b₊)` contributes another `λ`. A Type 2 family has `λ`
//! with multiplicity `b` and `0` with multiplicity `n - b`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::classification::{classify_matrix, AdmissiblePair, FamilyParams, SolutionFamily, Type1Eigen};
use crate::error::{usage, Error, Result};
use crate::matrix::{Matrix, RatMatrix, Ring};
use crate::rational::{int, Rational};
use crate::scalar::{Assignment, Scalar, Var};
use crate::upoly::UPoly;

/// Index sets `{i, σ(i)}` for `i ∈ Y` and `{i}` for `i ∉ Y ∪ σ(Y)`,
/// sorted by smallest element. They partition `[1, n]` whenever `σ(Y) = Y`
/// or `Y ∩ σ(Y) = ∅`.
pub fn invariant_blocks(p: &AdmissiblePair) -> Vec<BTreeSet<usize>> {
    let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (&i, &j) in p.mapping() {
        blocks.insert(vec![i.min(j), i.max(j)]);
    }
    let touched: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
    for i in 1..=p.n() {
        if !touched.contains(&i) {
            blocks.insert(vec![i]);
        }
    }
    blocks.into_iter().map(|b| b.into_iter().collect()).collect()
}

/// `A · span{e^c : c ∈ block} ⊆ span{e^r : r ∈ block}`, i.e. entries in
/// the block's columns vanish outside the block's rows.
pub fn block_is_invariant<R: Ring>(a: &Matrix<R>, block: &BTreeSet<usize>) -> bool {
    block.iter().all(|&c| {
        (1..=a.rows())
            .filter(|r| !block.contains(r))
            .all(|r| a[(r - 1, c - 1)].is_zero())
    })
}

/// Eigenvalues with multiplicities. Entries with multiplicity 0 are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(Scalar, usize)>,
}

impl Spectrum {
    fn from_raw(raw: Vec<(Scalar, usize)>) -> Self {
        let mut entries: Vec<(Scalar, usize)> = Vec::new();
        for (v, m) in raw.into_iter().filter(|(_, m)| *m > 0) {
            match entries.iter_mut().find(|(w, _)| *w == v) {
                Some(e) => e.1 += m,
                None => entries.push((v, m)),
            }
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[(Scalar, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Numeric spectrum at the given parameters; coinciding eigenvalues merge.
    pub fn instantiate(&self, params: &FamilyParams) -> Result<Spectrum> {
        let assignment = eigen_assignment(params)?;
        let raw = self
            .entries
            .iter()
            .map(|(v, m)| Ok((Scalar::constant(v.evaluate(&assignment)?), *m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum::from_raw(raw))
    }

    /// `Π (t - e)^m`, for numeric spectra.
    pub fn char_poly(&self) -> Option<UPoly> {
        self.entries.iter().try_fold(UPoly::one(), |acc, (v, m)| {
            Some(acc.mul(&UPoly::linear(&v.constant_value()?).pow(*m)))
        })
    }

    /// `[ { "value": expr, "mult": int }, … ]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(v, m)| json!({ "value": v.to_string(), "mult": m }))
                .collect(),
        )
    }
}

fn eigen_assignment(params: &FamilyParams) -> Result<Assignment> {
    match params {
        FamilyParams::Type1 {
            eigen: Type1Eigen::Roots { lambda, mu },
            ..
        } => Ok([(Var::Lambda, lambda.clone()), (Var::Mu, mu.clone())].into()),
        FamilyParams::Type1 {
            eigen: Type1Eigen::Symmetric { .. },
            ..
        } => Err(Error::Parameter(
            "eigenvalues given only through e1, e2 are not rational".into(),
        )),
        FamilyParams::Type2 { lambda, .. } => Ok([(Var::Lambda, lambda.clone())].into()),
    }
}

/// Symbolic spectrum of a family.
pub fn expected_spectrum(f: &SolutionFamily) -> Spectrum {
    let raw = match f {
        SolutionFamily::Type1 { n, b_minus, b_plus } => vec![
            (Scalar::mu(), *b_minus),
            (Scalar::lambda(), b_plus - 1),
            (Scalar::zero(), n + 1 - b_minus - b_plus),
        ],
        SolutionFamily::Type2 { n, b, .. } => vec![(Scalar::lambda(), *b), (Scalar::zero(), n - b)],
    };
    Spectrum {
        entries: raw.into_iter().filter(|(_, m)| *m > 0).collect(),
    }
}

/// Expected characteristic polynomial at the given parameters. Handles
/// Type 1 instances given by `(e₁, e₂)` with irrational roots.
pub fn expected_char_poly(f: &SolutionFamily, params: &FamilyParams) -> Result<UPoly> {
    match (f, params) {
        (SolutionFamily::Type1 { n, b_minus, b_plus }, FamilyParams::Type1 { eigen, .. }) => {
            let quad = UPoly::new(vec![eigen.e2(), -eigen.e1(), Rational::one()]);
            let middle = b_plus - b_minus - 1;
            let lambda_part = match eigen {
                Type1Eigen::Roots { lambda, .. } => UPoly::linear(lambda).pow(middle),
                Type1Eigen::Symmetric { .. } if middle == 0 => UPoly::one(),
                Type1Eigen::Symmetric { .. } => {
                    return Err(Error::Parameter("this Type 1 family needs explicit λ and μ".into()))
                }
            };
            let zero_part = UPoly::linear(&Rational::zero()).pow(n + 1 - b_minus - b_plus);
            Ok(quad.pow(*b_minus).mul(&lambda_part).mul(&zero_part))
        }
        _ => expected_spectrum(f)
            .instantiate(params)?
            .char_poly()
            .ok_or_else(|| Error::Parameter("spectrum is not numeric".into())),
    }
}

/// `det(t·I - A)` by the Faddeev–LeVerrier recurrence, ascending coefficients.
pub fn char_poly(a: &RatMatrix) -> Result<UPoly> {
    if !a.is_square() {
        return Err(usage!("characteristic polynomial needs a square matrix"));
    }
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&RatMatrix::scalar(n, coeffs[n + 1 - k].clone()));
        coeffs[n - k] = -a.mul(&m).trace() / int(k as i64);
    }
    Ok(UPoly::new(coeffs))
}

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
pub fn rank(a: &RatMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows())
        .map(|r| {
            let row = a.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let cols = a.cols();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in (rank + 1)..rows.len() {
            for k in (c + 1)..cols {
                let v = &rows[rank][c] * &rows[r][k] - &rows[r][c] * &rows[rank][k];
                rows[r][k] = v / &prev;
            }
            rows[r][c] = BigInt::zero();
        }
        prev = rows[rank][c].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// `dim ker(A - e·I)`.
pub fn geometric_multiplicity(a: &RatMatrix, eigenvalue: &Rational) -> usize {
    let n = a.rows();
    n - rank(&a.sub(&RatMatrix::scalar(n, eigenvalue.clone())))
}

/// Whether `A` is diagonalizable over an algebraic closure: the product of
/// `(A - e·I)` over the distinct eigenvalues `e` vanishes. `A` must be a
/// character matrix (checked at `q = 2`).
pub fn is_semisimple(a: &RatMatrix) -> Result<bool> {
    match classify_matrix(a, &int(2)) {
        Ok(r) if r.family().is_some() => {}
        Ok(_) => return Err(usage!("matrix does not solve the reflection equation")),
        Err(e) => return Err(usage!("matrix cannot be classified: {e}")),
    }
    Ok(minimal_poly_is_squarefree(a))
}

/// The squarefree part of the characteristic polynomial annihilates `A`.
pub fn minimal_poly_is_squarefree(a: &RatMatrix) -> bool {
    let p = char_poly(a).expect("square");
    p.squarefree_part().eval_matrix(a).is_zero()
}
