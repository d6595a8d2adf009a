//! The `U_q(gl(n))` R-matrix, its braid matrix `S = P R`, and the
//! reflection-equation residual `S A₂ S A₂ - A₂ S A₂ S` with `A₂ = 1 ⊗ A`.
//!
//! `V ⊗ V` uses the row-major basis `e^i ⊗ e^k ↦ n(i-1) + (k-1)` (0-based
//! storage index, 1-based `i, k`). Matrices act on column vectors, so the
//! matrix unit `e^i_j` has its single 1 in row `i`, column `j`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::matrix::{Matrix, RatMatrix, Ring};
use crate::rational::{check_generic_q, Rational};
use crate::scalar::{Assignment, PairRelations, Scalar, Var};

/// The diagonal coefficient `s_ik` of the braid matrix: `ω` above the
/// diagonal (`i < k`), `q` on it, `0` below. Indices are 1-based.
pub fn s_coeff<R: Ring>(i: usize, k: usize, q: &R, omega: &R) -> R {
    match i.cmp(&k) {
        std::cmp::Ordering::Less => omega.clone(),
        std::cmp::Ordering::Equal => q.clone(),
        std::cmp::Ordering::Greater => R::zero(),
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        Err(usage!("dimension n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `S = Σ s_ik e^i_i ⊗ e^k_k + Σ_{i≠j} e^i_j ⊗ e^j_i` over any ring, given
/// values for `q` and `ω`.
pub fn braid_matrix_with<R: Ring>(n: usize, q: &R, omega: &R) -> Matrix<R> {
    let mut s = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for k in 0..n {
            s[(i * n + k, i * n + k)] = s_coeff(i, k, q, omega);
            if i != k {
                s[(i * n + k, k * n + i)] = R::one();
            }
        }
    }
    s
}

/// The tensor flip `P(e^i ⊗ e^k) = e^k ⊗ e^i`.
pub fn flip<R: Ring>(n: usize) -> Matrix<R> {
    let mut p = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for k in 0..n {
            p[(k * n + i, i * n + k)] = R::one();
        }
    }
    p
}

/// The image of the universal R-matrix in the vector representation:
/// `R = q Σ e^i_i⊗e^i_i + Σ_{i≠j} e^i_i⊗e^j_j + ω Σ_{i<k} e^k_i⊗e^i_k`.
pub fn build_r(n: usize) -> Result<Matrix<Scalar>> {
    check_dim(n)?;
    let mut r = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            r[(i * n + j, i * n + j)] = if i == j { Scalar::q() } else { Scalar::one() };
        }
    }
    for i in 0..n {
        for k in (i + 1)..n {
            // e^k_i ⊗ e^i_k sends e^i ⊗ e^k to e^k ⊗ e^i
            r[(k * n + i, i * n + k)] = Scalar::omega();
        }
    }
    Ok(r)
}

/// The braid matrix `S` with symbolic `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidOperator {
    n: usize,
    matrix: Matrix<Scalar>,
}

impl BraidOperator {
    pub fn build(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(BraidOperator {
            n,
            matrix: braid_matrix_with(n, &Scalar::q(), &Scalar::omega()),
        })
    }

    /// Wraps an arbitrary `n² × n²` matrix, e.g. a deliberately broken one.
    pub fn from_matrix(n: usize, matrix: Matrix<Scalar>) -> Result<Self> {
        check_dim(n)?;
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(usage!("braid operator for n = {n} must be {0}x{0}", n * n));
        }
        Ok(BraidOperator { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.matrix
    }

    /// Specializes `q` to a generic rational value.
    pub fn at(&self, q: &Rational) -> Result<RatMatrix> {
        check_generic_q(q)?;
        let a: Assignment = [(Var::Q, q.clone())].into();
        self.matrix.try_map(|s| s.evaluate(&a))
    }
}

/// `S` with `q` specialized.
pub fn braid_matrix_at(n: usize, q: &Rational) -> Result<RatMatrix> {
    check_dim(n)?;
    check_generic_q(q)?;
    Ok(braid_matrix_with(n, q, &(q - q.recip())))
}

/// `S₁₂ S₂₃ S₁₂ - S₂₃ S₁₂ S₂₃` on `V^{⊗3}`.
pub fn braid_residual(s: &BraidOperator) -> Matrix<Scalar> {
    braid_residual_with(s.matrix(), s.n())
}

pub fn braid_residual_with<R: Ring>(s: &Matrix<R>, n: usize) -> Matrix<R> {
    let id = Matrix::identity(n);
    let s12 = s.kron(&id);
    let s23 = id.kron(s);
    let lhs = s12.mul(&s23).mul(&s12);
    let rhs = s23.mul(&s12).mul(&s23);
    lhs.sub(&rhs)
}

/// `(S - q)(S + 1/q)`.
pub fn hecke_residual(s: &BraidOperator) -> Matrix<Scalar> {
    let dim = s.n() * s.n();
    let a = s.matrix().sub(&Matrix::scalar(dim, Scalar::q()));
    let b = s.matrix().add(&Matrix::scalar(dim, Scalar::q_inv()));
    a.mul(&b)
}

/// Candidate or solution matrix `A` with symbolic entries. A solution places
/// `x_i` at `(i, i)` and `y_j` at `(j, σ(j))`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterMatrix {
    n: usize,
    entries: Matrix<Scalar>,
}

impl CharacterMatrix {
    pub fn new(entries: Matrix<Scalar>) -> Result<Self> {
        if !entries.is_square() || entries.rows() == 0 {
            return Err(usage!("character matrix must be square and nonempty"));
        }
        let n = entries.rows();
        let entries = entries.try_map(|s| {
            if s.max_y() > n {
                Err(usage!("entry {s} uses a y index beyond n = {n}"))
            } else {
                Ok(s.clone().in_universe(n))
            }
        })?;
        Ok(CharacterMatrix { n, entries })
    }

    pub fn from_numeric(a: &RatMatrix) -> Result<Self> {
        Self::new(a.map(|v| Scalar::constant(v.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &Matrix<Scalar> {
        &self.entries
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<RatMatrix> {
        self.entries.try_map(|s| s.evaluate(assignment))
    }

    /// Numeric matrix when every entry is a constant.
    pub fn to_numeric(&self) -> Option<RatMatrix> {
        self.entries.try_map(|s| s.constant_value().ok_or(())).ok()
    }
}

/// `S A₂ S A₂ - A₂ S A₂ S` over any ring.
pub fn re_residual_with<R: Ring>(a: &Matrix<R>, s: &Matrix<R>) -> Matrix<R> {
    let n = a.rows();
    let a2 = Matrix::identity(n).kron(a);
    let sa = s.mul(&a2);
    let a2s = a2.mul(s);
    sa.mul(&sa).sub(&a2s.mul(&a2s))
}

/// Reflection-equation residual with every entry reduced by `rel`.
pub fn re_residual(a: &CharacterMatrix, s: &BraidOperator, rel: &PairRelations) -> Result<Matrix<Scalar>> {
    if a.n() != s.n() {
        return Err(usage!("matrix has n = {} but braid operator has n = {}", a.n(), s.n()));
    }
    // Reduce the factors first so intermediate expressions stay small.
    let entries = a.entries().map(|v| v.reduce(rel));
    Ok(re_residual_with(&entries, s.matrix()).map(|v| v.reduce(rel)))
}

/// Residual of a numeric matrix at a generic rational `q`.
pub fn re_residual_at(a: &RatMatrix, q: &Rational) -> Result<RatMatrix> {
    if !a.is_square() || a.rows() == 0 {
        return Err(usage!("matrix must be square and nonempty"));
    }
    let s = braid_matrix_at(a.rows(), q)?;
    Ok(re_residual_with(a, &s))
}

pub fn is_character_at(a: &RatMatrix, q: &Rational) -> Result<bool> {
    Ok(re_residual_at(a, q)?.is_zero())
}

/// JSON form `{ "n": int, "rows": [[expr, …], …] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_scalars(m: &Matrix<Scalar>) -> Self {
        MatrixJson {
            n: m.rows(),
            rows: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }

    pub fn from_numeric(m: &RatMatrix) -> Self {
        Self::from_scalars(&m.map(|v| Scalar::constant(v.clone())))
    }

    /// Parses entries; the matrix must be `n × n`. Rows of an `S` dump are
    /// `n² × n²` and go through [`MatrixJson::to_scalars_sized`].
    pub fn to_scalars(&self) -> Result<Matrix<Scalar>> {
        self.to_scalars_sized(self.n, self.n)
    }

    pub fn to_scalars_sized(&self, dim: usize, y_universe: usize) -> Result<Matrix<Scalar>> {
        if self.rows.len() != dim || self.rows.iter().any(|r| r.len() != dim) {
            return Err(usage!("expected a {dim}x{dim} matrix for n = {}", self.n));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| Scalar::parse_in(e, y_universe))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    /// Numeric matrix; `q` in an entry is replaced by the given value.
    pub fn to_numeric(&self, q: Option<&Rational>) -> Result<RatMatrix> {
        let m = self.to_scalars()?;
        let mut assignment = Assignment::new();
        if let Some(q) = q {
            assignment.insert(Var::Q, q.clone());
        }
        m.try_map(|s| {
            s.evaluate(&assignment)
                .map_err(|_| Error::Usage(format!("entry {s} is not numeric")))
        })
    }
}
