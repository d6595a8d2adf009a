//! The reflection equation rewritten entrywise as five groups of quadratic
//! equations in the matrix elements.
//!
//! Entries are written `A^α_β` with `A = Σ A^α_β e^β_α`, so `A^α_β` is the
//! element in row `β`, column `α` of the stored matrix. An off-diagonal
//! solution entry `y_i` sits at `A^{σ(i)}_i`.
//!
//! Groups (all indices 1-based, `s` the braid coefficients):
//!
//! * `eq1`: `A^m_i A^n_i = 0` and `A^i_m A^i_n = 0` for distinct `i, m, n`.
//! * `eq2`: `A^n_i A^j_m = 0` for `j≠m`, `m≠n`, `n≠i`, `(m-i)(n-j) < 0`.
//! * `eq3`: `(q - s_mi) A^i_i A^m_i = Σ_ν s_iν A^ν_i A^m_ν` and
//!   `(q - s_mi) A^i_i A^i_m = Σ_ν s_iν A^ν_m A^i_ν` for `i≠m`;
//!   `0 = Σ_ν s_iν A^ν_m A^n_ν` for `(m-i)(n-i) < 0`.
//! * `eq4`: `A^n_i A^i_m - Σ_ν s_iν A^ν_m A^n_ν = (s_ni - s_im) A^i_i A^n_m`
//!   for distinct `i, m, n`.
//! * `eq5`: `ω A^m_m A^i_i = Σ_ν s_iν A^ν_m A^m_ν - Σ_ν s_mν A^ν_i A^i_ν`
//!   for `i < m`.
//!
//! The left-hand coefficient in `eq3` is `q - s_mi`; with `q - s_im` the
//! system rejects genuine solutions such as `[[λ+μ, y₁], [y₂, 0]]`.

use std::fmt;

use num_traits::Zero;

use crate::braid::{re_residual_at, s_coeff, CharacterMatrix};
use crate::error::{usage, Result};
use crate::matrix::RatMatrix;
use crate::rational::{check_generic_q, Rational};
use crate::scalar::{Assignment, PairRelations, Scalar, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EqGroup {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
}

impl fmt::Display for EqGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            EqGroup::Eq1 => 1,
            EqGroup::Eq2 => 2,
            EqGroup::Eq3 => 3,
            EqGroup::Eq4 => 4,
            EqGroup::Eq5 => 5,
        };
        write!(f, "eq{k}")
    }
}

/// Group label, the line within the group (1-based), and named indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquationTag {
    pub group: EqGroup,
    pub line: u8,
    pub indices: Vec<(&'static str, usize)>,
}

impl fmt::Display for EquationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}(", self.group, self.line)?;
        for (k, (name, v)) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{name}={v}")?;
        }
        f.write_str(")")
    }
}

/// `A^upper_lower`, i.e. row `lower`, column `upper` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub upper: usize,
    pub lower: usize,
}

fn el(upper: usize, lower: usize) -> Element {
    Element { upper, lower }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticTerm {
    pub coeff: Scalar,
    pub left: Element,
    pub right: Element,
}

/// `Σ coeff · left · right = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReEquation {
    pub tag: EquationTag,
    pub terms: Vec<QuadraticTerm>,
}

impl ReEquation {
    fn numeric_coeffs(&self, q: &Rational) -> Result<Vec<Rational>> {
        let a: Assignment = [(Var::Q, q.clone())].into();
        self.terms.iter().map(|t| t.coeff.evaluate(&a)).collect()
    }

    /// Value at a numeric matrix and numeric `q`.
    pub fn evaluate_at(&self, a: &RatMatrix, q: &Rational) -> Result<Rational> {
        let coeffs = self.numeric_coeffs(q)?;
        let entry = |e: Element| &a[(e.lower - 1, e.upper - 1)];
        Ok(self
            .terms
            .iter()
            .zip(coeffs)
            .fold(Rational::zero(), |acc, (t, c)| acc + c * entry(t.left) * entry(t.right)))
    }

    /// Symbolic value at a character matrix, reduced by `rel`.
    pub fn evaluate_symbolic(&self, a: &CharacterMatrix, rel: &PairRelations) -> Scalar {
        let entry = |e: Element| &a.entries()[(e.lower - 1, e.upper - 1)];
        let mut acc = Scalar::zero();
        for t in &self.terms {
            acc += &(&(&t.coeff * entry(t.left)) * entry(t.right));
        }
        acc.reduce(rel)
    }
}

struct Builder {
    n: usize,
    q: Scalar,
    omega: Scalar,
    out: Vec<ReEquation>,
}

impl Builder {
    fn s(&self, i: usize, k: usize) -> Scalar {
        s_coeff(i, k, &self.q, &self.omega)
    }

    fn push(&mut self, group: EqGroup, line: u8, indices: Vec<(&'static str, usize)>, terms: Vec<QuadraticTerm>) {
        let terms = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        self.out.push(ReEquation {
            tag: EquationTag { group, line, indices },
            terms,
        });
    }

    fn term(coeff: Scalar, left: Element, right: Element) -> QuadraticTerm {
        QuadraticTerm { coeff, left, right }
    }

    /// `Σ_ν s_iν A^ν_a A^b_ν` scaled by `sign`.
    fn s_sum(&self, i: usize, a: usize, b: usize, sign: i64) -> Vec<QuadraticTerm> {
        let k = Scalar::from_int(sign);
        (1..=self.n)
            .map(|nu| Self::term(&k * &self.s(i, nu), el(nu, a), el(b, nu)))
            .collect()
    }
}

/// All equations for dimension `n`, grouped and in a fixed order. Empty for
/// `n = 1`.
pub fn extract_re_system(n: usize) -> Result<Vec<ReEquation>> {
    if n == 0 {
        return Err(usage!("dimension n must be at least 1"));
    }
    let mut b = Builder {
        n,
        q: Scalar::q(),
        omega: Scalar::omega(),
        out: Vec::new(),
    };
    let one = Scalar::from_int(1);
    let idx = 1..=n;

    for i in idx.clone() {
        for m in idx.clone() {
            for nn in idx.clone() {
                if i != m && m != nn && nn != i {
                    let ix = vec![("i", i), ("m", m), ("n", nn)];
                    b.push(
                        EqGroup::Eq1,
                        1,
                        ix.clone(),
                        vec![Builder::term(one.clone(), el(m, i), el(nn, i))],
                    );
                    b.push(
                        EqGroup::Eq1,
                        2,
                        ix,
                        vec![Builder::term(one.clone(), el(i, m), el(i, nn))],
                    );
                }
            }
        }
    }

    for i in idx.clone() {
        for j in idx.clone() {
            for m in idx.clone() {
                for nn in idx.clone() {
                    let opposite = (m as i64 - i as i64) * (nn as i64 - j as i64) < 0;
                    if j != m && m != nn && nn != i && opposite {
                        let ix = vec![("i", i), ("j", j), ("m", m), ("n", nn)];
                        b.push(
                            EqGroup::Eq2,
                            1,
                            ix,
                            vec![Builder::term(one.clone(), el(nn, i), el(j, m))],
                        );
                    }
                }
            }
        }
    }

    for i in idx.clone() {
        for m in idx.clone() {
            if i == m {
                continue;
            }
            let lead = &b.q - &b.s(m, i);
            let mut t1 = vec![Builder::term(lead.clone(), el(i, i), el(m, i))];
            t1.extend(b.s_sum(i, i, m, -1));
            b.push(EqGroup::Eq3, 1, vec![("i", i), ("m", m)], t1);
            let mut t2 = vec![Builder::term(lead, el(i, i), el(i, m))];
            t2.extend(b.s_sum(i, m, i, -1));
            b.push(EqGroup::Eq3, 2, vec![("i", i), ("m", m)], t2);
        }
    }
    for i in idx.clone() {
        for m in idx.clone() {
            for nn in idx.clone() {
                if (m as i64 - i as i64) * (nn as i64 - i as i64) < 0 {
                    let t = b.s_sum(i, m, nn, 1);
                    b.push(EqGroup::Eq3, 3, vec![("i", i), ("m", m), ("n", nn)], t);
                }
            }
        }
    }

    for i in idx.clone() {
        for m in idx.clone() {
            for nn in idx.clone() {
                if m != i && i != nn && nn != m {
                    let mut t = vec![Builder::term(one.clone(), el(nn, i), el(i, m))];
                    t.extend(b.s_sum(i, m, nn, -1));
                    let c = &b.s(nn, i) - &b.s(i, m);
                    t.push(Builder::term(-c, el(i, i), el(nn, m)));
                    b.push(EqGroup::Eq4, 1, vec![("i", i), ("m", m), ("n", nn)], t);
                }
            }
        }
    }

    for i in idx.clone() {
        for m in (i + 1)..=n {
            let mut t = vec![Builder::term(b.omega.clone(), el(m, m), el(i, i))];
            t.extend(b.s_sum(i, m, m, -1));
            t.extend(b.s_sum(m, i, i, 1));
            b.push(EqGroup::Eq5, 1, vec![("i", i), ("m", m)], t);
        }
    }

    Ok(b.out)
}

/// Whether the residual and the equation system both vanish at `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub residual_zero: bool,
    pub system_zero: bool,
}

pub fn system_equivalence_check(a: &RatMatrix, q: &Rational) -> Result<EquivalenceReport> {
    check_generic_q(q)?;
    let residual_zero = re_residual_at(a, q)?.is_zero();
    let system_zero = first_violated(a, q)?.is_none();
    Ok(EquivalenceReport {
        residual_zero,
        system_zero,
    })
}

/// The first equation, in system order, that `a` violates at `q`.
pub fn first_violated(a: &RatMatrix, q: &Rational) -> Result<Option<EquationTag>> {
    check_generic_q(q)?;
    if !a.is_square() || a.rows() == 0 {
        return Err(usage!("matrix must be square and nonempty"));
    }
    for eq in extract_re_system(a.rows())? {
        if !eq.evaluate_at(a, q)?.is_zero() {
            return Ok(Some(eq.tag));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::rational::int;

    fn num(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn n1_is_empty() {
        assert!(extract_re_system(1).unwrap().is_empty());
    }

    #[test]
    fn n2_groups() {
        let sys = extract_re_system(2).unwrap();
        let eq5: Vec<_> = sys.iter().filter(|e| e.tag.group == EqGroup::Eq5).collect();
        assert_eq!(eq5.len(), 1);
        assert_eq!(eq5[0].tag.indices, vec![("i", 1), ("m", 2)]);
        assert_eq!(sys.iter().filter(|e| e.tag.group == EqGroup::Eq3).count(), 4);
        assert!(sys.iter().all(|e| matches!(e.tag.group, EqGroup::Eq3 | EqGroup::Eq5)));
    }

    #[test]
    fn diag_1_2_violates_eq5() {
        let tag = first_violated(&num(&[&[1, 0], &[0, 2]]), &int(2)).unwrap().unwrap();
        assert_eq!(tag.group, EqGroup::Eq5);
        assert_eq!(tag.to_string(), "eq5.1(i=1,m=2)");
    }

    #[test]
    fn generic_a11_satisfies_every_equation() {
        let a = CharacterMatrix::new(
            Matrix::from_rows(vec![
                vec![Scalar::parse("l + m").unwrap(), Scalar::parse("y1").unwrap()],
                vec![Scalar::parse("y2").unwrap(), Scalar::zero()],
            ])
            .unwrap(),
        )
        .unwrap();
        let rel = PairRelations::new([(1, 2)]).unwrap();
        for eq in extract_re_system(2).unwrap() {
            assert!(eq.evaluate_symbolic(&a, &rel).is_zero(), "{}", eq.tag);
        }
    }

    #[test]
    fn equivalence_examples() {
        let both = |a: RatMatrix, q: i64| system_equivalence_check(&a, &int(q)).unwrap();
        assert_eq!(
            both(num(&[&[0, 1], &[1, 0]]), 2),
            EquivalenceReport {
                residual_zero: true,
                system_zero: true
            }
        );
        assert_eq!(
            both(num(&[&[1, 0], &[0, 2]]), 2),
            EquivalenceReport {
                residual_zero: false,
                system_zero: false
            }
        );
        assert_eq!(
            both(num(&[&[0, 1], &[0, 0]]), 3),
            EquivalenceReport {
                residual_zero: true,
                system_zero: true
            }
        );
        assert!(system_equivalence_check(&num(&[&[1]]), &int(-1)).is_err());
    }
}
