//! Independent re-derivation of the full solution set for `n = 2, 3`.
//!
//! Off-diagonal supports are enumerated as partial injections without
//! fixed points (at most one nonzero off-diagonal entry per row, and by the
//! transpose symmetry of the equation per column). Each support's residual
//! system is solved by [`solver::solve`] and the strata are compared with
//! the family catalog by sampling in both directions.

pub mod poly;
pub mod solver;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::braid::{braid_matrix_at, re_residual_at, re_residual_with};
use crate::classification::{classify_matrix, instantiate, sample_params, AdmissiblePair, SolutionFamily};
use crate::error::{usage, Result};
use crate::matrix::{Matrix, RatMatrix};
use crate::rational::{check_generic_q, format_rational, Rational};
use poly::Poly;
use solver::Stratum;

const SAMPLES_PER_COMPONENT: usize = 100;
const SAMPLES_PER_FAMILY: usize = 20;

/// Which matrix entries are unknowns, and whether a support restriction
/// was applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    /// Diagonal plus `(i, σ(i))` for a partial injection `σ`.
    Pattern(BTreeMap<usize, usize>),
    /// Every entry is an unknown.
    Unrestricted,
}

impl Support {
    /// Matrix position (0-based) and display name of every unknown.
    fn unknowns(&self, n: usize) -> Vec<((usize, usize), String)> {
        match self {
            Support::Pattern(sigma) => (1..=n)
                .map(|i| ((i - 1, i - 1), format!("x{i}")))
                .chain(sigma.iter().map(|(&i, &j)| ((i - 1, j - 1), format!("y{i}"))))
                .collect(),
            Support::Unrestricted => (0..n)
                .flat_map(|r| (0..n).map(move |c| ((r, c), format!("a{}_{}", r + 1, c + 1))))
                .collect(),
        }
    }

    fn pinned_nonzero(&self, n: usize) -> BTreeSet<usize> {
        match self {
            Support::Pattern(sigma) => (n..n + sigma.len()).collect(),
            Support::Unrestricted => BTreeSet::new(),
        }
    }
}

impl std::fmt::Display for Support {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Support::Unrestricted => f.write_str("unrestricted"),
            Support::Pattern(sigma) => {
                let parts: Vec<String> = sigma.iter().map(|(i, j)| format!("{i}->{j}")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// All partial injections `σ` of `[1, n]` without fixed points.
pub fn support_patterns(n: usize) -> Vec<BTreeMap<usize, usize>> {
    fn rec(
        i: usize,
        n: usize,
        used: &mut Vec<bool>,
        cur: &mut BTreeMap<usize, usize>,
        out: &mut Vec<BTreeMap<usize, usize>>,
    ) {
        if i > n {
            out.push(cur.clone());
            return;
        }
        rec(i + 1, n, used, cur, out);
        for j in 1..=n {
            if j != i && !used[j] {
                used[j] = true;
                cur.insert(i, j);
                rec(i + 1, n, used, cur, out);
                cur.remove(&i);
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut vec![false; n + 1], &mut BTreeMap::new(), &mut out);
    out
}

/// One stratum of the solution set on a fixed support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionComponent {
    pub n: usize,
    pub support: Support,
    positions: Vec<(usize, usize)>,
    names: Vec<String>,
    pub stratum: Stratum,
}

impl SolutionComponent {
    fn name(&self, v: usize) -> String {
        self.names[v].clone()
    }

    fn names_of<'a>(&self, vars: impl IntoIterator<Item = &'a usize>) -> Vec<String> {
        vars.into_iter().map(|&v| self.name(v)).collect()
    }

    /// Equalities `v = N / D` in text form.
    pub fn constraints(&self) -> Vec<String> {
        let name = |v: usize| self.name(v);
        self.stratum
            .bindings
            .iter()
            .map(|b| {
                let num = b.num.display_with(&name);
                if b.den.is_constant() && b.den == Poly::constant(Rational::from_integer(1.into())) {
                    format!("{} = {num}", name(b.var))
                } else {
                    format!("{} = ({num}) / ({})", name(b.var), b.den.display_with(&name))
                }
            })
            .collect()
    }

    /// Structure independent of `q`: support, vanishing, nonvanishing,
    /// eliminated and free unknowns.
    pub fn signature(&self) -> String {
        format!(
            "{} zero={:?} nonzero={:?} bound={:?} free={:?}",
            self.support,
            self.names_of(&self.stratum.zero),
            self.names_of(&self.stratum.nonzero),
            self.names_of(&self.stratum.bound()),
            self.names_of(&self.stratum.free),
        )
    }

    fn values_of(&self, a: &RatMatrix) -> Option<BTreeMap<usize, Rational>> {
        let n = self.n;
        let mut off_support = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|p| !self.positions.contains(p));
        if off_support.any(|(r, c)| !a[(r, c)].is_zero()) {
            return None;
        }
        Some(
            self.positions
                .iter()
                .enumerate()
                .map(|(v, &(r, c))| (v, a[(r, c)].clone()))
                .collect(),
        )
    }

    pub fn contains(&self, a: &RatMatrix) -> bool {
        a.rows() == self.n && self.values_of(a).is_some_and(|vals| self.stratum.contains(&vals))
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<RatMatrix> {
        let vals = self.stratum.sample(self.positions.len(), rng, 50)?;
        let mut m = RatMatrix::zeros(self.n, self.n);
        for (v, &(r, c)) in self.positions.iter().enumerate() {
            m[(r, c)] = vals[&v].clone();
        }
        Some(m)
    }

    pub fn to_json(&self) -> Value {
        let ineqs: Vec<String> = self
            .stratum
            .ineqs
            .iter()
            .map(|p| p.display_with(&|v| self.name(v)))
            .collect();
        json!({
            "support": self.support.to_string(),
            "zero": self.names_of(&self.stratum.zero),
            "nonzero": self.names_of(&self.stratum.nonzero),
            "constraints": self.constraints(),
            "inequations": ineqs,
            "free": self.names_of(&self.stratum.free),
        })
    }
}

/// Solves the residual system on one support at a fixed `q`.
pub fn solve_support(n: usize, q: &Rational, support: &Support) -> Result<Vec<SolutionComponent>> {
    check_generic_q(q)?;
    let unknowns = support.unknowns(n);
    let mut a: Matrix<Poly> = Matrix::zeros(n, n);
    for (v, &((r, c), _)) in unknowns.iter().enumerate() {
        a[(r, c)] = Poly::var(v);
    }
    let s = braid_matrix_at(n, q)?.map(|x| Poly::constant(x.clone()));
    let eqs: Vec<Poly> = re_residual_with(&a, &s)
        .entries()
        .map(|(_, _, p)| p.clone())
        .filter(|p| !p.is_zero())
        .collect();
    let strata = solver::solve(unknowns.len(), eqs, support.pinned_nonzero(n))?;
    let (positions, names): (Vec<_>, Vec<_>) = unknowns.into_iter().unzip();
    Ok(strata
        .into_iter()
        .map(|stratum| SolutionComponent {
            n,
            support: support.clone(),
            positions: positions.clone(),
            names: names.clone(),
            stratum,
        })
        .collect())
}

/// Components over all supports allowed by the one-entry-per-row rule.
pub fn solve_all(n: usize, q: &Rational) -> Result<Vec<SolutionComponent>> {
    if !(2..=3).contains(&n) {
        return Err(usage!("the oracle supports n = 2 and n = 3 only, got n = {n}"));
    }
    let mut out = Vec::new();
    for sigma in support_patterns(n) {
        out.extend(solve_support(n, q, &Support::Pattern(sigma))?);
    }
    Ok(out)
}

/// Components with every matrix entry unknown.
pub fn solve_unrestricted(n: usize, q: &Rational) -> Result<Vec<SolutionComponent>> {
    if !(2..=3).contains(&n) {
        return Err(usage!("the oracle supports n = 2 and n = 3 only, got n = {n}"));
    }
    solve_support(n, q, &Support::Unrestricted)
}

/// A component sample that no catalog family accounts for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Missing {
    pub component: SolutionComponent,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub n: usize,
    pub q: Rational,
    pub components: Vec<SolutionComponent>,
    pub missing: Vec<Missing>,
    /// Catalog families with an instance outside every component.
    pub extra: Vec<SolutionFamily>,
}

impl OracleReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "q": format_rational(&self.q),
            "components": self.components.iter().map(SolutionComponent::to_json).collect::<Vec<_>>(),
            "missing": self.missing.iter().map(|m| {
                let mut v = m.component.to_json();
                v["reason"] = Value::String(m.reason.clone());
                v
            }).collect::<Vec<_>>(),
            "extra": self.extra.iter().map(|f| serde_json::to_value(f).expect("family serializes")).collect::<Vec<_>>(),
        })
    }
}

fn check_component<R: Rng>(
    c: &SolutionComponent,
    q: &Rational,
    catalog: &[SolutionFamily],
    rng: &mut R,
) -> Result<Option<String>> {
    for _ in 0..SAMPLES_PER_COMPONENT {
        let Some(a) = c.sample(rng) else {
            return Ok(Some("no valid sample point found".into()));
        };
        if !re_residual_at(&a, q)?.is_zero() {
            return Ok(Some(format!("sample {a:?} does not solve the equation")));
        }
        match classify_matrix(&a, q) {
            Ok(r) => match r.family() {
                Some(f) if catalog.contains(&f) => {}
                Some(f) => return Ok(Some(format!("sample classifies as {f}, which is not in the catalog"))),
                None => return Ok(Some("sample classified as not a character".into())),
            },
            Err(e) => return Ok(Some(format!("sample matches no family: {e}"))),
        }
    }
    Ok(None)
}

/// Compares oracle components with `catalog` at `q` in both directions.
pub fn compare_with_catalog(n: usize, q: &Rational, catalog: &[SolutionFamily]) -> Result<OracleReport> {
    let components = solve_all(n, q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + n as u64);
    let mut missing = Vec::new();
    for c in &components {
        if let Some(reason) = check_component(c, q, catalog, &mut rng)? {
            missing.push(Missing {
                component: c.clone(),
                reason,
            });
        }
    }
    let mut extra = Vec::new();
    for f in catalog {
        let covered = (0..SAMPLES_PER_FAMILY).all(|_| {
            let a = instantiate(f, &sample_params(f, &mut rng)).expect("sampled parameters are valid");
            components.iter().any(|c| c.contains(&a))
        });
        if !covered {
            extra.push(f.clone());
        }
    }
    Ok(OracleReport {
        n,
        q: q.clone(),
        components,
        missing,
        extra,
    })
}

/// Whether the support of `a` is an admissible pair's pattern.
pub fn support_is_admissible(a: &RatMatrix) -> bool {
    let n = a.rows();
    let mut sigma = BTreeMap::new();
    for r in 0..n {
        let off: Vec<usize> = (0..n).filter(|&c| c != r && !a[(r, c)].is_zero()).collect();
        match off.as_slice() {
            [] => {}
            [c] => {
                sigma.insert(r + 1, c + 1);
            }
            _ => return false,
        }
    }
    AdmissiblePair::new(n, sigma).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::enumerate_families;
    use crate::rational::{frac, int};

    #[test]
    fn pattern_counts() {
        // partial injections without fixed points
        assert_eq!(support_patterns(2).len(), 4);
        assert_eq!(support_patterns(3).len(), 1 + 6 + 9 + 2);
    }

    #[test]
    fn unrestricted_n2_agrees_with_catalog() {
        let q = int(3);
        let comps = solve_unrestricted(2, &q).unwrap();
        let catalog = enumerate_families(2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for c in &comps {
            assert_eq!(
                check_component(c, &q, &catalog, &mut rng).unwrap(),
                None,
                "{}",
                c.signature()
            );
        }
    }

    #[test]
    fn n2_complete() {
        let r = compare_with_catalog(2, &int(3), &enumerate_families(2)).unwrap();
        assert!(r.is_complete(), "{}", r.to_json());
    }

    #[test]
    fn sabotage_is_detected() {
        let catalog: Vec<_> = enumerate_families(2)
            .into_iter()
            .filter(|f| f.type_number() != 1)
            .collect();
        let r = compare_with_catalog(2, &int(3), &catalog).unwrap();
        assert!(!r.missing.is_empty());
        assert!(r
            .missing
            .iter()
            .all(|m| m.component.support.to_string() == "{1->2, 2->1}"));
    }

    #[test]
    fn structure_is_q_independent() {
        let sig = |q: Rational| -> Vec<String> {
            solve_all(2, &q)
                .unwrap()
                .iter()
                .map(SolutionComponent::signature)
                .collect()
        };
        assert_eq!(sig(int(2)), sig(int(3)));
        assert_eq!(sig(int(2)), sig(frac(5, 2)));
    }

    #[test]
    fn bad_n() {
        assert!(solve_all(4, &int(2)).is_err());
        assert!(solve_all(2, &int(1)).is_err());
    }

    #[test]
    fn n3_complete() {
        let r = compare_with_catalog(3, &int(2), &enumerate_families(3)).unwrap();
        assert!(r.is_complete(), "{}", r.to_json());
    }

    #[test]
    fn unrestricted_n3_agrees_with_catalog() {
        let q = int(2);
        let catalog = enumerate_families(3);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for c in &solve_unrestricted(3, &q).unwrap() {
            assert_eq!(
                check_component(c, &q, &catalog, &mut rng).unwrap(),
                None,
                "{}",
                c.signature()
            );
        }
    }

    #[test]
    fn two_entries_in_a_row_fail() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let mut a = RatMatrix::zeros(3, 3);
            for i in 0..3 {
                a[(i, i)] = crate::classification::random_nonzero(&mut rng);
            }
            a[(0, 1)] = crate::classification::random_nonzero(&mut rng);
            a[(0, 2)] = crate::classification::random_nonzero(&mut rng);
            assert!(!support_is_admissible(&a));
            assert!(!re_residual_at(&a, &int(2)).unwrap().is_zero());
        }
    }
}
