//! Case-splitting elimination for small polynomial systems.
//!
//! A branch carries the remaining equations together with variables known
//! to vanish, variables known not to vanish, and eliminated variables
//! `v = N / D` where `D` is a monomial in nonvanishing variables. Every
//! step replaces a branch by branches whose solution sets partition it, so
//! the final strata cover the solution set exactly.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Zero};
use rand::Rng;

use super::poly::{Exponents, Poly};
use crate::classification::random_nonzero;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `var = num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub var: usize,
    pub num: Poly,
    pub den: Poly,
}

/// A solved branch: the set of points with `zero` vanishing, `nonzero` and
/// every `ineqs` entry nonvanishing, and all bindings satisfied.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stratum {
    pub zero: BTreeSet<usize>,
    pub nonzero: BTreeSet<usize>,
    pub bindings: Vec<Binding>,
    pub ineqs: Vec<Poly>,
    pub free: Vec<usize>,
}

impl Stratum {
    pub fn bound(&self) -> BTreeSet<usize> {
        self.bindings.iter().map(|b| b.var).collect()
    }

    /// Exact membership test for a full assignment.
    pub fn contains(&self, values: &BTreeMap<usize, Rational>) -> bool {
        let get = |v: usize| values.get(&v).cloned().unwrap_or_else(Rational::zero);
        self.zero.iter().all(|&v| get(v).is_zero())
            && self.nonzero.iter().all(|&v| !get(v).is_zero())
            && self.bindings.iter().all(|b| {
                let lhs = b.den.eval(values).map(|d| d * get(b.var));
                lhs.is_some() && lhs == b.num.eval(values)
            })
            && self.ineqs.iter().all(|p| p.eval(values).is_some_and(|v| !v.is_zero()))
    }

    /// A random point, or `None` if `tries` attempts all hit a degenerate
    /// denominator or inequation.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        nvars: usize,
        rng: &mut R,
        tries: usize,
    ) -> Option<BTreeMap<usize, Rational>> {
        'attempt: for _ in 0..tries {
            let mut values: BTreeMap<usize, Rational> = BTreeMap::new();
            for &v in &self.zero {
                values.insert(v, Rational::zero());
            }
            for &v in &self.free {
                values.insert(v, random_nonzero(rng));
            }
            for b in self.bindings.iter().rev() {
                let den = b.den.eval(&values)?;
                if den.is_zero() {
                    continue 'attempt;
                }
                let num = b.num.eval(&values)?;
                values.insert(b.var, num / den);
            }
            if values.len() == nvars && self.contains(&values) {
                return Some(values);
            }
        }
        None
    }
}

#[derive(Clone, Debug, Default)]
struct Branch {
    eqs: Vec<Poly>,
    st: Stratum,
}

fn restricted(e: &Exponents, keep: &BTreeSet<usize>) -> Exponents {
    let mut e: Exponents = e
        .iter()
        .enumerate()
        .map(|(v, &k)| if keep.contains(&v) { k } else { 0 })
        .collect();
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_vars(e: &Exponents) -> impl Iterator<Item = usize> + '_ {
    e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, _)| v)
}

enum Step {
    Bind(Binding),
    Split(usize),
}

impl Branch {
    fn substitute(&mut self, v: usize, num: &Poly, den: &Poly) {
        for p in self.eqs.iter_mut().chain(self.st.ineqs.iter_mut()) {
            *p = p.substitute(v, num, den);
        }
    }

    fn set_zero(&mut self, v: usize) {
        self.st.zero.insert(v);
        self.substitute(v, &Poly::zero(), &Poly::one());
    }

    fn bind(&mut self, b: Binding) {
        self.substitute(b.var, &b.num, &b.den);
        self.st.bindings.push(b);
    }

    /// Strips nonvanishing monomial factors. Returns `false` when the
    /// branch is empty.
    fn normalize(&mut self) -> bool {
        loop {
            let mut ineqs = Vec::new();
            let mut grew = false;
            for p in std::mem::take(&mut self.st.ineqs) {
                if p.is_zero() {
                    return false;
                }
                let p = p
                    .div_monomial(&restricted(&p.monomial_content(), &self.st.nonzero))
                    .monic();
                if p.is_constant() {
                    continue;
                }
                if p.is_monomial() {
                    grew |= p.vars().into_iter().any(|v| self.st.nonzero.insert(v));
                    continue;
                }
                if !ineqs.contains(&p) {
                    ineqs.push(p);
                }
            }
            self.st.ineqs = ineqs;
            if !grew {
                break;
            }
        }
        let mut seen = HashSet::new();
        let mut eqs = Vec::new();
        for p in std::mem::take(&mut self.eqs) {
            if p.is_zero() {
                continue;
            }
            let p = p
                .div_monomial(&restricted(&p.monomial_content(), &self.st.nonzero))
                .monic();
            if p.is_constant() {
                return false;
            }
            if seen.insert(p.clone()) {
                eqs.push(p);
            }
        }
        eqs.sort_by_key(|p| p.num_terms());
        self.eqs = eqs;
        true
    }

    fn choose(&self) -> Result<Option<Step>> {
        let nz = &self.st.nonzero;
        let linear = |p: &Poly, v: usize| -> Option<(Poly, Poly)> {
            (p.degree_in(v) == 1).then(|| (p.coeff_in(v, 1), p.coeff_in(v, 0)))
        };
        let in_nz = |c: &Poly| c.vars().is_subset(nz);

        // constant coefficient on a possibly vanishing variable
        for p in &self.eqs {
            for v in p.vars().into_iter().filter(|v| !nz.contains(v)) {
                if let Some((c, rest)) = linear(p, v) {
                    if c.is_constant() {
                        return Ok(Some(Step::Bind(Binding {
                            var: v,
                            num: -rest,
                            den: c,
                        })));
                    }
                }
            }
        }
        // a factor that may vanish
        for p in &self.eqs {
            if let Some(v) = exp_vars(&p.monomial_content()).find(|v| !nz.contains(v)) {
                return Ok(Some(Step::Split(v)));
            }
        }
        // monomial coefficient in nonvanishing variables
        for p in &self.eqs {
            for v in p.vars().into_iter().filter(|v| !nz.contains(v)) {
                if let Some((c, rest)) = linear(p, v) {
                    if c.is_monomial() && in_nz(&c) {
                        return Ok(Some(Step::Bind(Binding {
                            var: v,
                            num: -rest,
                            den: c,
                        })));
                    }
                }
            }
        }
        // monomial coefficient that may vanish
        for p in &self.eqs {
            for v in p.vars() {
                if let Some((c, _)) = linear(p, v) {
                    if c.is_monomial() {
                        if let Some(u) = c.vars().into_iter().find(|u| !nz.contains(u)) {
                            return Ok(Some(Step::Split(u)));
                        }
                    }
                }
            }
        }
        // nonvanishing variable: its value must stay nonzero
        for p in &self.eqs {
            for v in p.vars().into_iter().filter(|v| nz.contains(v)) {
                if let Some((c, rest)) = linear(p, v) {
                    if c.is_monomial() && in_nz(&c) {
                        return Ok(Some(Step::Bind(Binding {
                            var: v,
                            num: -rest,
                            den: c,
                        })));
                    }
                }
            }
        }
        match self.eqs.first() {
            None => Ok(None),
            Some(p) => Err(Error::Unsupported(format!("no elimination step applies to {p:?}"))),
        }
    }
}

/// Solves `eqs = 0` over `nvars` variables with `nonzero` pinned away from
/// zero. Free variables of the result are all split into vanishing and
/// nonvanishing cases.
pub fn solve(nvars: usize, eqs: Vec<Poly>, nonzero: BTreeSet<usize>) -> Result<Vec<Stratum>> {
    let mut stack = vec![Branch {
        eqs,
        st: Stratum {
            nonzero,
            ..Stratum::default()
        },
    }];
    let mut out = Vec::new();
    while let Some(mut br) = stack.pop() {
        if !br.normalize() {
            continue;
        }
        match br.choose()? {
            Some(Step::Bind(b)) if b.num.is_zero() => {
                if !br.st.nonzero.contains(&b.var) {
                    br.set_zero(b.var);
                    stack.push(br);
                }
            }
            Some(Step::Bind(b)) => {
                if br.st.nonzero.contains(&b.var) {
                    br.st.ineqs.push(b.num.clone());
                }
                br.bind(b);
                stack.push(br);
            }
            Some(Step::Split(v)) => {
                let mut nonvanishing = br.clone();
                nonvanishing.st.nonzero.insert(v);
                stack.push(nonvanishing);
                br.set_zero(v);
                stack.push(br);
            }
            None => {
                let bound = br.st.bound();
                let undecided =
                    (0..nvars).find(|v| !bound.contains(v) && !br.st.zero.contains(v) && !br.st.nonzero.contains(v));
                if let Some(v) = undecided {
                    let mut nonvanishing = br.clone();
                    nonvanishing.st.nonzero.insert(v);
                    stack.push(nonvanishing);
                    br.set_zero(v);
                    stack.push(br);
                    continue;
                }
                br.st.free = (0..nvars)
                    .filter(|v| !bound.contains(v) && !br.st.zero.contains(v))
                    .collect();
                out.push(br.st);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn x(v: usize) -> Poly {
        Poly::var(v)
    }

    #[test]
    fn quadratic_splits() {
        // x0 (x0 - x1) = 0
        let strata = solve(2, vec![x(0) * (x(0) - x(1))], BTreeSet::new()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut saw_equal = false;
        let mut saw_zero = false;
        for st in &strata {
            let p = st.sample(2, &mut rng, 20).unwrap();
            assert!(p[&0].is_zero() || p[&0] == p[&1]);
            saw_zero |= p[&0].is_zero();
            saw_equal |= !p[&0].is_zero();
        }
        assert!(saw_zero && saw_equal);
    }

    #[test]
    fn nonvanishing_product() {
        // x0 x1 + 1 = 0 with both nonzero: x0 = -1 / x1
        let strata = solve(2, vec![x(0) * x(1) + Poly::one()], [0, 1].into()).unwrap();
        assert_eq!(strata.len(), 1);
        let vals = [(0, int(2)), (1, crate::rational::frac(-1, 2))].into();
        assert!(strata[0].contains(&vals));
        assert!(!strata[0].contains(&[(0, int(2)), (1, int(1))].into()));
    }

    #[test]
    fn infeasible_system() {
        let strata = solve(1, vec![x(0)], [0].into()).unwrap();
        assert!(strata.is_empty());
    }

    #[test]
    fn irreducible_quadratic_is_unsupported() {
        let eq = x(0) * x(0) - Poly::constant(int(2));
        assert!(matches!(
            solve(1, vec![eq], BTreeSet::new()),
            Err(Error::Unsupported(_))
        ));
    }
}
