//! Sparse multivariate polynomials with rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::matrix::Ring;
use crate::rational::{format_rational, Rational};

/// Exponent vector with trailing zeros trimmed.
pub type Exponents = Vec<u32>;

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_of(e: &Exponents, v: usize) -> u32 {
    e.get(v).copied().unwrap_or(0)
}

fn with_exp(e: &Exponents, v: usize, k: u32) -> Exponents {
    let mut e = e.clone();
    if e.len() <= v {
        e.resize(v + 1, 0);
    }
    e[v] = k;
    trim(e)
}

fn mul_exp(a: &Exponents, b: &Exponents) -> Exponents {
    let len = a.len().max(b.len());
    trim((0..len).map(|i| exp_of(a, i) + exp_of(b, i)).collect())
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: usize) -> Self {
        let mut p = Poly::default();
        p.add_term(with_exp(&Vec::new(), v, 1), Rational::one());
        p
    }

    pub fn monomial(e: Exponents, c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(trim(e), c);
        p
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_empty())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|e| e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, _)| v))
            .collect()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| exp_of(e, v)).max().unwrap_or(0)
    }

    /// Coefficient of `x_v^k`, as a polynomial in the other variables.
    pub fn coeff_in(&self, v: usize, k: u32) -> Poly {
        let mut out = Poly::default();
        for (e, c) in &self.terms {
            if exp_of(e, v) == k {
                out.add_term(with_exp(e, v, 0), c.clone());
            }
        }
        out
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Vec::new();
        };
        let mut g = first.clone();
        for e in it {
            for (i, k) in g.iter_mut().enumerate() {
                *k = (*k).min(exp_of(e, i));
            }
        }
        trim(g)
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Exponents) -> Poly {
        let mut out = Poly::default();
        for (e, c) in &self.terms {
            let len = e.len().max(m.len());
            let q: Exponents = (0..len).map(|i| exp_of(e, i) - exp_of(m, i)).collect();
            out.add_term(trim(q), c.clone());
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.terms.values().next_back() {
            Some(lead) => {
                let lead = lead.clone();
                Poly {
                    terms: self.terms.iter().map(|(e, c)| (e.clone(), c / &lead)).collect(),
                }
            }
            None => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul_ref(self))
    }

    /// `D^d · p(x_v = N / D)` where `d = deg_v p`.
    pub fn substitute(&self, v: usize, num: &Poly, den: &Poly) -> Poly {
        let d = self.degree_in(v);
        if d == 0 {
            return self.clone();
        }
        let mut out = Poly::zero();
        for k in 0..=d {
            let c = self.coeff_in(v, k);
            if c.is_zero() {
                continue;
            }
            out += &c.mul_ref(&num.pow(k)).mul_ref(&den.pow(d - k));
        }
        out
    }

    pub fn eval(&self, values: &BTreeMap<usize, Rational>) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    let x = values.get(&v)?;
                    for _ in 0..k {
                        t *= x;
                    }
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Text form with variables named by `name`.
    pub fn display_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mut factors: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| if k == 1 { name(v) } else { format!("{}^{k}", name(v)) })
                    .collect();
                if factors.is_empty() || !c.is_one() {
                    factors.insert(0, format_rational(c));
                }
                factors.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|v| format!("v{v}")))
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        self.mul_ref(&rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &'a Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a Poly> for Poly {
    fn sub_assign(&mut self, rhs: &'a Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Ring for Poly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Poly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(mul_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(v: usize) -> Poly {
        Poly::var(v)
    }

    fn c(v: i64) -> Poly {
        Poly::constant(int(v))
    }

    #[test]
    fn arithmetic_cancels() {
        let p = (x(0) + x(1)) * (x(0) - x(1));
        let q = x(0) * x(0) - x(1) * x(1);
        assert_eq!(p, q);
        assert!((p - q).is_zero());
    }

    #[test]
    fn content_and_division() {
        let p = x(0) * x(0) * x(2) + x(0) * x(2) * x(2);
        assert_eq!(p.monomial_content(), vec![1, 0, 1]);
        assert_eq!(p.div_monomial(&vec![1, 0, 1]), x(0) + x(2));
    }

    #[test]
    fn substitution_clears_denominator() {
        // x0^2 - x1 at x0 = x2 / x3 gives x2^2 - x1 x3^2
        let p = x(0) * x(0) - x(1);
        let s = p.substitute(0, &x(2), &x(3));
        assert_eq!(s, x(2) * x(2) - x(1) * x(3) * x(3));
    }

    #[test]
    fn evaluation() {
        let p = c(3) * x(0) * x(1) + c(-1);
        let vals = [(0, int(2)), (1, int(5))].into();
        assert_eq!(p.eval(&vals), Some(int(29)));
        assert_eq!(p.eval(&[(0, int(2))].into()), None);
    }
}
