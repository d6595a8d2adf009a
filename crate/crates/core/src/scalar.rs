//! Exact coefficient ring `Q[q, 1/q][λ, μ, y_1..y_n]`.
//!
//! A [`Scalar`] is a sparse sum of monomials with rational coefficients. The
//! exponent of `q` may be negative; all other exponents are nonnegative.
//! Monomials are kept in a fixed canonical order, so structural equality is
//! ring equality.
//!
//! The `n` carried by a scalar names its variable universe (`y_1..y_n`).
//! Scalars built without reference to any `y` variable live in universe 0,
//! which embeds in every other universe.
//!
//! Text form, used by the JSON interfaces and the CLI:
//!
//! ```text
//! expression = "0" | monomial (" + " monomial)*
//! monomial   = coeff ("*" factor)* | factor ("*" factor)*
//! coeff      = integer | integer "/" positive-integer
//! factor     = var | var "^" nonzero-integer
//! var        = "q" | "l" | "m" | "y1" | ... | "yN"
//! ```
//!
//! A coefficient of exactly 1 is omitted in front of factors.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{usage, Error, Result};
use crate::matrix::Ring;
use crate::rational::{format_rational, parse_rational, Rational};

/// A ring variable, in canonical variable order `y1 < … < yn < l < m < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `y_i`, 1-based.
    Y(usize),
    Lambda,
    Mu,
    Q,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Y(i) => write!(f, "y{i}"),
            Var::Lambda => f.write_str("l"),
            Var::Mu => f.write_str("m"),
            Var::Q => f.write_str("q"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Var::Q),
            "l" => Ok(Var::Lambda),
            "m" => Ok(Var::Mu),
            _ => {
                let idx = s
                    .strip_prefix('y')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && !d.starts_with('0'))
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown variable {s:?}")))?;
                Ok(Var::Y(idx))
            }
        }
    }
}

/// Values for variables, used by [`Scalar::evaluate`].
pub type Assignment = BTreeMap<Var, Rational>;

/// Exponent vector. `y` has its trailing zeros trimmed so the key does not
/// depend on the universe size.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    y: Vec<u32>,
    l: u32,
    m: u32,
    q: i32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(var: Var, exp: i32) -> Self {
        let mut mono = Self::default();
        mono.set(var, exp);
        mono
    }

    pub fn exponent(&self, var: Var) -> i32 {
        match var {
            Var::Y(i) => self.y.get(i - 1).copied().unwrap_or(0) as i32,
            Var::Lambda => self.l as i32,
            Var::Mu => self.m as i32,
            Var::Q => self.q,
        }
    }

    fn set(&mut self, var: Var, exp: i32) {
        match var {
            Var::Y(i) => {
                assert!(i >= 1, "y variables are 1-based");
                if self.y.len() < i {
                    self.y.resize(i, 0);
                }
                self.y[i - 1] = u32::try_from(exp).expect("negative y exponent");
                self.trim();
            }
            Var::Lambda => self.l = u32::try_from(exp).expect("negative l exponent"),
            Var::Mu => self.m = u32::try_from(exp).expect("negative m exponent"),
            Var::Q => self.q = exp,
        }
    }

    fn trim(&mut self) {
        while self.y.last() == Some(&0) {
            self.y.pop();
        }
    }

    pub fn degree(&self) -> i64 {
        self.y.iter().map(|&e| e as i64).sum::<i64>() + self.l as i64 + self.m as i64 + self.q as i64
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        let ys = self
            .y
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::Y(i + 1), e as i32));
        let rest = [(Var::Lambda, self.l as i32), (Var::Mu, self.m as i32), (Var::Q, self.q)];
        ys.chain(rest.into_iter().filter(|&(_, e)| e != 0))
    }

    pub fn max_y(&self) -> usize {
        self.y.len()
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        let len = self.y.len().max(rhs.y.len());
        let y = (0..len)
            .map(|i| self.y.get(i).copied().unwrap_or(0) + rhs.y.get(i).copied().unwrap_or(0))
            .collect();
        Monomial {
            y,
            l: self.l + rhs.l,
            m: self.m + rhs.m,
            q: self.q + rhs.q,
        }
    }
}

// Print order: higher total degree first, then lexicographically along
// y1..yn, l, m, q with the larger exponent first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let len = self.y.len().max(other.y.len());
            for i in 0..len {
                let a = self.y.get(i).copied().unwrap_or(0);
                let b = other.y.get(i).copied().unwrap_or(0);
                if a != b {
                    return b.cmp(&a);
                }
            }
            other
                .l
                .cmp(&self.l)
                .then(other.m.cmp(&self.m))
                .then(other.q.cmp(&self.q))
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the exact coefficient ring.
#[derive(Clone, Debug)]
pub struct Scalar {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

fn join_universe(a: usize, b: usize) -> Result<usize> {
    if a == 0 || b == 0 || a == b {
        Ok(a.max(b))
    } else {
        Err(usage!(
            "scalars over different variable universes (n = {a} and n = {b})"
        ))
    }
}

impl Scalar {
    pub fn constant(value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(), value);
        }
        Scalar { n: 0, terms }
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(crate::rational::int(v))
    }

    pub fn from_monomial(mono: Monomial, coeff: Rational) -> Self {
        let mut s = Scalar {
            n: mono.max_y(),
            terms: BTreeMap::new(),
        };
        if !coeff.is_zero() {
            s.terms.insert(mono, coeff);
        }
        s
    }

    /// The variable `var` in universe `n`; `y_i` requires `1 <= i <= n`.
    pub fn var(n: usize, var: Var) -> Result<Self> {
        if let Var::Y(i) = var {
            if i == 0 || i > n {
                return Err(usage!("y{i} is outside the universe y1..y{n}"));
            }
        }
        Ok(Self::from_monomial(Monomial::of(var, 1), Rational::one()).in_universe(n))
    }

    pub fn q() -> Self {
        Self::from_monomial(Monomial::of(Var::Q, 1), Rational::one())
    }

    pub fn q_inv() -> Self {
        Self::from_monomial(Monomial::of(Var::Q, -1), Rational::one())
    }

    /// `ω = q - 1/q`.
    pub fn omega() -> Self {
        Self::q() - Self::q_inv()
    }

    pub fn lambda() -> Self {
        Self::from_monomial(Monomial::of(Var::Lambda, 1), Rational::one())
    }

    pub fn mu() -> Self {
        Self::from_monomial(Monomial::of(Var::Mu, 1), Rational::one())
    }

    pub fn y(n: usize, i: usize) -> Result<Self> {
        Self::var(n, Var::Y(i))
    }

    /// Re-tags the variable universe. Panics if a `y` index exceeds `n`.
    pub fn in_universe(mut self, n: usize) -> Self {
        let max = self.max_y();
        assert!(max <= n, "y{max} does not fit universe n = {n}");
        self.n = n;
        self
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn max_y(&self) -> usize {
        self.terms.keys().map(Monomial::max_y).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.factors().map(|(v, _)| v)).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant()
            .then(|| self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero))
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        let mut out = Scalar {
            n: join_universe(self.n, rhs.n)?,
            terms: self.terms.clone(),
        };
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_add(&-rhs.clone())
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        let mut out = Scalar {
            n: join_universe(self.n, rhs.n)?,
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Scalar {
        if k.is_zero() {
            return Scalar {
                n: self.n,
                terms: BTreeMap::new(),
            };
        }
        Scalar {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one().in_universe(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites `y_i * y_j -> -λμ` for every pair `{i, j}` in `rel`.
    pub fn reduce(&self, rel: &PairRelations) -> Scalar {
        let mut out = Scalar {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (mono, coeff) in &self.terms {
            let mut mono = mono.clone();
            let mut coeff = coeff.clone();
            for &(i, j) in rel.pairs() {
                let k = mono.exponent(Var::Y(i)).min(mono.exponent(Var::Y(j)));
                if k > 0 {
                    mono.set(Var::Y(i), mono.exponent(Var::Y(i)) - k);
                    mono.set(Var::Y(j), mono.exponent(Var::Y(j)) - k);
                    mono.l += k as u32;
                    mono.m += k as u32;
                    if k % 2 == 1 {
                        coeff = -coeff;
                    }
                }
            }
            out.add_term(mono, coeff);
        }
        out
    }

    /// Exact value at `assignment`. Every variable of `self` must be assigned,
    /// and `q` must not be assigned zero.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rational> {
        if assignment.get(&Var::Q).is_some_and(Zero::is_zero) {
            return Err(Error::Evaluation("q must be nonzero".into()));
        }
        let mut total = Rational::zero();
        for (mono, coeff) in &self.terms {
            let mut value = coeff.clone();
            for (var, exp) in mono.factors() {
                let base = assignment
                    .get(&var)
                    .ok_or_else(|| Error::Evaluation(format!("no value for variable {var}")))?;
                value *= rational_pow(base, exp);
            }
            total += value;
        }
        Ok(total)
    }

    /// Replaces every occurrence of `var` (not `q`) by `value`.
    pub fn substitute(&self, var: Var, value: &Scalar) -> Result<Scalar> {
        if var == Var::Q {
            return Err(usage!("substitution for q is not supported"));
        }
        let n = join_universe(self.n, value.n)?;
        let mut out = Scalar::zero().in_universe(n);
        for (mono, coeff) in &self.terms {
            let e = mono.exponent(var);
            let mut rest = mono.clone();
            rest.set(var, 0);
            let term = Scalar::from_monomial(rest, coeff.clone()).in_universe(n);
            out = &out + &(&term * &value.pow(e as u32));
        }
        Ok(out)
    }

    /// Parses the canonical text form; the universe is the largest `y` index.
    pub fn parse(text: &str) -> Result<Scalar> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut out = Scalar::zero();
        for part in text.split('+') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("empty monomial in {text:?}")));
            }
            let mut coeff = Rational::one();
            let mut mono = Monomial::one();
            for (k, tok) in part.split('*').map(str::trim).enumerate() {
                if k == 0 && tok.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
                    coeff = parse_rational(tok)?;
                    continue;
                }
                let (name, exp) = match tok.split_once('^') {
                    None => (tok, 1),
                    Some((name, e)) => {
                        let e: i32 = e
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                        if e == 0 {
                            return Err(Error::Parse(format!("zero exponent in {tok:?}")));
                        }
                        (name, e)
                    }
                };
                let var: Var = name.parse()?;
                if exp < 0 && var != Var::Q {
                    return Err(Error::Parse(format!("negative exponent on {var}")));
                }
                mono = mono.mul(&Monomial::of(var, exp));
            }
            out.add_term(mono, coeff);
        }
        let n = out.max_y();
        Ok(out.in_universe(n))
    }

    /// Parses and checks that all `y` indices fit universe `n`.
    pub fn parse_in(text: &str, n: usize) -> Result<Scalar> {
        let s = Self::parse(text)?;
        if s.max_y() > n {
            return Err(usage!("expression {text:?} uses y{} but n = {n}", s.max_y()));
        }
        Ok(s.in_universe(n))
    }

    /// Canonical text form; `parse(format_canonical(s)) == s`.
    pub fn format_canonical(&self) -> String {
        self.to_string()
    }
}

fn rational_pow(base: &Rational, exp: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let factors: Vec<String> = mono
                .factors()
                .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                f.write_str(&format_rational(coeff))?;
            } else if coeff.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(coeff), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}

impl From<Rational> for Scalar {
    fn from(value: Rational) -> Self {
        Scalar::constant(value)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar {
            n: 0,
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::constant(Rational::one())
    }
}

// Operator impls panic on mismatched universes; the `checked_*` methods
// report the same condition as an error.
impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        self.n = join_universe(self.n, rhs.n).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &'a Scalar) {
        self.n = join_universe(self.n, rhs.n).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Ring for Scalar {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Disjoint index pairs `{i, j}`, each encoding the rewrite `y_i y_j -> -λμ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairRelations {
    pairs: Vec<(usize, usize)>,
}

impl PairRelations {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (i, j) in pairs {
            if i == 0 || j == 0 {
                return Err(Error::InvalidRelations("indices are 1-based".into()));
            }
            if i == j {
                return Err(Error::InvalidRelations(format!("pair {{{i}, {j}}} repeats an index")));
            }
            if !seen.insert(i) || !seen.insert(j) {
                return Err(Error::InvalidRelations(format!(
                    "pair {{{i}, {j}}} overlaps another pair"
                )));
            }
            out.push((i.min(j), i.max(j)));
        }
        out.sort_unstable();
        Ok(PairRelations { pairs: out })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| match () {
            _ if a == i => Some(b),
            _ if b == i => Some(a),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    #[test]
    fn q_times_inverse_is_one() {
        assert_eq!(Scalar::q() * Scalar::q_inv(), Scalar::one());
    }

    #[test]
    fn omega_squared() {
        let w = Scalar::omega();
        assert_eq!((&w * &w).to_string(), "q^2 + -2 + q^-2");
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!((Scalar::lambda() + Scalar::mu()).to_string(), "l + m");
        assert_eq!((-(Scalar::lambda() * Scalar::mu())).to_string(), "-1*l*m");
        assert_eq!(s("3/2*y1^2*q^-1 + y2").to_string(), "3/2*y1^2*q^-1 + y2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "l +", "y0", "x", "l^-1", "q^0", "1/0*l", "y01"] {
            assert!(Scalar::parse(bad).is_err(), "{bad:?} should not parse");
        }
        assert!(Scalar::parse_in("y3", 2).is_err());
    }

    #[test]
    fn mismatched_universe_is_usage_error() {
        let a = Scalar::y(2, 1).unwrap();
        let b = Scalar::y(3, 1).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::Usage(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Usage(_))));
        // universe 0 embeds everywhere
        assert!(a.checked_add(&Scalar::lambda()).is_ok());
    }

    #[test]
    fn reduce_pair_relation() {
        let rel = PairRelations::new([(1, 2)]).unwrap();
        let y1 = Scalar::y(2, 1).unwrap();
        let y2 = Scalar::y(2, 2).unwrap();
        let lm = Scalar::lambda() * Scalar::mu();
        assert_eq!((&y1 * &y2).reduce(&rel), -lm.clone());
        assert_eq!((&y1 * &y1).reduce(&rel), &y1 * &y1);
        let p = &y1 * &y2;
        assert_eq!((&p * &p).reduce(&rel), &lm * &lm);
    }

    #[test]
    fn overlapping_relations_rejected() {
        assert!(matches!(
            PairRelations::new([(1, 2), (2, 3)]),
            Err(Error::InvalidRelations(_))
        ));
        assert!(matches!(PairRelations::new([(1, 1)]), Err(Error::InvalidRelations(_))));
        assert_eq!(PairRelations::new([(3, 1)]).unwrap().partner(1), Some(3));
    }

    #[test]
    fn evaluation() {
        let mut a = Assignment::new();
        a.insert(Var::Q, int(2));
        assert_eq!(Scalar::omega().evaluate(&a).unwrap(), frac(3, 2));

        let mut a = Assignment::new();
        a.insert(Var::Lambda, int(1));
        a.insert(Var::Mu, int(-1));
        assert_eq!((Scalar::lambda() + Scalar::mu()).evaluate(&a).unwrap(), int(0));

        let e = s("y1*y2 + l*m");
        let a: Assignment = [
            (Var::Y(1), int(2)),
            (Var::Y(2), int(3)),
            (Var::Lambda, int(2)),
            (Var::Mu, int(-3)),
        ]
        .into();
        assert_eq!(e.evaluate(&a).unwrap(), int(0));
    }

    #[test]
    fn evaluation_errors() {
        let a: Assignment = [(Var::Q, int(0))].into();
        assert!(matches!(Scalar::q().evaluate(&a), Err(Error::Evaluation(_))));
        assert!(matches!(
            Scalar::lambda().evaluate(&Assignment::new()),
            Err(Error::Evaluation(_))
        ));
    }

    #[test]
    fn substitution() {
        let e = s("l^2 + y1*m");
        let out = e.substitute(Var::Lambda, &s("y1 + 1")).unwrap();
        assert_eq!(out, s("y1^2 + 2*y1 + 1 + y1*m"));
    }
}
