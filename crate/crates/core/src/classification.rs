//! Admissible pairs, the two solution families, enumeration, counting,
//! instantiation, and classification of numeric matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid::{re_residual_at, CharacterMatrix};
use crate::error::{usage, Error, Result};
use crate::matrix::{Matrix, RatMatrix};
use crate::rational::{check_generic_q, format_rational, frac, rational_sqrt, Rational};
use crate::re_system::{first_violated, EquationTag};
use crate::scalar::{PairRelations, Scalar};

/// All `k`-element subsets of `[1, n]`, in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// A subset `Y ⊆ [1, n]` with a strictly decreasing injection `σ: Y → [1, n]`
/// that has no fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePair {
    n: usize,
    sigma: BTreeMap<usize, usize>,
}

/// Data derived from an admissible pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStats {
    pub y_minus: BTreeSet<usize>,
    pub y_plus: BTreeSet<usize>,
    /// Indices on which `σ` is an involution.
    pub y_zero: BTreeSet<usize>,
    pub b_minus: usize,
    pub b_plus: usize,
}

impl AdmissiblePair {
    pub fn new(n: usize, sigma: BTreeMap<usize, usize>) -> Result<Self> {
        if n == 0 {
            return Err(usage!("dimension n must be at least 1"));
        }
        let mut image = BTreeSet::new();
        let mut prev: Option<(usize, usize)> = None;
        for (&i, &j) in &sigma {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Error::Validation(format!("σ({i}) = {j} leaves [1, {n}]")));
            }
            if i == j {
                return Err(Error::Validation(format!("σ has a fixed point at {i}")));
            }
            if !image.insert(j) {
                return Err(Error::Validation(format!("σ is not injective at value {j}")));
            }
            if let Some((pi, pj)) = prev {
                if pj <= j {
                    return Err(Error::Validation(format!(
                        "σ is not decreasing: σ({pi}) = {pj}, σ({i}) = {j}"
                    )));
                }
            }
            prev = Some((i, j));
        }
        Ok(AdmissiblePair { n, sigma })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, BTreeMap::new())
    }

    /// The pair whose `σ` is the order-reversing bijection `Y → Z`.
    pub fn from_sets(n: usize, y: &[usize], z: &[usize]) -> Result<Self> {
        let ys: BTreeSet<usize> = y.iter().copied().collect();
        let zs: BTreeSet<usize> = z.iter().copied().collect();
        if ys.len() != y.len() || zs.len() != z.len() {
            return Err(Error::Validation("Y and Z must not repeat indices".into()));
        }
        if ys.len() != zs.len() {
            return Err(Error::Validation(format!(
                "|Y| = {} differs from |Z| = {}",
                ys.len(),
                zs.len()
            )));
        }
        Self::new(n, ys.into_iter().zip(zs.into_iter().rev()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, i: usize) -> Option<usize> {
        self.sigma.get(&i).copied()
    }

    pub fn mapping(&self) -> &BTreeMap<usize, usize> {
        &self.sigma
    }

    /// `Y`, ascending.
    pub fn domain(&self) -> Vec<usize> {
        self.sigma.keys().copied().collect()
    }

    /// `Z = σ(Y)`, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut z: Vec<usize> = self.sigma.values().copied().collect();
        z.sort_unstable();
        z
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// `σ(Y) = Y`.
    pub fn is_involutive(&self) -> bool {
        self.domain() == self.image()
    }

    /// `Y ∩ σ(Y) = ∅`.
    pub fn is_disjoint(&self) -> bool {
        self.sigma.values().all(|j| !self.sigma.contains_key(j))
    }

    pub fn stats(&self) -> PairStats {
        let y_minus: BTreeSet<usize> = self.sigma.iter().filter(|(i, j)| i < j).map(|(&i, _)| i).collect();
        let y_plus: BTreeSet<usize> = self.sigma.iter().filter(|(i, j)| i > j).map(|(&i, _)| i).collect();
        let y_zero = self
            .sigma
            .iter()
            .filter(|(i, j)| self.sigma.get(j) == Some(i))
            .map(|(&i, _)| i)
            .collect();
        if self.sigma.is_empty() {
            return PairStats {
                y_minus,
                y_plus,
                y_zero,
                b_minus: 0,
                b_plus: self.n + 1,
            };
        }
        let low = y_minus.iter().copied().chain(y_plus.iter().map(|i| self.sigma[i]));
        let high = y_plus.iter().copied().chain(y_minus.iter().map(|i| self.sigma[i]));
        let b_minus = low.max().unwrap_or(0);
        let b_plus = high.min().unwrap_or(self.n + 1);
        debug_assert!(b_minus < b_plus);
        PairStats {
            y_minus,
            y_plus,
            y_zero,
            b_minus,
            b_plus,
        }
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.sigma.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}->{j}")?;
        }
        write!(f, "}}")
    }
}

/// Every admissible pair for `n`, ordered by `|Y|`, then `Y`, then `Z`.
pub fn enumerate_admissible_pairs(n: usize) -> Vec<AdmissiblePair> {
    let mut out = Vec::new();
    for k in 0..=n {
        let subsets = subsets_of_size(n, k);
        for y in &subsets {
            for z in &subsets {
                if let Ok(p) = AdmissiblePair::from_sets(n, y, z) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Admissible pairs with domain `y` and image disjoint from it.
pub fn sigma_choices(n: usize, y: &[usize]) -> Vec<AdmissiblePair> {
    let ys: BTreeSet<usize> = y.iter().copied().collect();
    subsets_of_size(n, ys.len())
        .into_iter()
        .filter(|z| z.iter().all(|v| !ys.contains(v)))
        .filter_map(|z| AdmissiblePair::from_sets(n, y, &z).ok())
        .collect()
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of maps `σ: Y → [1, n] \ Y` for a fixed `Y` of size `k`:
/// `C(n - k, k)`, and 0 when `2k > n`.
pub fn count_sigma_choices(n: usize, k: usize) -> u128 {
    if 2 * k > n {
        0
    } else {
        binomial(n - k, k)
    }
}

/// One of the two solution families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub enum SolutionFamily {
    /// `σ(Y) = Y`: diagonal `λ+μ` on `[1, b₋]`, `λ` on `(b₋, b₊)`, `0` on
    /// `[b₊, n]`; `y_i y_σ(i) = -λμ ≠ 0`.
    Type1 { n: usize, b_minus: usize, b_plus: usize },
    /// `Y ∩ σ(Y) = ∅`: diagonal `λ` on `[1, b]`, `0` after; `y_i ≠ 0`.
    Type2 { n: usize, pair: AdmissiblePair, b: usize },
}

impl SolutionFamily {
    pub fn type1(n: usize, b_minus: usize, b_plus: usize) -> Result<Self> {
        if b_minus < 1 || b_minus >= b_plus || b_minus + b_plus > n + 1 {
            return Err(usage!(
                "Type 1 needs 1 <= b- < b+ and b- + b+ <= n + 1 (got n = {n}, b- = {b_minus}, b+ = {b_plus})"
            ));
        }
        Ok(SolutionFamily::Type1 { n, b_minus, b_plus })
    }

    pub fn type2(n: usize, y: &[usize], z: &[usize], b: usize) -> Result<Self> {
        let pair = AdmissiblePair::from_sets(n, y, z).map_err(|e| Error::Usage(e.to_string()))?;
        if !pair.is_disjoint() {
            return Err(usage!("Type 2 needs Y and Z disjoint"));
        }
        let st = pair.stats();
        if b < st.b_minus || b >= st.b_plus {
            return Err(usage!("Type 2 needs b in [{}, {}), got {b}", st.b_minus, st.b_plus));
        }
        Ok(SolutionFamily::Type2 { n, pair, b })
    }

    pub fn n(&self) -> usize {
        match self {
            SolutionFamily::Type1 { n, .. } | SolutionFamily::Type2 { n, .. } => *n,
        }
    }

    pub fn type_number(&self) -> u8 {
        match self {
            SolutionFamily::Type1 { .. } => 1,
            SolutionFamily::Type2 { .. } => 2,
        }
    }

    /// The support pattern of the family.
    pub fn pair(&self) -> AdmissiblePair {
        match self {
            SolutionFamily::Type1 { n, b_minus, b_plus } => {
                let (bm, bp) = (*b_minus, *b_plus);
                let sigma = (1..=bm).chain(bp..bp + bm).map(|i| (i, bp + bm - i)).collect();
                AdmissiblePair::new(*n, sigma).expect("Type 1 data yields an admissible pair")
            }
            SolutionFamily::Type2 { pair, .. } => pair.clone(),
        }
    }

    /// Indices whose `y` value is a free parameter. For Type 1 these are
    /// `[1, b₋]`; the partner `y_σ(i)` is bound by `y_i y_σ(i) = -λμ`.
    pub fn free_y(&self) -> Vec<usize> {
        match self {
            SolutionFamily::Type1 { b_minus, .. } => (1..=*b_minus).collect(),
            SolutionFamily::Type2 { pair, .. } => pair.domain(),
        }
    }

    /// Whether `(b₋, b₊)` holds an index, which pins `λ` as a diagonal value.
    pub fn has_middle(&self) -> bool {
        matches!(self, SolutionFamily::Type1 { b_minus, b_plus, .. } if b_minus + 1 < *b_plus)
    }

    /// Symbolic matrix and the pair relations it satisfies.
    pub fn symbolic(&self) -> (CharacterMatrix, PairRelations) {
        match self {
            SolutionFamily::Type1 { n, b_minus, b_plus } => type1_family(*n, *b_minus, *b_plus).expect("valid family"),
            SolutionFamily::Type2 { pair, b, .. } => {
                (type2_family_of(pair, *b).expect("valid family"), PairRelations::empty())
            }
        }
    }

    fn sort_key(&self) -> (u8, usize, usize, Vec<usize>, Vec<usize>) {
        match self {
            SolutionFamily::Type1 { b_minus, b_plus, .. } => (1, *b_minus, *b_plus, vec![], vec![]),
            SolutionFamily::Type2 { pair, b, .. } => (2, *b, 0, pair.domain(), pair.image()),
        }
    }
}

impl PartialOrd for SolutionFamily {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SolutionFamily {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionFamily::Type1 { n, b_minus, b_plus } => write!(f, "Type1(n={n}, b-={b_minus}, b+={b_plus})"),
            SolutionFamily::Type2 { n, pair, b } => {
                write!(f, "Type2(n={n}, Y={:?}, Z={:?}, b={b})", pair.domain(), pair.image())
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Type1Json {
    #[serde(rename = "type")]
    kind: u8,
    n: usize,
    b_minus: usize,
    b_plus: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Type2Json {
    #[serde(rename = "type")]
    kind: u8,
    n: usize,
    #[serde(rename = "Y")]
    y: Vec<usize>,
    #[serde(rename = "Z")]
    z: Vec<usize>,
    b: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FamilyJson {
    Type1(Type1Json),
    Type2(Type2Json),
}

impl From<SolutionFamily> for FamilyJson {
    fn from(f: SolutionFamily) -> Self {
        match f {
            SolutionFamily::Type1 { n, b_minus, b_plus } => FamilyJson::Type1(Type1Json {
                kind: 1,
                n,
                b_minus,
                b_plus,
            }),
            SolutionFamily::Type2 { n, pair, b } => FamilyJson::Type2(Type2Json {
                kind: 2,
                n,
                y: pair.domain(),
                z: pair.image(),
                b,
            }),
        }
    }
}

impl TryFrom<FamilyJson> for SolutionFamily {
    type Error = Error;

    fn try_from(j: FamilyJson) -> Result<Self> {
        match j {
            FamilyJson::Type1(t) if t.kind == 1 => SolutionFamily::type1(t.n, t.b_minus, t.b_plus),
            FamilyJson::Type2(t) if t.kind == 2 => SolutionFamily::type2(t.n, &t.y, &t.z, t.b),
            _ => Err(Error::Parse("family \"type\" does not match its fields".into())),
        }
    }
}

fn check_type1(n: usize, b_minus: usize, b_plus: usize) -> Result<()> {
    SolutionFamily::type1(n, b_minus, b_plus).map(|_| ())
}

/// Symbolic Type 1 matrix with `σ(i) = b₊ + b₋ - i`, plus the relations
/// `y_i y_σ(i) = -λμ` for `i ∈ [1, b₋]`.
pub fn type1_family(n: usize, b_minus: usize, b_plus: usize) -> Result<(CharacterMatrix, PairRelations)> {
    check_type1(n, b_minus, b_plus)?;
    let pair = SolutionFamily::Type1 { n, b_minus, b_plus }.pair();
    let mut m = Matrix::zeros(n, n);
    let sum = Scalar::lambda() + Scalar::mu();
    for i in 1..=n {
        m[(i - 1, i - 1)] = if i <= b_minus {
            sum.clone()
        } else if i < b_plus {
            Scalar::lambda()
        } else {
            Scalar::zero()
        };
    }
    for (&i, &j) in pair.mapping() {
        m[(i - 1, j - 1)] = Scalar::y(n, i)?;
    }
    let rel = PairRelations::new((1..=b_minus).map(|i| (i, b_plus + b_minus - i)))?;
    Ok((CharacterMatrix::new(m)?, rel))
}

/// Symbolic Type 2 matrix for `Y`, `Z = σ(Y)` and `b`.
pub fn type2_family(n: usize, y: &[usize], z: &[usize], b: usize) -> Result<CharacterMatrix> {
    match SolutionFamily::type2(n, y, z, b)? {
        SolutionFamily::Type2 { pair, b, .. } => type2_family_of(&pair, b),
        SolutionFamily::Type1 { .. } => unreachable!(),
    }
}

fn type2_family_of(pair: &AdmissiblePair, b: usize) -> Result<CharacterMatrix> {
    let n = pair.n();
    let mut m = Matrix::zeros(n, n);
    for i in 1..=b.min(n) {
        m[(i - 1, i - 1)] = Scalar::lambda();
    }
    for (&i, &j) in pair.mapping() {
        m[(i - 1, j - 1)] = Scalar::y(n, i)?;
    }
    CharacterMatrix::new(m)
}

/// All families for `n`, sorted by type, b-data, `Y`, `Z`.
pub fn enumerate_families(n: usize) -> Vec<SolutionFamily> {
    let mut out = Vec::new();
    for b_minus in 1..=n {
        for b_plus in (b_minus + 1)..=(n + 1 - b_minus) {
            out.push(SolutionFamily::Type1 { n, b_minus, b_plus });
        }
    }
    for pair in enumerate_admissible_pairs(n)
        .into_iter()
        .filter(AdmissiblePair::is_disjoint)
    {
        let st = pair.stats();
        for b in st.b_minus..st.b_plus {
            out.push(SolutionFamily::Type2 {
                n,
                pair: pair.clone(),
                b,
            });
        }
    }
    out.sort();
    out
}

/// How the eigenvalue pair of a Type 1 instance is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Type1Eigen {
    Roots {
        lambda: Rational,
        mu: Rational,
    },
    /// `e₁ = λ + μ`, `e₂ = λμ`; only for families without a middle block.
    Symmetric {
        e1: Rational,
        e2: Rational,
    },
}

impl Type1Eigen {
    pub fn e1(&self) -> Rational {
        match self {
            Type1Eigen::Roots { lambda, mu } => lambda + mu,
            Type1Eigen::Symmetric { e1, .. } => e1.clone(),
        }
    }

    pub fn e2(&self) -> Rational {
        match self {
            Type1Eigen::Roots { lambda, mu } => lambda * mu,
            Type1Eigen::Symmetric { e2, .. } => e2.clone(),
        }
    }
}

/// Numeric parameters of a family instance. `y` holds the free `y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Type1 {
        eigen: Type1Eigen,
        y: BTreeMap<usize, Rational>,
    },
    Type2 {
        lambda: Rational,
        y: BTreeMap<usize, Rational>,
    },
}

impl FamilyParams {
    pub fn y(&self) -> &BTreeMap<usize, Rational> {
        match self {
            FamilyParams::Type1 { y, .. } | FamilyParams::Type2 { y, .. } => y,
        }
    }
}

fn check_free_y(f: &SolutionFamily, y: &BTreeMap<usize, Rational>) -> Result<()> {
    let free = f.free_y();
    if y.keys().copied().collect::<Vec<_>>() != free {
        return Err(Error::Parameter(format!("{f} needs y values for exactly {free:?}")));
    }
    if let Some((i, _)) = y.iter().find(|(_, v)| v.is_zero()) {
        return Err(Error::Parameter(format!("y{i} must be nonzero")));
    }
    Ok(())
}

/// Numeric matrix of a family at the given parameters.
pub fn instantiate(f: &SolutionFamily, params: &FamilyParams) -> Result<RatMatrix> {
    let n = f.n();
    match (f, params) {
        (SolutionFamily::Type1 { b_minus, b_plus, .. }, FamilyParams::Type1 { eigen, y }) => {
            check_free_y(f, y)?;
            let (e1, e2) = (eigen.e1(), eigen.e2());
            if e2.is_zero() {
                return Err(Error::Parameter("Type 1 needs λμ ≠ 0".into()));
            }
            let middle = match eigen {
                Type1Eigen::Roots { lambda, .. } => lambda.clone(),
                Type1Eigen::Symmetric { .. } if f.has_middle() => {
                    return Err(Error::Parameter("this Type 1 family needs explicit λ and μ".into()))
                }
                Type1Eigen::Symmetric { .. } => Rational::zero(),
            };
            let mut m = RatMatrix::zeros(n, n);
            for i in 1..=n {
                m[(i - 1, i - 1)] = if i <= *b_minus {
                    e1.clone()
                } else if i < *b_plus {
                    middle.clone()
                } else {
                    Rational::zero()
                };
            }
            for (&i, yi) in y {
                let j = b_plus + b_minus - i;
                m[(i - 1, j - 1)] = yi.clone();
                m[(j - 1, i - 1)] = -&e2 / yi;
            }
            Ok(m)
        }
        (SolutionFamily::Type2 { pair, b, .. }, FamilyParams::Type2 { lambda, y }) => {
            check_free_y(f, y)?;
            let mut m = RatMatrix::zeros(n, n);
            for i in 1..=*b {
                m[(i - 1, i - 1)] = lambda.clone();
            }
            for (&i, j) in pair.mapping() {
                m[(i - 1, j - 1)] = y[&i].clone();
            }
            Ok(m)
        }
        _ => Err(Error::Parameter(format!("parameters do not match the type of {f}"))),
    }
}

/// A random nonzero rational `p/q` with `|p| <= 9`, `1 <= q <= 4`.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-9..=9);
        let q: i64 = rng.gen_range(1..=4);
        if p != 0 {
            return frac(p, q);
        }
    }
}

/// Generic parameters: all values random and nonzero, `λ ≠ μ` not enforced.
pub fn sample_params<R: Rng + ?Sized>(f: &SolutionFamily, rng: &mut R) -> FamilyParams {
    let y = f.free_y().into_iter().map(|i| (i, random_nonzero(rng))).collect();
    match f {
        SolutionFamily::Type1 { .. } => FamilyParams::Type1 {
            eigen: Type1Eigen::Roots {
                lambda: random_nonzero(rng),
                mu: random_nonzero(rng),
            },
            y,
        },
        SolutionFamily::Type2 { .. } => FamilyParams::Type2 {
            lambda: random_nonzero(rng),
            y,
        },
    }
}

/// Outcome of [`classify_matrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassificationResult {
    Type1Match {
        n: usize,
        b_minus: usize,
        b_plus: usize,
        e1: Rational,
        e2: Rational,
        /// `(λ, μ)` when rational; ordered `λ >= μ` unless a middle block pins `λ`.
        roots: Option<(Rational, Rational)>,
        /// `y_i` for every `i ∈ Y`.
        y: BTreeMap<usize, Rational>,
    },
    Type2Match {
        n: usize,
        pair: AdmissiblePair,
        b: usize,
        lambda: Rational,
        y: BTreeMap<usize, Rational>,
    },
    NotACharacter {
        violated: EquationTag,
    },
}

impl ClassificationResult {
    pub fn family(&self) -> Option<SolutionFamily> {
        match self {
            ClassificationResult::Type1Match { n, b_minus, b_plus, .. } => Some(SolutionFamily::Type1 {
                n: *n,
                b_minus: *b_minus,
                b_plus: *b_plus,
            }),
            ClassificationResult::Type2Match { n, pair, b, .. } => Some(SolutionFamily::Type2 {
                n: *n,
                pair: pair.clone(),
                b: *b,
            }),
            ClassificationResult::NotACharacter { .. } => None,
        }
    }

    pub fn params(&self) -> Option<FamilyParams> {
        match self {
            ClassificationResult::Type1Match {
                b_minus,
                e1,
                e2,
                roots,
                y,
                ..
            } => {
                let eigen = match roots {
                    Some((lambda, mu)) => Type1Eigen::Roots {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                    },
                    None => Type1Eigen::Symmetric {
                        e1: e1.clone(),
                        e2: e2.clone(),
                    },
                };
                let y = y.range(1..=*b_minus).map(|(k, v)| (*k, v.clone())).collect();
                Some(FamilyParams::Type1 { eigen, y })
            }
            ClassificationResult::Type2Match { lambda, y, .. } => Some(FamilyParams::Type2 {
                lambda: lambda.clone(),
                y: y.clone(),
            }),
            ClassificationResult::NotACharacter { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let s = format_rational;
        let ys = |y: &BTreeMap<usize, Rational>| -> Value {
            Value::Object(y.iter().map(|(k, v)| (k.to_string(), Value::String(s(v)))).collect())
        };
        match self {
            ClassificationResult::Type1Match {
                n,
                b_minus,
                b_plus,
                e1,
                e2,
                roots,
                y,
            } => json!({
                "kind": "type1",
                "n": n,
                "b_minus": b_minus,
                "b_plus": b_plus,
                "e1": s(e1),
                "e2": s(e2),
                "lambda": roots.as_ref().map(|r| s(&r.0)),
                "mu": roots.as_ref().map(|r| s(&r.1)),
                "y": ys(y),
            }),
            ClassificationResult::Type2Match { n, pair, b, lambda, y } => json!({
                "kind": "type2",
                "n": n,
                "Y": pair.domain(),
                "Z": pair.image(),
                "b": b,
                "lambda": s(lambda),
                "y": ys(y),
            }),
            ClassificationResult::NotACharacter { violated } => json!({
                "kind": "not_a_character",
                "violated": violated.to_string(),
            }),
        }
    }
}

/// Rational roots of `t² - e₁t + e₂`, larger first.
pub fn rational_roots(e1: &Rational, e2: &Rational) -> Option<(Rational, Rational)> {
    let disc = e1 * e1 - frac(4, 1) * e2;
    let r = rational_sqrt(&disc)?;
    let two = frac(2, 1);
    Some(((e1 + &r) / &two, (e1 - &r) / &two))
}

/// Identifies the family and parameters of a numeric matrix at a generic
/// `q`, or the first equation it violates.
pub fn classify_matrix(a: &RatMatrix, q: &Rational) -> Result<ClassificationResult> {
    check_generic_q(q)?;
    if !a.is_square() || a.rows() == 0 {
        return Err(usage!("classify needs a nonempty square matrix"));
    }
    let n = a.rows();
    if !re_residual_at(a, q)?.is_zero() {
        let violated = first_violated(a, q)?.ok_or_else(|| {
            Error::NoMatchingFamily("residual is nonzero but every equation of the system holds".into())
        })?;
        return Ok(ClassificationResult::NotACharacter { violated });
    }

    let no_match = |why: String| Error::NoMatchingFamily(why);
    let mut sigma = BTreeMap::new();
    for i in 0..n {
        let off: Vec<usize> = (0..n).filter(|&j| j != i && !a[(i, j)].is_zero()).collect();
        match off.as_slice() {
            [] => {}
            [j] => {
                sigma.insert(i + 1, j + 1);
            }
            _ => return Err(no_match(format!("row {} has several off-diagonal entries", i + 1))),
        }
    }
    let pair = AdmissiblePair::new(n, sigma).map_err(|e| no_match(e.to_string()))?;
    let st = pair.stats();
    let y: BTreeMap<usize, Rational> = pair
        .mapping()
        .iter()
        .map(|(&i, &j)| (i, a[(i - 1, j - 1)].clone()))
        .collect();
    let diag = |i: usize| a[(i - 1, i - 1)].clone();

    let result = if !pair.is_empty() && pair.is_involutive() {
        let (b_minus, b_plus) = (st.b_minus, st.b_plus);
        let family = SolutionFamily::type1(n, b_minus, b_plus).map_err(|e| no_match(e.to_string()))?;
        if family.pair() != pair {
            return Err(no_match(format!("support {pair} is not a Type 1 pattern")));
        }
        let e1 = diag(1);
        let first = *y.keys().next().expect("nonempty");
        let e2 = -(&y[&first] * &y[&pair.sigma(first).expect("in domain")]);
        let roots = if family.has_middle() {
            let lambda = diag(b_minus + 1);
            let mu = &e1 - &lambda;
            Some((lambda, mu))
        } else {
            rational_roots(&e1, &e2)
        };
        ClassificationResult::Type1Match {
            n,
            b_minus,
            b_plus,
            e1,
            e2,
            roots,
            y,
        }
    } else if pair.is_disjoint() {
        let top = (1..=n).rev().find(|&i| !diag(i).is_zero());
        let (b, lambda) = match top {
            Some(b) => (b, diag(b)),
            None => (st.b_minus, Rational::zero()),
        };
        if b < st.b_minus || b >= st.b_plus {
            return Err(no_match(format!(
                "diagonal boundary b = {b} outside [{}, {})",
                st.b_minus, st.b_plus
            )));
        }
        ClassificationResult::Type2Match { n, pair, b, lambda, y }
    } else {
        return Err(no_match(format!("support {pair} is neither involutive nor disjoint")));
    };

    let family = result.family().expect("matched");
    let params = result.params().expect("matched");
    let rebuilt = instantiate(&family, &params).map_err(|e| no_match(e.to_string()))?;
    if &rebuilt != a {
        return Err(no_match(format!("matrix does not re-instantiate from {family}")));
    }
    Ok(result)
}

/// Entrywise limit `μ → 0` of a Type 1 instance: drop `μ` and the bound
/// partners `y_σ(i)`, keep the free `y_i`.
pub fn type1_mu_to_zero_limit(
    f: &SolutionFamily,
    lambda: &Rational,
    y: &BTreeMap<usize, Rational>,
) -> Result<RatMatrix> {
    let SolutionFamily::Type1 { n, b_minus, b_plus } = f else {
        return Err(usage!("limit is defined for Type 1 families only"));
    };
    let mut m = RatMatrix::zeros(*n, *n);
    for i in 1..*b_plus {
        m[(i - 1, i - 1)] = lambda.clone();
    }
    for i in 1..=*b_minus {
        let v = y.get(&i).ok_or_else(|| Error::Parameter(format!("missing y{i}")))?;
        m[(i - 1, b_plus + b_minus - i - 1)] = v.clone();
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{re_residual, BraidOperator};
    use crate::rational::int;

    fn num(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn pair_stats_examples() {
        let p = AdmissiblePair::from_sets(3, &[1, 3], &[1, 3]).unwrap();
        let st = p.stats();
        assert_eq!(
            (st.y_minus, st.y_plus, st.b_minus, st.b_plus),
            (set(&[1]), set(&[3]), 1, 3)
        );
        assert_eq!(st.y_zero, set(&[1, 3]));

        let st = AdmissiblePair::empty(4).unwrap().stats();
        assert_eq!((st.b_minus, st.b_plus), (0, 5));

        let st = AdmissiblePair::from_sets(2, &[1], &[2]).unwrap().stats();
        assert_eq!((st.y_minus, st.b_minus, st.b_plus), (set(&[1]), 1, 2));
    }

    #[test]
    fn invalid_pairs() {
        assert!(AdmissiblePair::from_sets(2, &[1], &[1]).is_err());
        assert!(AdmissiblePair::new(3, [(1, 2), (2, 3)].into()).is_err());
        assert!(AdmissiblePair::new(3, [(1, 4)].into()).is_err());
        assert!(AdmissiblePair::from_sets(3, &[1, 2], &[3]).is_err());
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_admissible_pairs(1), vec![AdmissiblePair::empty(1).unwrap()]);
        let p2 = enumerate_admissible_pairs(2);
        assert_eq!(p2.len(), 4);
        assert_eq!(p2[3], AdmissiblePair::from_sets(2, &[1, 2], &[1, 2]).unwrap());
        assert_eq!(enumerate_admissible_pairs(3).len(), 14);
    }

    #[test]
    fn sigma_counts() {
        assert_eq!(count_sigma_choices(2, 1), 1);
        assert_eq!(count_sigma_choices(4, 2), 1);
        assert_eq!(count_sigma_choices(7, 0), 1);
        assert_eq!(count_sigma_choices(3, 2), 0);
        assert_eq!(sigma_choices(5, &[2, 4]).len() as u128, count_sigma_choices(5, 2));
    }

    #[test]
    fn type1_matrices() {
        let (a, rel) = type1_family(2, 1, 2).unwrap();
        assert_eq!(
            a.entries().row(0).iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            ["l + m", "y1"]
        );
        assert_eq!(
            a.entries().row(1).iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            ["y2", "0"]
        );
        assert_eq!(rel.pairs(), &[(1, 2)]);

        let (a, _) = type1_family(3, 1, 3).unwrap();
        assert_eq!(a.entries()[(1, 1)], Scalar::lambda());
        assert_eq!(a.entries()[(0, 2)].to_string(), "y1");
        assert_eq!(a.entries()[(2, 0)].to_string(), "y3");

        assert!(type1_family(3, 2, 3).is_err());
        assert!(type1_family(3, 0, 2).is_err());
    }

    #[test]
    fn type2_matrices() {
        let a = type2_family(2, &[1], &[2], 1).unwrap();
        assert_eq!(a.entries()[(0, 0)], Scalar::lambda());
        assert_eq!(a.entries()[(0, 1)].to_string(), "y1");
        assert!(a.entries()[(1, 0)].is_zero() && a.entries()[(1, 1)].is_zero());

        let p = type2_family(4, &[], &[], 2).unwrap();
        let diag: Vec<String> = (0..4).map(|i| p.entries()[(i, i)].to_string()).collect();
        assert_eq!(diag, ["l", "l", "0", "0"]);

        let a = type2_family(3, &[1], &[3], 2).unwrap();
        assert_eq!(a.entries()[(1, 1)], Scalar::lambda());
        assert_eq!(a.entries()[(0, 2)].to_string(), "y1");

        assert!(type2_family(3, &[1], &[3], 3).is_err());
        assert!(type2_family(2, &[1, 2], &[1, 2], 1).is_err());
    }

    #[test]
    fn family_catalog_sizes() {
        let f1 = enumerate_families(1);
        assert_eq!(f1.len(), 2);
        assert!(f1.iter().all(|f| f.type_number() == 2));

        let f2 = enumerate_families(2);
        assert_eq!(f2.iter().filter(|f| f.type_number() == 1).count(), 1);
        assert_eq!(f2.iter().filter(|f| f.type_number() == 2).count(), 5);

        let f4 = enumerate_families(4);
        assert!(f4.contains(&SolutionFamily::type1(4, 2, 3).unwrap()));
        assert!(f4.contains(&SolutionFamily::type1(4, 1, 4).unwrap()));
    }

    #[test]
    fn families_are_symbolic_solutions_n3() {
        let s = BraidOperator::build(3).unwrap();
        for f in enumerate_families(3) {
            let (a, rel) = f.symbolic();
            assert!(re_residual(&a, &s, &rel).unwrap().is_zero(), "{f}");
        }
    }

    #[test]
    fn family_json() {
        let f = SolutionFamily::type1(4, 2, 3).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"type":1,"n":4,"b_minus":2,"b_plus":3}"#
        );
        let g = SolutionFamily::type2(3, &[1], &[3], 2).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"type":2,"n":3,"Y":[1],"Z":[3],"b":2}"#);
        assert_eq!(serde_json::from_str::<SolutionFamily>(&text).unwrap(), g);
        assert!(serde_json::from_str::<SolutionFamily>(r#"{"type":2,"n":4,"b_minus":2,"b_plus":3}"#).is_err());
        assert!(serde_json::from_str::<SolutionFamily>(r#"{"type":1,"n":2,"b_minus":2,"b_plus":3}"#).is_err());
    }

    #[test]
    fn instantiate_examples() {
        let t1 = SolutionFamily::type1(2, 1, 2).unwrap();
        let p = FamilyParams::Type1 {
            eigen: Type1Eigen::Roots {
                lambda: int(1),
                mu: int(-1),
            },
            y: [(1, int(1))].into(),
        };
        assert_eq!(instantiate(&t1, &p).unwrap(), num(&[&[0, 1], &[1, 0]]));

        let p = FamilyParams::Type1 {
            eigen: Type1Eigen::Roots {
                lambda: int(2),
                mu: int(3),
            },
            y: [(1, int(1))].into(),
        };
        assert_eq!(instantiate(&t1, &p).unwrap(), num(&[&[5, 1], &[-6, 0]]));

        let t2 = SolutionFamily::type2(3, &[], &[], 2).unwrap();
        let p = FamilyParams::Type2 {
            lambda: int(5),
            y: BTreeMap::new(),
        };
        assert_eq!(
            instantiate(&t2, &p).unwrap(),
            num(&[&[5, 0, 0], &[0, 5, 0], &[0, 0, 0]])
        );
    }

    #[test]
    fn instantiate_rejects_bad_params() {
        let t1 = SolutionFamily::type1(2, 1, 2).unwrap();
        let zero_mu = FamilyParams::Type1 {
            eigen: Type1Eigen::Roots {
                lambda: int(1),
                mu: int(0),
            },
            y: [(1, int(1))].into(),
        };
        assert!(matches!(instantiate(&t1, &zero_mu), Err(Error::Parameter(_))));
        let zero_y = FamilyParams::Type1 {
            eigen: Type1Eigen::Roots {
                lambda: int(1),
                mu: int(1),
            },
            y: [(1, int(0))].into(),
        };
        assert!(matches!(instantiate(&t1, &zero_y), Err(Error::Parameter(_))));
        let t2 = SolutionFamily::type2(2, &[1], &[2], 1).unwrap();
        let zero_y = FamilyParams::Type2 {
            lambda: int(1),
            y: [(1, int(0))].into(),
        };
        assert!(matches!(instantiate(&t2, &zero_y), Err(Error::Parameter(_))));
        let mid = SolutionFamily::type1(3, 1, 3).unwrap();
        let sym = FamilyParams::Type1 {
            eigen: Type1Eigen::Symmetric {
                e1: int(1),
                e2: int(-1),
            },
            y: [(1, int(1))].into(),
        };
        assert!(matches!(instantiate(&mid, &sym), Err(Error::Parameter(_))));
    }

    #[test]
    fn classify_examples() {
        let q = int(2);
        match classify_matrix(&num(&[&[0, 1], &[1, 0]]), &q).unwrap() {
            ClassificationResult::Type1Match {
                b_minus,
                b_plus,
                e1,
                e2,
                roots,
                ..
            } => {
                assert_eq!((b_minus, b_plus, e1, e2), (1, 2, int(0), int(-1)));
                assert_eq!(roots, Some((int(1), int(-1))));
            }
            other => panic!("{other:?}"),
        }
        match classify_matrix(&num(&[&[1, 1], &[1, 0]]), &q).unwrap() {
            ClassificationResult::Type1Match { e1, e2, roots, .. } => {
                assert_eq!((e1, e2, roots), (int(1), int(-1), None));
            }
            other => panic!("{other:?}"),
        }
        match classify_matrix(&num(&[&[1, 0], &[0, 2]]), &q).unwrap() {
            ClassificationResult::NotACharacter { violated } => {
                assert_eq!(violated.group, crate::re_system::EqGroup::Eq5)
            }
            other => panic!("{other:?}"),
        }
        assert!(classify_matrix(&RatMatrix::zeros(2, 3), &q).is_err());
    }

    #[test]
    fn zero_matrix_is_canonical_type2() {
        let r = classify_matrix(&RatMatrix::zeros(3, 3), &int(3)).unwrap();
        assert_eq!(r.family(), Some(SolutionFamily::type2(3, &[], &[], 0).unwrap()));
    }

    #[test]
    fn mu_limit_is_type2() {
        let f = SolutionFamily::type1(4, 1, 3).unwrap();
        let y = [(1, int(2))].into();
        let limit = type1_mu_to_zero_limit(&f, &int(3), &y).unwrap();
        let t2 = SolutionFamily::type2(4, &[1], &[3], 2).unwrap();
        let p = FamilyParams::Type2 { lambda: int(3), y };
        assert_eq!(limit, instantiate(&t2, &p).unwrap());
    }
}
