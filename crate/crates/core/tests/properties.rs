use num_traits::{One, Zero};
use proptest::prelude::*;

use rechar::braid::{re_residual, re_residual_at, BraidOperator, CharacterMatrix};
use rechar::classification::{
    classify_matrix, enumerate_families, instantiate, FamilyParams, SolutionFamily, Type1Eigen,
};
use rechar::matrix::{Matrix, RatMatrix};
use rechar::rational::{frac, Rational};
use rechar::scalar::{Assignment, PairRelations, Scalar, Var};
use rechar::spectral::{char_poly, rank};

const N: usize = 3;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn generic_q() -> impl Strategy<Value = Rational> {
    rational().prop_filter("generic", |q| {
        !q.is_zero() && *q != Rational::one() && *q != -Rational::one()
    })
}

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![(1..=N).prop_map(Var::Y), Just(Var::Lambda), Just(Var::Mu), Just(Var::Q)]
}

fn monomial() -> impl Strategy<Value = Scalar> {
    (nonzero(), proptest::collection::vec((var(), 1u32..=2), 0..3)).prop_map(|(c, factors)| {
        factors.into_iter().fold(Scalar::constant(c), |acc, (v, e)| {
            let base = if v == Var::Q {
                Scalar::q()
            } else {
                Scalar::var(N, v).unwrap()
            };
            acc * base.pow(e)
        })
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (proptest::collection::vec(monomial(), 0..4), any::<bool>()).prop_map(|(ms, inverse_q)| {
        let s = ms.into_iter().fold(Scalar::zero(), |a, b| a + b);
        let s = if inverse_q { s * Scalar::q_inv() } else { s };
        s.in_universe(N)
    })
}

fn assignment() -> impl Strategy<Value = Assignment> {
    (
        proptest::collection::vec(rational(), N),
        rational(),
        rational(),
        generic_q(),
    )
        .prop_map(|(ys, l, m, q)| {
            let mut a: Assignment = ys.into_iter().enumerate().map(|(i, v)| (Var::Y(i + 1), v)).collect();
            a.insert(Var::Lambda, l);
            a.insert(Var::Mu, m);
            a.insert(Var::Q, q);
            a
        })
}

fn relations() -> impl Strategy<Value = PairRelations> {
    prop_oneof![
        Just(PairRelations::empty()),
        Just(PairRelations::new([(1, 3)]).unwrap()),
        Just(PairRelations::new([(1, 2)]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), asg in assignment()) {
        let (va, vb) = (a.evaluate(&asg).unwrap(), b.evaluate(&asg).unwrap());
        prop_assert_eq!((&a + &b).evaluate(&asg).unwrap(), &va + &vb);
        prop_assert_eq!((&a * &b).evaluate(&asg).unwrap(), &va * &vb);
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let text = a.format_canonical();
        prop_assert_eq!(Scalar::parse_in(&text, N).unwrap(), a);
    }

    #[test]
    fn reduce_is_idempotent(a in scalar(), rel in relations()) {
        let once = a.reduce(&rel);
        prop_assert_eq!(once.reduce(&rel), once);
    }

    #[test]
    fn reduce_is_compatible_with_products(a in scalar(), b in scalar(), rel in relations()) {
        prop_assert_eq!((&a * &b).reduce(&rel), (&a.reduce(&rel) * &b.reduce(&rel)).reduce(&rel));
    }

    #[test]
    fn residual_is_quadratic(entries in proptest::collection::vec(rational(), 4), k in rational(), q in generic_q()) {
        let a = RatMatrix::from_fn(2, 2, |r, c| entries[2 * r + c].clone());
        let ra = re_residual_at(&a, &q).unwrap();
        let rka = re_residual_at(&a.scale(&k), &q).unwrap();
        prop_assert_eq!(rka, ra.scale(&(&k * &k)));
    }

    #[test]
    fn residual_is_transpose_invariant(entries in proptest::collection::vec(rational(), 9), q in generic_q()) {
        let a = RatMatrix::from_fn(3, 3, |r, c| entries[3 * r + c].clone());
        let zero = re_residual_at(&a, &q).unwrap().is_zero();
        prop_assert_eq!(re_residual_at(&a.transpose(), &q).unwrap().is_zero(), zero);
    }

    #[test]
    fn scaling_preserves_family(idx in 0usize..30, k in nonzero(), lambda in nonzero(), mu in nonzero(), y in nonzero(), q in generic_q()) {
        let fams = enumerate_families(4);
        let f = &fams[idx % fams.len()];
        let ys = f.free_y().into_iter().map(|i| (i, y.clone())).collect();
        let p = match f {
            SolutionFamily::Type1 { .. } => FamilyParams::Type1 { eigen: Type1Eigen::Roots { lambda, mu }, y: ys },
            SolutionFamily::Type2 { .. } => FamilyParams::Type2 { lambda, y: ys },
        };
        let a = instantiate(f, &p).unwrap();
        let scaled = classify_matrix(&a.scale(&k), &q).unwrap().family();
        prop_assert_eq!(scaled.as_ref().map(SolutionFamily::type_number), Some(f.type_number()));
    }

    #[test]
    fn char_poly_is_monic_with_trace(entries in proptest::collection::vec(rational(), 9)) {
        let a = RatMatrix::from_fn(3, 3, |r, c| entries[3 * r + c].clone());
        let p = char_poly(&a).unwrap();
        prop_assert_eq!(p.degree(), Some(3));
        prop_assert_eq!(p.coeffs()[2].clone(), -a.trace());
        prop_assert_eq!(p.coeffs()[0].is_zero(), rank(&a) < 3);
    }
}

#[test]
fn symbolic_residual_scales_quadratically() {
    let s = BraidOperator::build(2).unwrap();
    let base = Matrix::from_rows(vec![
        vec![Scalar::lambda(), Scalar::y(2, 1).unwrap()],
        vec![Scalar::y(2, 2).unwrap(), Scalar::mu()],
    ])
    .unwrap();
    let k = Scalar::from_int(3);
    let a = CharacterMatrix::new(base.clone()).unwrap();
    let ka = CharacterMatrix::new(base.map(|v| &k * v)).unwrap();
    let rel = PairRelations::empty();
    let r = re_residual(&a, &s, &rel).unwrap();
    let rk = re_residual(&ka, &s, &rel).unwrap();
    assert_eq!(rk, r.map(|v| &(&k * &k) * v));
}
