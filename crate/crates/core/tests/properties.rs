use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use valdim::order::{classify, compare_exponents, refine_to_order, validate_matrix};
use valdim::rings::random::{random_laurent_v, random_r, random_v, random_w, seeded};
use valdim::scalar::rat;
use valdim::text::{parse_fraction, parse_matrix, parse_poly, parse_quad};
use valdim::witness::{lex_witness_pair, verify_witness, witness_w_preorder};
use valdim::{suite, OrderMatrix, QuadScalar, Scalar, VElem, WElem};

fn quad() -> impl Strategy<Value = QuadScalar> {
    (-40i64..=40, 1i64..=6, -40i64..=40, 1i64..=6).prop_map(|(a, b, c, d)| QuadScalar::new(rat(a, b), rat(c, d)))
}

fn approx(x: &QuadScalar) -> f64 {
    let f = |r: &valdim::Rational| {
        r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap()
    };
    f(&x.rat) + f(&x.irr) * std::f64::consts::SQRT_2
}

fn exps(n: usize) -> impl Strategy<Value = Vec<BigInt>> {
    proptest::collection::vec(-6i64..=6, n).prop_map(|v| v.into_iter().map(BigInt::from).collect())
}

fn int_matrix(n: usize) -> impl Strategy<Value = OrderMatrix> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), 1..=n).prop_filter_map("zero row", |rows| {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        OrderMatrix::from_ints(&refs).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quad_order_matches_floats(a in quad(), b in quad()) {
        let (x, y) = (approx(&a), approx(&b));
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(a.cmp(&b), x.partial_cmp(&y).unwrap());
        }
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a == b, a.cmp(&b) == Ordering::Equal);
    }

    #[test]
    fn quad_field_laws(a in quad(), b in quad(), c in quad()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if let Some(inv) = a.recip() {
            prop_assert_eq!(&a * &inv, QuadScalar::one());
        }
    }

    #[test]
    fn quad_text_round_trip(a in quad()) {
        prop_assert_eq!(parse_quad(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn matrix_text_round_trip(m in int_matrix(3)) {
        prop_assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn preorder_comparison_is_consistent(m in int_matrix(3), e in exps(3), f in exps(3), g in exps(3)) {
        let ef = compare_exponents(&m, &e, &f).unwrap();
        prop_assert_eq!(compare_exponents(&m, &f, &e).unwrap(), ef.reverse());
        let fg = compare_exponents(&m, &f, &g).unwrap();
        if ef != Ordering::Greater && fg != Ordering::Greater {
            prop_assert_ne!(compare_exponents(&m, &e, &g).unwrap(), Ordering::Greater);
        }
        // Translation invariance.
        let shift = |x: &[BigInt]| x.iter().zip(&g).map(|(a, b)| a + b).collect::<Vec<_>>();
        prop_assert_eq!(compare_exponents(&m, &shift(&e), &shift(&f)).unwrap(), ef);
    }

    #[test]
    fn refinement_is_total_and_compatible(m in int_matrix(3).prop_filter("invalid", validate_matrix), e in exps(3), f in exps(3)) {
        let r = refine_to_order(&m).unwrap();
        prop_assert!(classify(&r).is_total_order);
        let coarse = compare_exponents(&m, &e, &f).unwrap();
        let fine = compare_exponents(&r, &e, &f).unwrap();
        if coarse != Ordering::Equal {
            prop_assert_eq!(fine, coarse);
        }
        prop_assert_eq!(fine == Ordering::Equal, e == f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn v_arithmetic_laws(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b, c) = (random_v(&mut rng), random_v(&mut rng), random_v(&mut rng));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), VElem::one());
            prop_assert_eq!(a.pow_i(3).unwrap(), a.clone() * a.clone() * a.clone());
            prop_assert_eq!(a.pow_i(-2).unwrap() * a.clone() * a.clone(), VElem::one());
        }
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn element_text_round_trip(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let v = random_v(&mut rng);
        prop_assert_eq!(parse_fraction::<VElem>(&v.to_string()).unwrap(), v.clone());
        let quotient = v / random_v(&mut rng).inv().unwrap_or_else(VElem::one);
        prop_assert_eq!(parse_fraction::<VElem>(&quotient.to_string()).unwrap(), quotient);
        let r = random_r(&mut rng);
        prop_assert_eq!(parse_fraction::<valdim::RElem>(&r.to_string()).unwrap(), r);
        let w = random_w(&mut rng);
        prop_assert_eq!(parse_fraction::<WElem>(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn poly_text_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let p = random_laurent_v(&mut rng, n, 5);
        prop_assert_eq!(parse_poly::<VElem>(&p.to_string(), n).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let p = random_laurent_v(&mut rng, 2, 4).clear_denominators();
        let q = random_laurent_v(&mut rng, 2, 4).clear_denominators();
        let pts = [random_v(&mut rng) + VElem::one(), random_v(&mut rng) + VElem::one()];
        let at = |x: &valdim::LaurentPoly<VElem>| x.evaluate(&pts).unwrap();
        prop_assert_eq!(at(&(&p * &q)), at(&p) * at(&q));
        prop_assert_eq!(at(&(&p + &q)), at(&p) + at(&q));
    }

    #[test]
    fn lex_pair_witnesses_verify(seed in any::<u64>(), x_greater in any::<bool>()) {
        let mut rng = seeded(seed);
        let (a, b) = (random_v(&mut rng), random_v(&mut rng));
        let w = lex_witness_pair(&a, &b, x_greater).unwrap();
        prop_assert!(verify_witness(&w).passed, "{}", w);
        let (a, b) = (random_r(&mut rng), random_r(&mut rng));
        let w = lex_witness_pair(&a, &b, x_greater).unwrap();
        prop_assert!(verify_witness(&w).passed, "{}", w);
    }

    #[test]
    fn w_preorder_witnesses_verify(seed in any::<u64>(), p in 1i64..=2, q in 1i64..=2) {
        let mut rng = seeded(seed);
        let (a, b) = (random_w(&mut rng), random_w(&mut rng));
        prop_assume!(!a.is_zero() && !b.is_zero());
        // Rows (p, q√2) and (q√2, p) are irrational and positive.
        for row in [[QuadScalar::from_int(p), QuadScalar::sqrt2().mul_int(&q.into())],
                    [QuadScalar::sqrt2().mul_int(&q.into()), QuadScalar::from_int(p)]] {
            let m = OrderMatrix::new(vec![row.to_vec()]).unwrap();
            let w = witness_w_preorder(&m, &a, &b).unwrap();
            prop_assert!(verify_witness(&w).passed, "{} under {}", w, m);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn seeded_groups_pass(seed in any::<u64>()) {
        for cases in [
            suite::lprelim_identity(seed, 10),
            suite::tdim_compositions(seed, 2),
            suite::analytic_homogenize(seed, 3),
            suite::v_phi_checks(seed, 5),
            suite::r_phi_checks(seed, 5),
        ] {
            for c in cases {
                prop_assert!(c.passed(), "{} #{}: {:?}", c.check, c.index, c.reason);
            }
        }
    }
}

#[test]
fn zero_point_needs_no_inverse_for_polynomials() {
    let p = parse_poly::<VElem>("X1^2+v*X2", 2).unwrap();
    let value = p.evaluate(&[VElem::zero(), VElem::zero()]).unwrap();
    assert!(value.is_zero());
    let q = parse_poly::<VElem>("X1^-1", 1).unwrap();
    assert!(q.evaluate(&[VElem::zero()]).is_err());
}
