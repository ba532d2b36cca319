use proptest::prelude::*;
use sepdeform_scalar::quantum::quantum_integer;
use sepdeform_scalar::{
    parse_laurent, parse_ratfunc, Cyclotomic, Domain, Field, Integer, Laurent, Monomial, Rat, RationalFunction, Ring,
    UniPoly, Zp,
};

fn laurent_int() -> impl Strategy<Value = Laurent<Integer>> {
    prop::collection::vec((-3i32..=3, -2i32..=2, -6i64..=6), 0..5).prop_map(|terms| {
        Laurent::from_terms(
            terms
                .into_iter()
                .map(|(eq, et, c)| (Monomial::from_pairs([(16, eq), (19, et)]), Integer::from(c))),
        )
    })
}

fn poly_int() -> impl Strategy<Value = Laurent<Integer>> {
    prop::collection::vec((0i32..=3, 0i32..=2, -4i64..=4), 1..4).prop_map(|terms| {
        Laurent::from_terms(
            terms
                .into_iter()
                .map(|(eq, et, c)| (Monomial::from_pairs([(16, eq), (19, et)]), Integer::from(c))),
        )
    })
}

fn ratfunc_q() -> impl Strategy<Value = Rat> {
    let poly = || {
        prop::collection::vec((0i32..=2, -4i64..=4), 1..4).prop_map(|terms| {
            Laurent::from_terms(terms.into_iter().map(|(e, c)| (Monomial::var_pow(16, e), Integer::from(c))))
        })
    };
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RationalFunction::new(n, d))
}

fn ratfunc() -> impl Strategy<Value = Rat> {
    (poly_int(), poly_int()).prop_filter_map("nonzero denominator", |(n, d)| RationalFunction::new(n, d))
}

fn cyclo5() -> impl Strategy<Value = Cyclotomic<5>> {
    prop::collection::vec(-5i64..=5, 4).prop_map(|v| Cyclotomic::from_coefficients(v.into_iter().map(Into::into)))
}

fn zp7_laurent() -> impl Strategy<Value = Laurent<Zp<7>>> {
    prop::collection::vec((-2i32..=2, 0i32..=2, 0i64..7), 0..4).prop_map(|terms| {
        Laurent::from_terms(
            terms
                .into_iter()
                .map(|(ea, eb, c)| (Monomial::from_pairs([(0, ea), (1, eb)]), Zp::new(c))),
        )
    })
}

fn check_laws<R: Ring>(a: &R, b: &R, c: &R) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert!(a.sub(a).is_zero());
    assert_eq!(a.mul(&R::one()), *a);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_integer_laws(a in laurent_int(), b in laurent_int(), c in laurent_int()) {
        check_laws(&a, &b, &c);
    }

    #[test]
    fn rational_function_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        check_laws(&a, &b, &c);
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_laws(a in cyclo5(), b in cyclo5(), c in cyclo5()) {
        check_laws(&a, &b, &c);
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a.clone()));
        }
    }

    #[test]
    fn prime_field_laurent_laws(a in zp7_laurent(), b in zp7_laurent(), c in zp7_laurent()) {
        check_laws(&a, &b, &c);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent_int(), b in poly_int()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }

    #[test]
    fn quantum_integer_geometric_identity(i in 1usize..12, k in 1i32..3) {
        let base = Laurent::<Integer>::var_pow('q', k);
        let lhs = Laurent::one().sub(&base).mul(&quantum_integer(i, &base));
        prop_assert_eq!(lhs, Laurent::one().sub(&base.pow(i as u32)));
    }

    #[test]
    fn substitution_is_a_morphism(a in laurent_int(), b in laurent_int(), v in ratfunc_q()) {
        prop_assume!(!v.is_zero());
        let s = |x: &Laurent<Integer>| x.substitute('q', &v).unwrap();
        prop_assert_eq!(s(&a.mul(&b)), s(&a).mul(&s(&b)));
        prop_assert_eq!(s(&a.add(&b)), s(&a).add(&s(&b)));
    }

    #[test]
    fn reduction_mod_p_is_a_morphism(a in laurent_int(), b in laurent_int()) {
        prop_assert_eq!(a.mul(&b).reduce_mod::<3>(), a.reduce_mod::<3>().mul(&b.reduce_mod::<3>()));
        prop_assert_eq!(a.add(&b).reduce_mod::<2>(), a.reduce_mod::<2>().add(&b.reduce_mod::<2>()));
    }

    #[test]
    fn print_parse_round_trip(a in laurent_int(), r in ratfunc(), c in cyclo5()) {
        prop_assert_eq!(parse_laurent::<Integer>(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(parse_ratfunc::<Integer>(&r.to_string()).unwrap(), r.clone());
        let lc = Laurent::constant(c).mul(&parse_laurent("q - 2*q^-1").unwrap());
        prop_assert_eq!(parse_laurent::<Cyclotomic<5>>(&lc.to_string()).unwrap(), lc);
    }

    #[test]
    fn fraction_construction_is_canonical(n in poly_int(), d in poly_int(), k in poly_int()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let x = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let y = RationalFunction::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&x, &y);
        let reread: Rat = parse_ratfunc(&format!("({n})/({d})")).unwrap();
        prop_assert_eq!(reread, x);
    }

    #[test]
    fn serde_round_trip(a in laurent_int(), r in ratfunc()) {
        let ja = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Laurent<Integer>>(&ja).unwrap(), a);
        let jr = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rat>(&jr).unwrap(), r);
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(
        roots in prop::collection::vec(-3i64..=3, 2..5),
        extra in prop::collection::vec(-3i64..=3, 0..3),
    ) {
        // build over Q from integer roots and a random quadratic factor x^2 + b x + c
        let mut f = UniPoly::product(
            roots.iter().map(|&r| UniPoly::linear(&Rat::from_i64(r), 'x')),
            'x',
        );
        if let [b, c, ..] = extra[..] {
            f = f.mul(&UniPoly::new(vec![Rat::from_i64(c), Rat::from_i64(b), Rat::one()], 'x'));
        }
        let disc = f.discriminant().unwrap();
        let g = f.gcd(&f.derivative());
        prop_assert_eq!(disc.is_zero(), g.degree().unwrap() > 0);
    }
}
