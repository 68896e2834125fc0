use num_rational::BigRational;
use proptest::prelude::*;

use semisym::combinatorics::{bracket_inverse, enumerate_lambda, order_test, Partition, Relation};
use semisym::exactalg::{json, Mono, MultiPoly, ParamScalar};
use semisym::interpolation::{build_r, from_basis, to_basis, Basis};
use semisym::Ambient;

fn small_partition() -> impl Strategy<Value = Partition> {
    (1usize..=4, 0i64..=3).prop_flat_map(|(n, d)| {
        let all = enumerate_lambda(n, d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn scalar() -> impl Strategy<Value = ParamScalar> {
    (-5i64..=5, -3i64..=3, 1i64..=4, 0i64..=2).prop_map(|(a, b, c, d)| {
        let num = ParamScalar::linear(a, b);
        let den = ParamScalar::linear(c, d);
        num.checked_div(&den).unwrap()
    })
}

fn poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, n), scalar()), 0..6)
        .prop_map(move |ts| MultiPoly::from_terms(n, ts.into_iter().map(|(e, c)| (Mono::from_slice(&e), c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn json_round_trip(p in (1usize..=4).prop_flat_map(poly)) {
        let text = json::to_json(&p);
        let back = json::from_json(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(json::to_json(&back), text);
    }

    #[test]
    fn specializing_r_commutes_with_the_construction(lam in small_partition(), p in 1i64..=7, q in 1i64..=4) {
        let n = lam.n();
        let r = BigRational::new(p.into(), q.into());
        let symbolic = build_r(&Ambient::symbolic(n), &lam).unwrap();
        let direct = build_r(&Ambient::rational(n, &r).unwrap(), &lam).unwrap();
        prop_assert_eq!(symbolic.specialize_r(&r).unwrap(), (*direct).clone());
    }

    #[test]
    fn r_basis_round_trip(lam in small_partition()) {
        let amb = Ambient::symbolic(lam.n());
        let f = build_r(&amb, &lam).unwrap();
        let g = f.add(&MultiPoly::one(lam.n()));
        for basis in [Basis::R, Basis::Elementary] {
            let e = to_basis(&amb, &g, basis).unwrap();
            prop_assert_eq!(from_basis(&amb, &e).unwrap(), g.clone());
        }
    }

    #[test]
    fn bracket_is_invertible(lam in small_partition()) {
        let b = semisym::combinatorics::bracket(lam.parts());
        prop_assert_eq!(bracket_inverse(&b).unwrap(), lam);
    }

    #[test]
    fn orders_are_reflexive_and_nested(lam in small_partition(), mu_i in 0usize..64) {
        let n = lam.n();
        let others = enumerate_lambda(n, 3);
        let mu = &others[mu_i % others.len()];
        for rel in [Relation::Subseteq, Relation::Sqsubseteq, Relation::Dominance, Relation::Prec] {
            prop_assert!(order_test(&lam, &lam, rel).unwrap());
        }
        // ⊑ refines ⊆: a shift-monoid step never removes a box.
        if order_test(&lam, mu, Relation::Sqsubseteq).unwrap() {
            prop_assert!(order_test(&lam, mu, Relation::Subseteq).unwrap());
        }
    }
}
