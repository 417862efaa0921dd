//! Property tests for the algebraic core: ring axioms, the Leibniz rule,
//! grading, canonical-form stability, and the operator relations.

use proptest::prelude::*;
use sympdirac::ops::{apply_ds, apply_euler, apply_gamma, apply_xs, OperatorExpr};
use sympdirac::textio::{parse, serialize};
use sympdirac::{Monomial, Rational, SPoly, Scalar, VarBank};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(num, den)| Rational::new(num.into(), den.into()))
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (arb_rational(), arb_rational()).prop_map(|(re, im)| Scalar::new(re, im))
}

fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    (
        proptest::collection::vec(0u32..=3, 2 * n),
        proptest::collection::vec(0u32..=3, n),
    )
        .prop_map(|(xexp, qexp)| Monomial::from_exps(xexp, qexp))
}

fn arb_spoly(n: usize) -> impl Strategy<Value = SPoly> {
    proptest::collection::vec((arb_monomial(n), arb_scalar()), 0..6)
        .prop_map(move |terms| SPoly::from_terms(n, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes_and_associates(
        a in arb_spoly(2), b in arb_spoly(2), c in arb_spoly(2)
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &SPoly::zero(2), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_commutes_and_associates(
        a in arb_spoly(2), b in arb_spoly(2), c in arb_spoly(2)
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &SPoly::one(2), a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn differentiation_is_a_derivation(a in arb_spoly(2), b in arb_spoly(2)) {
        for (bank, index) in [(VarBank::Base, 1), (VarBank::Base, 4), (VarBank::Spinor, 2)] {
            let lhs = (&a * &b).diff(bank, index).unwrap();
            let rhs = &(&a.diff(bank, index).unwrap() * &b)
                + &(&a * &b.diff(bank, index).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn graded_parts_reassemble(a in arb_spoly(2)) {
        let mut sum = SPoly::zero(2);
        for k in a.base_degrees() {
            sum = sum + a.graded_part(k);
        }
        prop_assert_eq!(sum, a.clone());
        // A cap above the top spinor degree is the identity.
        prop_assert_eq!(a.spinor_truncate(1000), a.clone());
    }

    #[test]
    fn serialization_round_trips(a in arb_spoly(2)) {
        let text = serialize(&a);
        let back = parse(&text, 2).unwrap();
        prop_assert_eq!(&back, &a);
        // Canonicalization is idempotent under reserialization.
        prop_assert_eq!(serialize(&back), text);
    }

    #[test]
    fn sl2_relations_hold(a in arb_spoly(2)) {
        let h = OperatorExpr::euler_plus_n(2).apply(&a).unwrap();
        prop_assert_eq!(
            apply_ds(&apply_xs(&a)) - apply_xs(&apply_ds(&a)),
            h
        );
        prop_assert_eq!(
            apply_gamma(&apply_xs(&a)),
            apply_xs(&apply_gamma(&a))
        );
        prop_assert_eq!(
            apply_euler(&apply_xs(&a)) - apply_xs(&apply_euler(&a)),
            apply_xs(&a)
        );
    }

    #[test]
    fn word_engine_matches_direct_operators(a in arb_spoly(2)) {
        prop_assert_eq!(OperatorExpr::ds(2).apply(&a).unwrap(), apply_ds(&a));
        prop_assert_eq!(OperatorExpr::xs(2).apply(&a).unwrap(), apply_xs(&a));
        prop_assert_eq!(OperatorExpr::gamma(2).apply(&a).unwrap(), apply_gamma(&a));
    }

    #[test]
    fn parser_never_panics_on_junk(junk in "[xq0-9 +*/^i().e-]{0,24}") {
        let _ = parse(&junk, 2);
    }
}
