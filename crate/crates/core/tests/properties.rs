use feedback_hopf::feedback::{
    antipode, compose, evaluate, feedback, group_inverse, group_inverse_fixpoint, group_product,
    mod_compose, unity_feedback, Character,
};
use feedback_hopf::hopf::{coproduct, h_mul, CoordMonomial, HElement};
use feedback_hopf::series::shuffle_series;
use feedback_hopf::word::words_up_to_degree;
use feedback_hopf::{Letter, Rational, Series, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn series(max_degree: u32) -> impl Strategy<Value = Series> {
    let words = words_up_to_degree(max_degree);
    proptest::collection::vec(-3i64..=3, words.len()).prop_map(move |cs| {
        Series::from_terms(
            words.iter().cloned().zip(
                cs.into_iter()
                    .map(|c| Rational::from_integer(BigInt::from(c))),
            ),
        )
    })
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof![Just(Letter::X0), Just(Letter::X1)], 0..=max_len)
        .prop_map(Word::new)
}

fn h_element() -> impl Strategy<Value = HElement> {
    let monomial = proptest::collection::vec(word(3), 0..=3).prop_map(CoordMonomial::from_factors);
    proptest::collection::vec((monomial, -3i64..=3), 1..=4).prop_map(|terms| {
        HElement::from_terms(
            terms
                .into_iter()
                .map(|(m, c)| (m, Rational::from_integer(BigInt::from(c)))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn character_is_multiplicative(c in series(7), g in h_element(), h in h_element()) {
        let ch = Character::new(c);
        prop_assert_eq!(evaluate(&h_mul(&g, &h), &ch), evaluate(&g, &ch) * evaluate(&h, &ch));
        prop_assert_eq!(evaluate(&HElement::one(), &ch), Rational::from_integer(1.into()));
    }

    #[test]
    fn antipode_is_convolution_inverse(g in h_element()) {
        // μ(S ⊗ id)Δ h = ε(h) 1
        let eps = g.terms().filter(|(m, _)| m.is_unit()).map(|(_, c)| c.clone()).sum::<Rational>();
        let lhs = coproduct(&g).map_left(|m| antipode(&HElement::from_monomial(m.clone()))).multiply();
        prop_assert_eq!(lhs, HElement::one().scale(&eps));
    }

    #[test]
    fn inverse_matches_fixpoint(c in series(6)) {
        prop_assert_eq!(group_inverse(&c, 6), group_inverse_fixpoint(&c, 6));
    }

    #[test]
    fn inverse_is_two_sided(c in series(6)) {
        let inv = group_inverse(&c, 6);
        prop_assert!(group_product(&c, &inv, 6).is_zero());
        prop_assert!(group_product(&inv, &c, 6).is_zero());
    }

    #[test]
    fn group_product_associative(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(
            group_product(&group_product(&a, &b, 5), &c, 5),
            group_product(&a, &group_product(&b, &c, 5), 5)
        );
    }

    #[test]
    fn unity_feedback_is_fixed_point(c in series(7)) {
        let e = unity_feedback(&c, 7);
        prop_assert_eq!(mod_compose(&c, &e, 7), e);
    }

    #[test]
    fn feedback_closes_the_loop(c in series(5), d in series(4)) {
        // y = c ∘̃ (d ∘ y)
        let y = feedback(&c, &d, 6);
        prop_assert_eq!(mod_compose(&c, &compose(&d, &y, 6), 6), y);
    }

    #[test]
    fn compose_left_linear(a in series(5), b in series(5), d in series(4)) {
        prop_assert_eq!(compose(&(&a + &b), &d, 6), &compose(&a, &d, 6) + &compose(&b, &d, 6));
    }

    #[test]
    fn shuffle_distributes(a in series(4), b in series(4), c in series(4)) {
        prop_assert_eq!(
            shuffle_series(&a, &(&b + &c)),
            &shuffle_series(&a, &b) + &shuffle_series(&a, &c)
        );
    }
}
