use feedback_hopf::abel::PolyFunction;
use feedback_hopf::hopf::{CoordMonomial, HElement};
use feedback_hopf::{Letter, Rational, Series, Word};
use feedback_hopf_cli::parse::{parse_h_element, parse_poly, parse_series, parse_word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof![Just(Letter::X0), Just(Letter::X1)], 0..8)
        .prop_map(Word::new)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn series() -> impl Strategy<Value = Series> {
    (
        proptest::collection::vec((word(), rational()), 0..8),
        proptest::option::of(1u32..20),
    )
        .prop_map(|(terms, truncation)| {
            let s = Series::from_terms(terms);
            match truncation {
                Some(n) => s.truncated(n),
                None => s,
            }
        })
}

fn h_element() -> impl Strategy<Value = HElement> {
    let monomial = proptest::collection::vec(word(), 0..4).prop_map(CoordMonomial::from_factors);
    proptest::collection::vec((monomial, rational()), 0..6).prop_map(HElement::from_terms)
}

fn poly() -> impl Strategy<Value = PolyFunction> {
    proptest::collection::vec(rational(), 0..6).prop_map(PolyFunction::new)
}

proptest! {
    #[test]
    fn words_round_trip(w in word()) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn series_round_trip(s in series()) {
        prop_assert_eq!(parse_series(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn h_elements_round_trip(h in h_element()) {
        prop_assert_eq!(parse_h_element(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn polys_round_trip(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}
