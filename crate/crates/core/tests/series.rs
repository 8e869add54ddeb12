use proptest::prelude::*;
use strange_core::series::{Substitution, XPoly};
use strange_core::{QSeries, Rational};

const ORDER: u32 = 12;

fn xpoly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(-3i64..=3, 1..=3)
        .prop_map(|cs| XPoly::from_coeffs(cs.into_iter().map(Rational::from_int).collect()))
}

fn series() -> impl Strategy<Value = QSeries> {
    (prop::collection::vec((0u32..=ORDER, xpoly()), 0..6), 6u32..=ORDER)
        .prop_map(|(terms, order)| QSeries::from_terms(terms, order))
}

/// A series in `q` alone with constant term 1 or -2.
fn unit() -> impl Strategy<Value = QSeries> {
    (prop::bool::ANY, prop::collection::vec(-4i64..=4, 0..=ORDER as usize)).prop_map(|(neg, rest)| {
        let mut coeffs = vec![if neg { -2 } else { 1 }];
        coeffs.extend(rest);
        QSeries::from_ints(&coeffs, ORDER)
    })
}

proptest! {
    #[test]
    fn ring_laws(f in series(), g in series(), h in series()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn unit_inverse_is_two_sided(u in unit()) {
        let inv = u.invert_unit().unwrap();
        prop_assert_eq!(&u * &inv, QSeries::one(ORDER));
        prop_assert_eq!(&inv * &u, QSeries::one(ORDER));
    }

    #[test]
    fn q_power_substitution_is_multiplicative(f in series(), g in series(), m in 1u32..4) {
        let sub = Substitution::QPower(m);
        prop_assert_eq!((&f * &g).substitute(&sub), &f.substitute(&sub) * &g.substitute(&sub));
        prop_assert_eq!((&f + &g).substitute(&sub), &f.substitute(&sub) + &g.substitute(&sub));
    }

    #[test]
    fn x_derivative_obeys_leibniz(f in series(), g in series()) {
        let lhs = (&f * &g).differentiate_x();
        let rhs = &(&f.differentiate_x() * &g) + &(&f * &g.differentiate_x());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn x_substitutions_commute_with_products(f in series(), g in series(), c in -2i64..=2, e in 1u32..3) {
        for sub in [Substitution::XToOne, Substitution::XToMonomial { coeff: Rational::from_int(c), q_exp: e }] {
            prop_assert_eq!((&f * &g).substitute(&sub), &f.substitute(&sub) * &g.substitute(&sub));
        }
    }
}
