use proptest::prelude::*;
use strange_core::cyclotomic::{
    cyclotomic_poly, eval_terminating_sum, eval_with_cutoff, q_to_t, totient, CycField, CycNum, RootEvaluator, TSeries,
};
use strange_core::families::{strange_lhs_spec, Family};
use strange_core::multisum::{evaluate, evaluate_series, OuterRange};
use strange_core::{Error, Rational};

fn rational_coeffs(t: &TSeries) -> Vec<Rational> {
    t.coeffs().iter().map(|c| c.as_rational().expect("rational")).collect()
}

fn cyc(m: u32) -> impl Strategy<Value = CycNum> {
    let d = totient(m) as usize;
    proptest::collection::vec((-6i64..=6, 1i64..=4), d).prop_map(move |v| {
        let field = CycField::get(m);
        CycNum::from_coords(&field, v.into_iter().map(|(n, d)| Rational::new(n, d)).collect())
    })
}

fn field_triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    (1u32..=24).prop_flat_map(|m| (cyc(m), cyc(m), cyc(m)))
}

#[test]
fn cyclotomic_polynomials_divide_x_m_minus_one() {
    for m in 1..=40u32 {
        let phi = cyclotomic_poly(m);
        assert_eq!(phi.len() - 1, totient(m) as usize, "degree of Phi_{m}");
        assert_eq!(*phi.last().unwrap(), 1);
        // zeta^m = 1 in the field
        let field = CycField::get(m);
        let z = CycNum::zeta_power(&field, 1);
        let mut power = CycNum::one(&field);
        for _ in 0..m {
            power = &power * &z;
        }
        assert_eq!(power, CycNum::one(&field));
    }
}

#[test]
fn zagier_sum_at_small_roots() {
    let spec = strange_lhs_spec(Family::Hikami, 1, 0).unwrap();
    let at_one = eval_terminating_sum(&spec, 1, 0).unwrap();
    assert_eq!(rational_coeffs(&at_one), vec![Rational::one()]);
    let at_minus_one = eval_terminating_sum(&spec, 2, 0).unwrap();
    assert_eq!(rational_coeffs(&at_minus_one), vec![Rational::from_int(3)]);
}

#[test]
fn vanishing_denominator_is_reported() {
    let spec = strange_lhs_spec(Family::Fam1, 1, 0).unwrap();
    assert!(matches!(
        eval_terminating_sum(&spec, 2, 0),
        Err(Error::DenominatorVanishes { root: 2, .. })
    ));
    assert!(eval_terminating_sum(&spec, 3, 0).is_ok());
}

#[test]
fn full_power_of_q_loses_the_root() {
    for m in [3u32, 4, 5] {
        let q = q_to_t(m, 1, 2);
        let mut power = TSeries::one(q.field(), 2);
        for _ in 0..m {
            power = &power * &q;
        }
        let m = m as i64;
        assert_eq!(
            rational_coeffs(&power),
            vec![Rational::one(), Rational::from_int(-m), Rational::new(m * m, 2)]
        );
    }
}

#[test]
fn cutoff_stability() {
    for spec in [
        strange_lhs_spec(Family::Hikami, 1, 0).unwrap(),
        strange_lhs_spec(Family::Hikami, 2, 0).unwrap(),
        strange_lhs_spec(Family::Hikami, 2, 1).unwrap(),
    ] {
        for t_order in 0..=2 {
            let base = eval_terminating_sum(&spec, 3, t_order).unwrap();
            let longer = eval_with_cutoff(&spec, 3, t_order, 3 * (t_order + 3)).unwrap();
            assert_eq!(base, longer);
        }
    }
}

#[test]
fn root_evaluation_matches_polynomial_evaluation() {
    // Fixed outer index gives a polynomial in q; evaluate it both ways.
    for (family, k, a) in [(Family::Hikami, 1, 0), (Family::Hikami, 2, 1), (Family::Hikami, 3, 0)] {
        let spec = strange_lhs_spec(family, k, a).unwrap();
        for n in 0..4 {
            let poly = evaluate_series(&spec, OuterRange::Fixed(n), 200).unwrap();
            for m in 1..=6u32 {
                if !family.validity(k).admits_root(m) {
                    continue;
                }
                let field = CycField::get(m);
                let direct = field.eval_qseries(&poly).unwrap();
                let mut eval = RootEvaluator::new(m, 0);
                let via_t = evaluate(&spec, OuterRange::Fixed(n), &mut eval).unwrap();
                assert_eq!(via_t.coeff(0), &direct, "{family} k={k} a={a} n={n} M={m}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn inverse_is_two_sided((a, _, _) in field_triple()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, CycNum::one(a.field()));
    }

    #[test]
    fn field_axioms((a, b, c) in field_triple()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn lifting_is_a_ring_map((a, b, _) in field_triple(), factor in 1u32..4) {
        let l = a.order() * factor;
        let (la, lb) = (a.lift(l).unwrap(), b.lift(l).unwrap());
        prop_assert_eq!((&a * &b).lift(l).unwrap(), &la * &lb);
        prop_assert_eq!((&a + &b).lift(l).unwrap(), &la + &lb);
    }
}
