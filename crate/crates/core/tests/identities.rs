use proptest::prelude::*;
use strange_core::families::{Family, ALL_FAMILIES};
use strange_core::identities::{
    build_identity, compare_sides, qbinom_generating, sum_of_tails, verify_identity, x_identity, Identity,
};
use strange_core::qfunctions::Monomial;
use strange_core::{QSeries, Rational};

/// Partitions of `0..=order` into parts from `allowed`, by direct recursion.
fn count_partitions(allowed: &[u32], order: u32) -> Vec<i64> {
    let mut counts = vec![0i64; order as usize + 1];
    fn walk(rest: u32, max_part: usize, allowed: &[u32], total: u32, counts: &mut [i64]) {
        counts[total as usize] += 1;
        for (idx, &p) in allowed.iter().enumerate().take(max_part + 1) {
            if p <= rest {
                walk(rest - p, idx, allowed, total + p, counts);
            }
        }
    }
    walk(order, allowed.len().saturating_sub(1), allowed, 0, &mut counts);
    counts
}

/// Partitions with parts differing by at least two and smallest part at least `min`.
fn count_gap_partitions(min: u32, order: u32) -> Vec<i64> {
    let mut counts = vec![0i64; order as usize + 1];
    fn walk(total: u32, next_min: u32, order: u32, counts: &mut [i64]) {
        counts[total as usize] += 1;
        let mut p = next_min;
        while total + p <= order {
            walk(total + p, p + 2, order, counts);
            p += 1;
        }
    }
    walk(0, min, order, &mut counts);
    counts
}

fn ints(f: &QSeries) -> Vec<i64> {
    f.to_rationals()
        .unwrap()
        .iter()
        .map(|r| r.to_string().parse().unwrap())
        .collect()
}

fn assert_verified(id: Identity, order: u32) {
    let report = verify_identity(&id, order).unwrap();
    assert!(report.passed(), "{id}: {:?}", report.first_failure());
}

#[test]
fn rogers_ramanujan_against_partition_counts() {
    let order = 30;
    for i in 1..=2u32 {
        let parts: Vec<u32> = (1..=order).filter(|n| ![0, i, 5 - i].contains(&(n % 5))).collect();
        let product = count_partitions(&parts, order);
        let gaps = count_gap_partitions(3 - i, order);
        assert_eq!(product, gaps);
        let sides = build_identity(&Identity::AndrewsGordon { k: 2, i }, order).unwrap();
        assert_eq!(ints(&sides.lhs), product);
        assert_eq!(ints(&sides.rhs), product);
    }
}

#[test]
fn andrews_gordon_low_coefficients() {
    let sides = build_identity(&Identity::AndrewsGordon { k: 2, i: 2 }, 6).unwrap();
    assert_eq!(ints(&sides.lhs), vec![1, 1, 1, 1, 2, 2, 3]);
    let sides = build_identity(&Identity::AndrewsGordon { k: 2, i: 1 }, 6).unwrap();
    assert_eq!(ints(&sides.lhs), vec![1, 0, 1, 1, 1, 1, 2]);
}

#[test]
fn andrews_gordon_to_order_50() {
    for k in 2..=4 {
        for i in 1..=k {
            assert_verified(Identity::AndrewsGordon { k, i }, 50);
        }
    }
}

#[test]
fn ag_variant_three_way() {
    for k in 2..=4 {
        for a in 0..k {
            let id = Identity::Corollary {
                family: Family::Hikami,
                k,
                a,
            };
            let report = verify_identity(&id, 40).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.first_failure());
            let labels: Vec<_> = report.comparisons.iter().map(|c| c.label.as_str()).collect();
            assert_eq!(labels, ["rhs", "partial_theta", "residue_product"]);
        }
    }
    let sides = build_identity(
        &Identity::Corollary {
            family: Family::Hikami,
            k: 2,
            a: 0,
        },
        0,
    )
    .unwrap();
    assert_eq!(ints(&sides.lhs), vec![1]);
    assert_eq!(ints(&sides.rhs), vec![1]);
}

#[test]
fn family_corollaries_to_order_40() {
    for family in [Family::Fam1, Family::Fam2, Family::Fam3, Family::Fam4] {
        for k in 2..=4 {
            for a in family.a_range(k) {
                assert_verified(Identity::Corollary { family, k, a }, 40);
            }
        }
    }
}

#[test]
fn perturbed_rhs_is_located() {
    let id = Identity::AndrewsGordon { k: 3, i: 2 };
    let mut sides = build_identity(&id, 30).unwrap();
    sides.rhs = &sides.rhs + &QSeries::monomial(Rational::one(), 0, 17, 30);
    let report = compare_sides(&id.to_string(), &sides, 30);
    let failure = report.first_failure().unwrap();
    assert_eq!(failure.label, "rhs");
    let m = failure.mismatch.as_ref().unwrap();
    assert_eq!((m.q_degree, m.x_degree), (17, 0));
    assert_eq!(&m.got - &m.expected, Rational::one());
}

#[test]
fn qbinom_generating_up_to_k6() {
    for k in 0..=6 {
        for shifted in [false, true] {
            let (lhs, rhs) = qbinom_generating(k, shifted, &Monomial::q(1, 1), 25).unwrap();
            assert_eq!(lhs, rhs, "k={k} shifted={shifted}");
        }
    }
    let (unshifted, _) = qbinom_generating(0, false, &Monomial::q(1, 1), 20).unwrap();
    let (shifted, _) = qbinom_generating(0, true, &Monomial::q(1, 1), 20).unwrap();
    assert_eq!(unshifted, shifted);
}

#[test]
fn x_identities_for_every_family() {
    for family in ALL_FAMILIES.into_iter().filter(|f| *f != Family::Fam5) {
        for k in 1..=3 {
            for a in family.a_range(k) {
                let order = if k == 1 { 30 } else { 20 };
                let sides = x_identity(family, k, a, order).unwrap();
                let report = compare_sides("x_identity", &sides, order);
                assert!(report.passed(), "{family} k={k} a={a}: {:?}", report.first_failure());
            }
        }
    }
}

#[test]
fn zagier_x_identity_matches_display() {
    let sides = x_identity(Family::Hikami, 1, 0, 30).unwrap();
    let report = compare_sides("zagier", &sides, 30);
    assert!(report.passed());
    assert_eq!(report.comparisons[1].label, "displayed");
}

#[test]
fn sums_of_tails_rebuilt_from_lambert_series() {
    for family in [Family::Hikami, Family::Fam1, Family::Fam2, Family::Fam3, Family::Fam4] {
        let sides = sum_of_tails(family, 1, 0, 30).unwrap();
        let report = compare_sides("sum_of_tails", &sides, 30);
        assert!(report.passed(), "{family}: {:?}", report.first_failure());
        assert_eq!(report.comparisons.len(), 3);
    }
    for (family, k, a) in [(Family::Hikami, 2, 1), (Family::Fam3, 2, 0), (Family::Fam4, 2, 1)] {
        let sides = sum_of_tails(family, k, a, 20).unwrap();
        assert!(compare_sides("sum_of_tails", &sides, 20).passed());
    }
}

#[test]
fn family5_has_no_formal_identities() {
    assert!(x_identity(Family::Fam5, 3, 0, 10).is_err());
    let parsed = Identity::from_parts(
        "strange",
        &[("family".into(), "family5".into()), ("k".into(), "3".into())],
    );
    assert!(verify_identity(&parsed.unwrap(), 10).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn qbinom_generating_under_scaled_substitution(k in 0u32..5, shifted: bool, c in -3i64..=3, e in 1u32..4) {
        prop_assume!(c != 0);
        let (lhs, rhs) = qbinom_generating(k, shifted, &Monomial::q(c, e), 18).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn x_identity_survives_x_to_q_power(family_idx in 0usize..5, e in 1u32..3) {
        let family = ALL_FAMILIES[family_idx];
        let sides = x_identity(family, 1, 0, 16).unwrap();
        let subst = strange_core::series::Substitution::XToMonomial { coeff: Rational::one(), q_exp: e };
        prop_assert_eq!(sides.lhs.substitute(&subst), sides.rhs.substitute(&subst));
    }
}
