use strange_core::bailey::{
    bailey_step, build_family_pair, closed_beta, invert_pair, shift_lemma, verify_pair, BasePair, Fam3Sign, ShiftKind,
    ALL_BASE_PAIRS, Rho,
};
use strange_core::families::{Family, ALL_FAMILIES};
use strange_core::qfunctions::Monomial;
use strange_core::Error;

#[test]
fn base_pairs_hold_to_n8_order30() {
    for bp in ALL_BASE_PAIRS {
        for pair in [bp.slater().unwrap(), bp.displayed()] {
            let report = verify_pair(&pair, 8, 30).unwrap();
            assert!(report.passed(), "{}: {:?}", pair.label, report.failure);
        }
    }
}

#[test]
fn key_lemma_factors_through_shift() {
    for bp in [BasePair::Zagier, BasePair::Family4Seed] {
        let pair = bp.slater().unwrap();
        let key = shift_lemma(&pair, &ShiftKind::Key).unwrap();
        let one_minus = shift_lemma(&pair, &ShiftKind::OneMinusQn).unwrap();
        assert!(one_minus.beta.get(0, 20).unwrap().is_zero());
        let composed = shift_lemma(&one_minus, &ShiftKind::IndexShift { check_order: 20 }).unwrap();
        for n in 0..=5 {
            assert_eq!(key.alpha.get(n, 20).unwrap(), composed.alpha.get(n, 20).unwrap());
            assert_eq!(key.beta.get(n, 20).unwrap(), composed.beta.get(n, 20).unwrap());
        }
        assert!(verify_pair(&key, 5, 20).unwrap().passed());
    }
}

#[test]
fn inversion_round_trips_on_hikami_pair() {
    let fp = build_family_pair(Family::Hikami, 2, 1).unwrap();
    let pair = &fp.iterated;
    let alpha = invert_pair(&pair.beta, &pair.rel_param, pair.base);
    for n in 0..=4 {
        assert_eq!(alpha.get(n, 20).unwrap(), pair.alpha.get(n, 20).unwrap(), "n = {n}");
    }
}

#[test]
fn family_pairs_verify_and_match_closed_beta() {
    for family in ALL_FAMILIES {
        for k in 1..=3 {
            for a in family.a_range(k) {
                let fp = build_family_pair(family, k, a).unwrap();
                for pair in [&fp.iterated, &fp.displayed] {
                    let report = verify_pair(pair, 4, 25).unwrap();
                    assert!(report.passed(), "{}: {:?}", pair.label, report.failure);
                }
                for n in 0..=4 {
                    assert_eq!(
                        closed_beta(family, k, a, n, 25).unwrap(),
                        fp.iterated.beta.get(n, 25).unwrap(),
                        "{family} k={k} a={a} n={n}"
                    );
                }
                if family == Family::Fam3 {
                    assert_eq!(fp.fam3_sign, Some(Fam3Sign::Minus));
                }
            }
        }
    }
}

#[test]
fn hikami_k1_is_zagier_shaped() {
    let fp = build_family_pair(Family::Hikami, 1, 0).unwrap();
    let zagier = BasePair::Zagier.displayed();
    for n in 0..=5 {
        assert_eq!(fp.displayed.alpha.get(n, 20).unwrap(), zagier.alpha.get(n, 20).unwrap());
    }
}

#[test]
fn derived_pairs_stay_pairs() {
    let rhos = [
        (Rho::Infinity, Rho::Infinity),
        (Rho::Finite(Monomial::xq(-1, 1, 1)), Rho::Infinity),
        (Rho::Finite(Monomial::q(-1, 1)), Rho::Infinity),
    ];
    for bp in ALL_BASE_PAIRS {
        let pair = bp.normalized().unwrap();
        for (idx, (rho1, rho2)) in rhos.iter().enumerate() {
            // A finite rho can leave a non-unit like (1 + x) in a denominator.
            let stepped = match bailey_step(&pair, rho1, rho2) {
                Err(Error::BadSpecialization(_)) if idx > 0 => continue,
                other => other.unwrap(),
            };
            let report = verify_pair(&stepped, 5, 25).unwrap();
            assert!(report.passed(), "{} step {rho1:?} {rho2:?}: {:?}", bp.name(), report.failure);
        }
        for kind in [ShiftKind::GammaStar(None), ShiftKind::GammaStar(Some(Monomial::q(-1, 1)))] {
            let shifted = shift_lemma(&pair, &kind).unwrap();
            let report = verify_pair(&shifted, 5, 25).unwrap();
            assert!(report.passed(), "{} {kind:?}: {:?}", bp.name(), report.failure);
        }
    }
}
