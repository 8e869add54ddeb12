//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use strange_core::bailey::{
    build_family_pair, closed_beta, invert_pair, shift_lemma, verify_pair, BasePair, Fam3Sign, ShiftKind,
    ALL_BASE_PAIRS,
};
use strange_core::cyclotomic::{CycField, CycNum};
use strange_core::families::{Family, ALL_FAMILIES};
use strange_core::identities::{build_identity, verify_identity, Identity};
use strange_core::qfunctions::{character, CharacterKind};
use strange_core::strange::{
    lvalue, quantum_check, strange_check, strange_spec, zagier_spec, QuantumId, StrangeSpec, TwistedPeriodic,
};
use strange_core::{QSeries, Rational};

type Check = Result<String, String>;

/// Title, time limit in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: strange_core::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn base_pairs() -> Check {
    let mut count = 0;
    for bp in ALL_BASE_PAIRS {
        for pair in [ok(bp.slater(), bp.name())?, bp.displayed()] {
            let report = ok(verify_pair(&pair, 8, 30), &pair.label)?;
            ensure(report.passed(), || format!("{}: {:?}", pair.label, report.failure))?;
            count += 1;
        }
    }
    Ok(format!("{count} pair checks, n <= 8, order 30"))
}

fn transform_lemmas() -> Check {
    for bp in [BasePair::Zagier, BasePair::Family4Seed] {
        let pair = ok(bp.slater(), bp.name())?;
        let key = ok(shift_lemma(&pair, &ShiftKind::Key), "key lemma")?;
        let step = ok(shift_lemma(&pair, &ShiftKind::OneMinusQn), "1 - q^n")?;
        let composed = ok(
            shift_lemma(&step, &ShiftKind::IndexShift { check_order: 20 }),
            "index shift",
        )?;
        for n in 0..=5 {
            ensure(
                ok(key.alpha.get(n, 20), "alpha")? == ok(composed.alpha.get(n, 20), "alpha")?
                    && ok(key.beta.get(n, 20), "beta")? == ok(composed.beta.get(n, 20), "beta")?,
                || format!("{} differs at n={n}", bp.name()),
            )?;
        }
    }
    let fp = ok(build_family_pair(Family::Hikami, 2, 1), "hikami pair")?;
    let alpha = invert_pair(&fp.iterated.beta, &fp.iterated.rel_param, fp.iterated.base);
    for n in 0..=4 {
        ensure(
            ok(alpha.get(n, 20), "inverted")? == ok(fp.iterated.alpha.get(n, 20), "alpha")?,
            || format!("inversion differs at n={n}"),
        )?;
    }
    Ok("composition on 2 base pairs, n <= 5; inversion round trip, n <= 4".into())
}

fn iterated_pairs() -> Check {
    let mut count = 0;
    for family in ALL_FAMILIES {
        for k in 1..=3 {
            for a in family.a_range(k) {
                let fp = ok(build_family_pair(family, k, a), &format!("{family} k={k} a={a}"))?;
                for pair in [&fp.iterated, &fp.displayed] {
                    let report = ok(verify_pair(pair, 4, 25), &pair.label)?;
                    ensure(report.passed(), || format!("{}: {:?}", pair.label, report.failure))?;
                }
                for n in 0..=4 {
                    ensure(
                        ok(closed_beta(family, k, a, n, 25), "closed beta")?
                            == ok(fp.iterated.beta.get(n, 25), "beta")?,
                        || format!("{family} k={k} a={a}: closed beta differs at n={n}"),
                    )?;
                }
                if family == Family::Fam3 {
                    ensure(fp.fam3_sign == Some(Fam3Sign::Minus), || {
                        format!("family3 sign {:?}", fp.fam3_sign)
                    })?;
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} family pairs, n <= 4, order 25, family3 sign minus"))
}

fn partitions(allowed: &[u32], order: u32) -> Vec<i64> {
    let mut counts = vec![0i64; order as usize + 1];
    fn walk(total: u32, max_idx: usize, allowed: &[u32], order: u32, counts: &mut [i64]) {
        counts[total as usize] += 1;
        for (idx, &p) in allowed.iter().enumerate().take(max_idx + 1) {
            if total + p <= order {
                walk(total + p, idx, allowed, order, counts);
            }
        }
    }
    walk(0, allowed.len().saturating_sub(1), allowed, order, &mut counts);
    counts
}

fn as_ints(f: &QSeries) -> Vec<i64> {
    f.to_rationals()
        .unwrap_or_default()
        .iter()
        .map(|r| r.to_string().parse().unwrap_or(i64::MIN))
        .collect()
}

fn formal(id: Identity, order: u32) -> Result<(), String> {
    let report = ok(verify_identity(&id, order), &id.to_string())?;
    ensure(report.passed(), || format!("{id}: {:?}", report.first_failure()))
}

fn formal_identities() -> Check {
    let mut count = 0;
    for k in 2..=4 {
        for i in 1..=k {
            formal(Identity::AndrewsGordon { k, i }, 50)?;
            count += 1;
        }
        for a in 0..k {
            formal(
                Identity::Corollary {
                    family: Family::Hikami,
                    k,
                    a,
                },
                40,
            )?;
            count += 1;
        }
    }
    for family in [Family::Fam1, Family::Fam2, Family::Fam3, Family::Fam4] {
        for k in 2..=3 {
            for a in family.a_range(k) {
                formal(Identity::Corollary { family, k, a }, 40)?;
                count += 1;
            }
        }
    }
    for k in 0..=6 {
        for shifted in [false, true] {
            formal(Identity::QbinomGenerating { k, shifted }, 25)?;
            count += 1;
        }
    }
    for i in 1..=2u32 {
        let parts: Vec<u32> = (1..=30).filter(|n| ![0, i, 5 - i].contains(&(n % 5))).collect();
        let sides = ok(
            build_identity(&Identity::AndrewsGordon { k: 2, i }, 30),
            "andrews_gordon",
        )?;
        ensure(as_ints(&sides.rhs) == partitions(&parts, 30), || {
            format!("partition counts differ for i={i}")
        })?;
    }
    Ok(format!("{count} identities; partition oracle matches 30 coefficients"))
}

fn x_identities() -> Check {
    let five = [Family::Hikami, Family::Fam1, Family::Fam2, Family::Fam3, Family::Fam4];
    for family in five {
        formal(Identity::XIdentity { family, k: 1, a: 0 }, 30)?;
        formal(Identity::SumOfTails { family, k: 1, a: 0 }, 30)?;
    }
    Ok("zagier and four k=1 families, with sum-of-tails derivatives, order 30".into())
}

fn strange_case(spec: &StrangeSpec, root: u32, slowest: &mut Duration) -> Result<(), String> {
    let start = Instant::now();
    let report = ok(strange_check(spec, root, 4), &spec.name)?;
    *slowest = (*slowest).max(start.elapsed());
    ensure(report.passed(), || {
        format!("{} k={} a={} N={root}: {:?}", spec.name, spec.k, spec.a, report.outcome)
    })?;
    ensure(start.elapsed() < Duration::from_secs(60), || {
        format!("{} N={root} took over 60 s", spec.name)
    })
}

fn strange_identities() -> Check {
    let mut slowest = Duration::ZERO;
    let mut count = 0;
    let zagier = ok(zagier_spec(), "zagier")?;
    for root in 1..=5 {
        strange_case(&zagier, root, &mut slowest)?;
        count += 1;
    }
    let plan: [(Family, u32, &[u32]); 6] = [
        (Family::Hikami, 3, &[1, 2, 3]),
        (Family::Fam1, 3, &[1, 3, 5]),
        (Family::Fam2, 2, &[1, 3, 5]),
        (Family::Fam3, 2, &[1, 3, 5]),
        (Family::Fam4, 2, &[2, 4]),
        (Family::Fam5, 3, &[1, 3]),
    ];
    for (family, k_max, roots) in plan {
        for k in 1..=k_max {
            for a in family.a_range(k) {
                let spec = ok(strange_spec(family, k, a), family.name())?;
                for &root in roots {
                    strange_case(&spec, root, &mut slowest)?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!(
        "{count} checks at t-order 4, slowest {} ms",
        slowest.as_millis()
    ))
}

fn quantum_identities() -> Check {
    let mut ids = vec![QuantumId::Fam1VsFam2 { k: 1 }, QuantumId::Fam1VsFam2 { k: 2 }];
    for k in 1..=2 {
        for a in 0..k {
            ids.push(QuantumId::Fam5VsFam3 { k, a });
            ids.push(QuantumId::Fam5VsHikami { k, a });
        }
    }
    for &id in &ids {
        for root in [1, 3, 5] {
            let report = ok(quantum_check(id, root), &id.to_string())?;
            ensure(report.passed(), || {
                format!("{id} N={root}: {:?} vs {:?}", report.lhs, report.rhs)
            })?;
        }
    }
    let field = CycField::get(3);
    let pinned = &CycNum::from_rational(&field, Rational::from_int(3))
        - &CycNum::zeta_power(&field, 1).scale(&Rational::from_int(2));
    let report = ok(quantum_check(QuantumId::Fam1VsFam2 { k: 1 }, 3), "fam1_vs_fam2")?;
    ensure(
        report.lhs.as_ref() == Some(&pinned) && report.rhs.as_ref() == Some(&pinned),
        || format!("pinned value: {:?} vs {:?}", report.lhs, report.rhs),
    )?;
    Ok(format!(
        "{} identities at N = 1, 3, 5; fam1_vs_fam2 k=1 N=3 equals 3 - 2z",
        ids.len()
    ))
}

fn lvalue_oracle() -> Check {
    let chi12 = ok(character(CharacterKind::Zagier12), "chi12")?.values().to_vec();
    let chi4: Vec<Rational> = [1, 0, -1, 0].iter().map(|v| Rational::from_int(*v)).collect();
    let t = 0.05f64;
    let mut worst = 0.0f64;
    for values in [chi12, chi4] {
        let chi = |n: usize| values[n % values.len()].to_f64();
        let psi = TwistedPeriodic::from_rationals(&values);
        let direct: f64 = (1..20_000).map(|n| chi(n) * (-(n as f64) * t).exp()).sum();
        let mut series = 0.0;
        let mut fact = 1.0;
        for m in 0..=5usize {
            if m > 0 {
                fact *= m as f64;
            }
            let l = lvalue(&psi, m).as_rational().ok_or("L-value is not rational")?.to_f64();
            series += l * (-t).powi(m as i32) / fact;
        }
        worst = worst.max((direct - series).abs());
    }
    ensure(worst < 1e-6, || format!("largest deviation {worst:e}"))?;
    Ok(format!(
        "chi12 and chi4, L(-m) for m <= 5 at t = 0.05, deviation {worst:.1e}"
    ))
}

fn known_values() -> Check {
    let chi12 = ok(character(CharacterKind::Zagier12), "chi12")?;
    let l = lvalue(&TwistedPeriodic::from_rationals(chi12.values()), 1);
    ensure(l.as_rational() == Some(Rational::from_int(-2)), || {
        format!("L(-1, chi12) = {l}")
    })?;
    let zagier = ok(zagier_spec(), "zagier")?;
    let fam1 = ok(strange_spec(Family::Fam1, 1, 0), "family1")?;
    for (spec, root, value) in [(&zagier, 1, 1), (&zagier, 2, 3), (&fam1, 1, 1)] {
        let report = ok(strange_check(spec, root, 0), &spec.name)?;
        let want = Some(Rational::from_int(value));
        ensure(
            report.lhs[0].as_rational() == want && report.rhs[0].as_rational() == want,
            || format!("{} N={root}: {} vs {}", spec.name, report.lhs[0], report.rhs[0]),
        )?;
    }
    Ok("L(-1, chi12) = -2; zagier N=1 -> 1, N=2 -> 3; family1 k=1 N=1 -> 1".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("base Bailey pairs", 10, base_pairs),
        ("transform lemmas", 5, transform_lemmas),
        ("iterated family pairs", 60, iterated_pairs),
        ("formal identities", 120, formal_identities),
        ("x-identities and sums of tails", 30, x_identities),
        ("strange identities at roots of unity", 60 * 200, strange_identities),
        ("quantum identities", 30, quantum_identities),
        ("L-value numerical oracle", 1, lvalue_oracle),
        ("known values", 10, known_values),
    ];
    let mut failed = 0;
    for (idx, (title, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!(
                    "{detail}; took {:.2} s, limit {limit} s",
                    elapsed.as_secs_f64()
                ))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!(
                "PASS criterion {}: {title} ({detail}; {:.2} s)",
                idx + 1,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title} ({why})", idx + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
