//! Catalog of formal q-series identities, each built as a pair of truncated
//! series (plus alternative forms of the same side where they exist).

use std::fmt;

use crate::error::{Error, Result};
use crate::families::{corollary_spec, family_theta, single_sum_factors, x_identity_specs, Family, Validity};
use crate::multisum::{evaluate_series, factor_product, FactorKind, MultisumSpec, OuterRange, PochFactor};
use crate::qfunctions::{
    lambert_sum, partial_theta_qseries, poch_infinite, poch_inverse, qbinom, triple_product, Monomial, PartialTheta,
    TripleProductArg,
};
use crate::rational::Rational;
use crate::series::{Mismatch, QSeries, Substitution};

/// A named identity with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Andrews-Gordon: depth `k-1` multisum against the product over
    /// `n != 0, +-i (mod 2k+1)`.
    AndrewsGordon { k: u32, i: u32 },
    /// Rogers-Ramanujan type corollary of a family; for [`Family::Hikami`]
    /// this is the Andrews-Gordon variant.
    Corollary { family: Family, k: u32, a: u32 },
    /// `sum_n x^n [n over k]` (or `[n+1 over k]`) at `x = q`.
    QbinomGenerating { k: u32, shifted: bool },
    /// The x-deformed identity behind a family's strange identity.
    XIdentity { family: Family, k: u32, a: u32 },
    /// The x-identity differentiated at `x = 1`.
    SumOfTails { family: Family, k: u32, a: u32 },
    /// A strange identity; holds only at roots of unity.
    Strange { family: Family, k: u32, a: u32 },
}

/// Identity names accepted by [`Identity::from_parts`].
pub const IDENTITY_NAMES: [&str; 11] = [
    "andrews_gordon",
    "ag_variant",
    "family1_rr",
    "family2_rr",
    "family3_rr",
    "family4_rr",
    "qbinom_generating",
    "x_identity",
    "sum_of_tails",
    "strange",
    "zagier",
];

fn corollary_name(family: Family) -> &'static str {
    match family {
        Family::Hikami => "ag_variant",
        Family::Fam1 => "family1_rr",
        Family::Fam2 => "family2_rr",
        Family::Fam3 => "family3_rr",
        Family::Fam4 => "family4_rr",
        Family::Fam5 => "family5_rr",
    }
}

impl Identity {
    /// Build an identity from its name and `key=value` parameters
    /// (`k`, `a`, `i`, `shifted`, `family`).
    pub fn from_parts(name: &str, params: &[(String, String)]) -> Result<Identity> {
        let lookup = |key: &str| params.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        let number = |key: &str, default: Option<u32>| -> Result<u32> {
            match lookup(key) {
                Some(v) => v
                    .parse()
                    .map_err(|_| Error::BadParams(format!("{key}={v} is not a natural number"))),
                None => default.ok_or_else(|| Error::BadParams(format!("{name} needs {key}="))),
            }
        };
        let family = || -> Result<Family> {
            lookup("family")
                .ok_or_else(|| Error::BadParams(format!("{name} needs family=")))?
                .parse()
        };
        for (key, _) in params {
            if !["k", "a", "i", "shifted", "family"].contains(&key.as_str()) {
                return Err(Error::BadParams(format!("unknown parameter {key:?} for {name}")));
            }
        }
        let id = match name {
            "andrews_gordon" => Identity::AndrewsGordon {
                k: number("k", None)?,
                i: number("i", None)?,
            },
            "ag_variant" | "family1_rr" | "family2_rr" | "family3_rr" | "family4_rr" => {
                let family = match name {
                    "ag_variant" => Family::Hikami,
                    "family1_rr" => Family::Fam1,
                    "family2_rr" => Family::Fam2,
                    "family3_rr" => Family::Fam3,
                    _ => Family::Fam4,
                };
                Identity::Corollary {
                    family,
                    k: number("k", None)?,
                    a: number("a", Some(0))?,
                }
            }
            "qbinom_generating" => Identity::QbinomGenerating {
                k: number("k", None)?,
                shifted: number("shifted", Some(0))? != 0,
            },
            "x_identity" => Identity::XIdentity {
                family: family()?,
                k: number("k", None)?,
                a: number("a", Some(0))?,
            },
            "sum_of_tails" => Identity::SumOfTails {
                family: family()?,
                k: number("k", None)?,
                a: number("a", Some(0))?,
            },
            "strange" => Identity::Strange {
                family: family()?,
                k: number("k", None)?,
                a: number("a", Some(0))?,
            },
            "zagier" => Identity::Strange {
                family: Family::Hikami,
                k: 1,
                a: 0,
            },
            _ => return Err(Error::UnknownIdentity(name.to_string())),
        };
        id.check_params()?;
        Ok(id)
    }

    pub fn check_params(&self) -> Result<()> {
        match *self {
            Identity::AndrewsGordon { k, i } => {
                if k < 2 || i < 1 || i > k {
                    return Err(Error::BadParams(format!(
                        "andrews_gordon needs k >= 2 and 1 <= i <= k, got k={k} i={i}"
                    )));
                }
                Ok(())
            }
            Identity::Corollary { family, k, a } => {
                if family == Family::Fam5 || k < 2 {
                    return Err(Error::BadParams(format!(
                        "{} needs k >= 2, got k={k}",
                        corollary_name(family)
                    )));
                }
                family.validate(k, a)
            }
            Identity::QbinomGenerating { .. } => Ok(()),
            Identity::XIdentity { family, k, a } | Identity::SumOfTails { family, k, a } => {
                if family == Family::Fam5 {
                    return Err(Error::BadParams("family5 has no x-identity".into()));
                }
                family.validate(k, a)
            }
            Identity::Strange { family, k, a } => family.validate(k, a),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Identity::AndrewsGordon { .. } => "andrews_gordon",
            Identity::Corollary { family, .. } => corollary_name(*family),
            Identity::QbinomGenerating { .. } => "qbinom_generating",
            Identity::XIdentity { .. } => "x_identity",
            Identity::SumOfTails { .. } => "sum_of_tails",
            Identity::Strange { .. } => "strange",
        }
    }

    pub fn validity(&self) -> Validity {
        match self {
            Identity::Strange { family, k, .. } => family.validity(*k),
            _ => Validity::Formal,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Identity::AndrewsGordon { k, i } => write!(f, "andrews_gordon k={k} i={i}"),
            Identity::Corollary { family, k, a } => write!(f, "{} k={k} a={a}", corollary_name(family)),
            Identity::QbinomGenerating { k, shifted } => {
                write!(f, "qbinom_generating k={k} shifted={}", u8::from(shifted))
            }
            Identity::XIdentity { family, k, a } => write!(f, "x_identity family={family} k={k} a={a}"),
            Identity::SumOfTails { family, k, a } => write!(f, "sum_of_tails family={family} k={k} a={a}"),
            Identity::Strange { family, k, a } => write!(f, "strange family={family} k={k} a={a}"),
        }
    }
}

/// Both sides of an identity, plus further forms that must equal the left side.
#[derive(Debug, Clone)]
pub struct Sides {
    pub lhs: QSeries,
    pub rhs: QSeries,
    pub extra: Vec<(String, QSeries)>,
}

impl Sides {
    fn new(lhs: QSeries, rhs: QSeries) -> Self {
        Sides {
            lhs,
            rhs,
            extra: Vec::new(),
        }
    }

    fn with(mut self, label: &str, form: QSeries) -> Self {
        self.extra.push((label.to_string(), form));
        self
    }
}

pub fn build_identity(id: &Identity, order: u32) -> Result<Sides> {
    id.check_params()?;
    match *id {
        Identity::AndrewsGordon { k, i } => andrews_gordon(k, i, order),
        Identity::Corollary { family, k, a } => corollary(family, k, a, order),
        Identity::QbinomGenerating { k, shifted } => {
            let (lhs, rhs) = qbinom_generating(k, shifted, &Monomial::q(1, 1), order)?;
            Ok(Sides::new(lhs, rhs))
        }
        Identity::XIdentity { family, k, a } => x_identity(family, k, a, order),
        Identity::SumOfTails { family, k, a } => sum_of_tails(family, k, a, order),
        Identity::Strange { .. } => Err(Error::NotFormal(id.to_string())),
    }
}

/// Outcome of comparing one form against the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub order: u32,
    pub comparisons: Vec<Comparison>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.mismatch.is_none())
    }

    pub fn first_failure(&self) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.mismatch.is_some())
    }
}

/// Compare every form in `sides` against the left side up to `order`; a
/// mismatch reports the left side as expected.
pub fn compare_sides(identity: &str, sides: &Sides, order: u32) -> IdentityReport {
    let mut comparisons = vec![Comparison {
        label: "rhs".into(),
        mismatch: sides.rhs.first_difference(&sides.lhs, order),
    }];
    for (label, form) in &sides.extra {
        comparisons.push(Comparison {
            label: label.clone(),
            mismatch: form.first_difference(&sides.lhs, order),
        });
    }
    IdentityReport {
        identity: identity.to_string(),
        order,
        comparisons,
    }
}

pub fn verify_identity(id: &Identity, order: u32) -> Result<IdentityReport> {
    if id.validity() != Validity::Formal {
        return Err(Error::NotFormal(id.to_string()));
    }
    let sides = build_identity(id, order)?;
    Ok(compare_sides(&id.to_string(), &sides, order))
}

/// `prod 1/(1 - q^n)` over `n >= 1` with `n mod modulus` outside `excluded`.
pub fn residue_product(modulus: u32, excluded: &[i64], order: u32) -> Result<QSeries> {
    let m = modulus as i64;
    let mut out = QSeries::one(order);
    for r in 1..=m {
        if excluded.iter().any(|e| e.rem_euclid(m) == r % m) {
            continue;
        }
        out = out * poch_infinite(&Monomial::q(1, r as u32), modulus, order)?.invert_unit()?;
    }
    Ok(out)
}

fn andrews_gordon_spec(k: u32, i: u32) -> MultisumSpec {
    let depth = k as usize - 1;
    let mut spec = MultisumSpec::new(depth, 1);
    spec.quad = (1..=depth)
        .map(|j| (2, if j as u32 <= k - i { 2 } else { 0 }))
        .collect();
    spec.factors.push(PochFactor::new(
        FactorKind::Denominator,
        Monomial::q(1, 1),
        1,
        depth - 1,
    ));
    spec
}

fn andrews_gordon(k: u32, i: u32, order: u32) -> Result<Sides> {
    let lhs = evaluate_series(&andrews_gordon_spec(k, i), OuterRange::Unbounded, order)?;
    let m = 2 * k as i64 + 1;
    let rhs = residue_product(m as u32, &[0, i as i64, -(i as i64)], order)?;
    let (_, jacobi) = triple_product(
        TripleProductArg {
            sign: -1,
            quad: m as u32,
            lin: m - 2 * i as i64,
        },
        order,
    )?;
    let euler = poch_infinite(&Monomial::q(1, 1), 1, order)?.invert_unit()?;
    Ok(Sides::new(lhs, rhs).with("triple_product", jacobi * euler))
}

fn corollary_theta_arg(family: Family, k: u32, a: u32) -> TripleProductArg {
    let (k, a) = (k as i64, a as i64);
    let (sign, quad, lin) = match family {
        Family::Hikami => (-1, 2 * k + 1, 2 * k - 2 * a - 1),
        Family::Fam1 => (-1, 2 * k, 2 * k - 2),
        Family::Fam2 => (-1, 4 * k - 2, 4 * k - 4),
        Family::Fam3 => (-1, 4 * k, 4 * k - 4 * a - 2),
        Family::Fam4 => (1, 2 * k - 1, 2 * k - 2 * a - 1),
        Family::Fam5 => unreachable!("family5 has no corollary"),
    };
    TripleProductArg {
        sign,
        quad: quad as u32,
        lin,
    }
}

/// Weight-0 partial theta of a family, scaled by its x-multiplicity.
fn weight_zero_theta(family: Family, k: u32, a: u32) -> Result<(PartialTheta, Rational)> {
    let ft = family_theta(family, k, a)?;
    let theta = PartialTheta {
        weight: 0,
        prefactor: ft.x_multiplicity.clone(),
        ..ft.theta
    };
    Ok((theta, ft.x_multiplicity))
}

fn corollary(family: Family, k: u32, a: u32, order: u32) -> Result<Sides> {
    let base = family.base();
    let lhs = evaluate_series(&corollary_spec(family, k, a)?, OuterRange::Unbounded, order)?;
    let inverse_euler = poch_infinite(&Monomial::q(1, base), base, order)?.invert_unit()?;
    let (_, jacobi) = triple_product(corollary_theta_arg(family, k, a), order)?;
    let rhs = &jacobi * &inverse_euler;
    let (theta, _) = weight_zero_theta(family, k, a)?;
    let middle = &partial_theta_qseries(&theta, None, order)? * &inverse_euler;
    let mut sides = Sides::new(lhs, rhs).with("partial_theta", middle);
    match family {
        Family::Hikami => {
            let m = 2 * k as i64 + 1;
            let r = a as i64 + 1;
            sides = sides.with("residue_product", residue_product(m as u32, &[0, r, -r], order)?);
        }
        Family::Fam1 => {
            let m = 2 * k as i64;
            sides = sides.with("residue_product", residue_product(m as u32, &[0, 1, -1], order)?);
        }
        _ => {}
    }
    Ok(sides)
}

/// Both sides of `sum_n x^n [n over k] = x^k / (x)_{k+1}` (or, shifted,
/// `sum_n x^n [n+1 over k] = x^(k - [k != 0]) / (x)_{k+1}`) with `x`
/// replaced by the monomial `subst`, which must carry a positive q-power.
pub fn qbinom_generating(k: u32, shifted: bool, subst: &Monomial, order: u32) -> Result<(QSeries, QSeries)> {
    if subst.q_exp == 0 {
        return Err(Error::BadSpecialization(
            "x must be replaced by a positive power of q".into(),
        ));
    }
    let shift = i64::from(shifted);
    let mut lhs = QSeries::zero(order);
    let mut n: u32 = 0;
    while subst.q_exp as u64 * n as u64 <= order as u64 {
        let top = n as i64 + shift;
        if top >= k as i64 {
            let xn = subst.pow(n);
            lhs = lhs + qbinom(top, k as i64, 1, order).mul_monomial(&xn.coeff, xn.x_exp as usize, xn.q_exp as u64);
        }
        n += 1;
    }
    let lead = subst.pow(if shifted && k != 0 { k - 1 } else { k });
    let rhs = poch_inverse(subst, 1, k as usize + 1, order)?.mul_monomial(
        &lead.coeff,
        lead.x_exp as usize,
        lead.q_exp as u64,
    );
    Ok((lhs, rhs))
}

/// `(1-x) sum_{n <= order} (P_n - P_inf) x^n + P_inf` for a single-index
/// product `P`, checking that every omitted tail lies beyond the truncation.
fn single_tails_form(factors: &[PochFactor], order: u32) -> Result<QSeries> {
    let limit = factor_product(factors, None, order)?;
    let mut tails = QSeries::zero(order);
    for n in 0..=order as usize {
        let diff = &factor_product(factors, Some(n), order)? - &limit;
        if let Some(v) = diff.valuation() {
            if (v as usize) <= n {
                return Err(Error::PreconditionViolated(format!(
                    "P_{n} - P_inf has q-valuation {v}, so the tails sum cannot be truncated"
                )));
            }
        }
        tails = tails + diff.mul_monomial(&Rational::one(), n, 0);
    }
    let one_minus_x = QSeries::one(order) - QSeries::monomial(Rational::one(), 1, 0, order);
    Ok(&(&one_minus_x * &tails) + &limit)
}

fn x_identity_rhs(family: Family, k: u32, a: u32, order: u32) -> Result<QSeries> {
    let ft = family_theta(family, k, a)?;
    let (theta, _) = weight_zero_theta(family, k, a)?;
    let mut rhs = partial_theta_qseries(&theta, ft.x_rule, order)?;
    if ft.single_zero_term {
        rhs = rhs - QSeries::one(order);
    }
    Ok(rhs)
}

/// `sum_n (-1)^n x^(3n) q^(n(3n+1)/2) (1 - x^2 q^(2n+1))`.
fn zagier_displayed_rhs(order: u32) -> QSeries {
    let mut out = QSeries::zero(order);
    let mut n: u64 = 0;
    while n * (3 * n + 1) / 2 <= order as u64 {
        let sign = Rational::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
        let e = n * (3 * n + 1) / 2;
        out = out + QSeries::monomial(sign.clone(), 3 * n as usize, e, order);
        out = out + QSeries::monomial(-sign, 3 * n as usize + 2, e + 2 * n + 1, order);
        n += 1;
    }
    out
}

/// The x-deformed identity of a family. For `k >= 2` the left side is
/// `(xq^b; q^b)_inf * S_1 + (1-x) * S_2` with the two multisums of
/// [`x_identity_specs`]; for `k = 1` it is the single tails sum. The right
/// side is the weight-0 partial theta with the family's x-exponent rule.
/// For family 4 at `k = 1` both sides are twice the usual normalization.
pub fn x_identity(family: Family, k: u32, a: u32, order: u32) -> Result<Sides> {
    Identity::XIdentity { family, k, a }.check_params()?;
    let lhs = if k == 1 {
        single_tails_form(&single_sum_factors(family, a)?, order)?
    } else {
        let base = family.base();
        let (product, tails) = x_identity_specs(family, k, a)?;
        let head = poch_infinite(&Monomial::xq(1, 1, base), base, order)?;
        let one_minus_x = QSeries::one(order) - QSeries::monomial(Rational::one(), 1, 0, order);
        &(&head * &evaluate_series(&product, OuterRange::Unbounded, order)?)
            + &(&one_minus_x * &evaluate_series(&tails, OuterRange::Unbounded, order)?)
    };
    let mut sides = Sides::new(lhs, x_identity_rhs(family, k, a, order)?);
    if family == Family::Hikami && k == 1 {
        sides = sides.with("displayed", zagier_displayed_rhs(order));
    }
    Ok(sides)
}

/// `sum_{j >= 0} c y_j / (1 - c y_j)` with `y_j = q^(f + b j)` and `c = +-1`.
fn log_sum(c: &Rational, f: u32, b: u32, order: u32) -> Result<QSeries> {
    if f == 0 {
        return Err(Error::DivergentProduct(format!("factor with argument {c}")));
    }
    if c.is_one() {
        Ok(lambert_sum(f, b, 1, order))
    } else if (-c).is_one() {
        Ok(lambert_sum(2 * f, 2 * b, 1, order).scale(&Rational::from_int(2)) - lambert_sum(f, b, 1, order))
    } else {
        Err(Error::Unsupported(format!(
            "logarithmic derivative with coefficient {c}"
        )))
    }
}

/// `d/dx P_inf` at `x = 1`, as `P_inf(1)` times a sum of Lambert series.
fn limit_derivative(factors: &[PochFactor], order: u32) -> Result<QSeries> {
    let mut log = QSeries::zero(order);
    for f in factors.iter().filter(|f| f.arg.x_exp > 0) {
        let term = log_sum(&f.arg.coeff, f.arg.q_exp, f.base, order)?.scale(&Rational::from_int(f.arg.x_exp as i64));
        log = match f.kind {
            FactorKind::Numerator => log - term,
            FactorKind::Denominator => log + term,
            FactorKind::Tail => return Err(Error::Unsupported("tail factor in a product".into())),
        };
    }
    let at_one: Vec<PochFactor> = factors
        .iter()
        .map(|f| PochFactor {
            arg: f.arg.at_x_one(),
            ..f.clone()
        })
        .collect();
    Ok(&factor_product(&at_one, None, order)? * &log)
}

/// The x-identity differentiated at `x = 1`. The right side is rebuilt as
/// `(m/d) sum n chi(n) q^e - (m c/d) sum chi(n) q^e` from the family's
/// x-rule `(n - c)/d` and multiplicity `m`. For `k = 1` the left side is
/// rebuilt as `-sum (P_n - P_inf) + P_inf'` at `x = 1`, with the last term
/// a Lambert series multiple of `P_inf`; for `k >= 2` it is the derivative
/// of the x-identity left side. Both derivatives of the x-identity are
/// included as further forms.
pub fn sum_of_tails(family: Family, k: u32, a: u32, order: u32) -> Result<Sides> {
    Identity::SumOfTails { family, k, a }.check_params()?;
    let x_sides = x_identity(family, k, a, order)?;
    let at_one = |f: &QSeries| f.differentiate_x().substitute(&Substitution::XToOne);
    let ft = family_theta(family, k, a)?;
    let rule = ft.x_rule.expect("families with x-identities carry an x-rule");
    let scale = &ft.x_multiplicity * &Rational::new(1, rule.divisor);
    let weighted = PartialTheta {
        weight: 1,
        prefactor: scale.clone(),
        ..ft.theta.clone()
    };
    let plain = PartialTheta {
        weight: 0,
        prefactor: -&(&scale * &Rational::from_int(rule.offset)),
        ..ft.theta
    };
    let rhs = &partial_theta_qseries(&weighted, None, order)? + &partial_theta_qseries(&plain, None, order)?;
    let lhs = if k == 1 {
        let factors: Vec<PochFactor> = single_sum_factors(family, a)?;
        let plain_factors: Vec<PochFactor> = factors
            .iter()
            .map(|f| PochFactor {
                arg: f.arg.at_x_one(),
                ..f.clone()
            })
            .collect();
        let limit = factor_product(&plain_factors, None, order)?;
        let mut tails = QSeries::zero(order);
        for n in 0..=order as usize {
            tails = tails + (&factor_product(&plain_factors, Some(n), order)? - &limit);
        }
        limit_derivative(&factors, order)? - tails
    } else {
        at_one(&x_sides.lhs)
    };
    let mut sides = Sides::new(lhs, rhs).with("rhs_derivative", at_one(&x_sides.rhs));
    if k == 1 {
        sides = sides.with("lhs_derivative", at_one(&x_sides.lhs));
    }
    Ok(sides)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(list: &[(&str, &str)]) -> Vec<(String, String)> {
        list.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let id = Identity::from_parts("ag_variant", &params(&[("k", "3"), ("a", "1")])).unwrap();
        assert_eq!(id.to_string(), "ag_variant k=3 a=1");
        let id = Identity::from_parts("x_identity", &params(&[("family", "fam2"), ("k", "1")])).unwrap();
        assert_eq!(
            id,
            Identity::XIdentity {
                family: Family::Fam2,
                k: 1,
                a: 0
            }
        );
        assert!(matches!(
            Identity::from_parts("nope", &[]),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(matches!(
            Identity::from_parts("andrews_gordon", &params(&[("k", "2"), ("i", "3")])),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn strange_entries_are_not_formal() {
        let id = Identity::from_parts("zagier", &[]).unwrap();
        assert_eq!(id.validity(), Validity::AllRoots);
        assert!(matches!(verify_identity(&id, 10), Err(Error::NotFormal(_))));
    }

    #[test]
    fn qbinom_generating_k0_is_geometric() {
        let (lhs, rhs) = qbinom_generating(0, false, &Monomial::q(1, 1), 20).unwrap();
        let geometric = QSeries::from_ints(&[1; 21], 20);
        assert_eq!(lhs, geometric);
        assert_eq!(rhs, geometric);
    }

    #[test]
    fn x_identity_at_x_zero() {
        let sides = x_identity(Family::Hikami, 1, 0, 12).unwrap();
        let zero = Substitution::XToMonomial {
            coeff: Rational::zero(),
            q_exp: 0,
        };
        assert_eq!(sides.lhs.substitute(&zero), QSeries::one(12));
        assert_eq!(sides.rhs.substitute(&zero), QSeries::one(12));
    }
}
