//! Strange identities: the left side is a terminating multisum evaluated at
//! `q = zeta e^(-t)`, the right side a partial theta function whose
//! asymptotic expansion comes from L-values of a twisted periodic function.

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{eval_terminating_sum, CycField, CycNum, TSeries};
use crate::error::{Error, Result};
use crate::families::{family_theta, strange_lhs_spec, Family, Validity};
use crate::multisum::MultisumSpec;
use crate::qfunctions::{character, CharacterKind, PartialTheta};
use crate::rational::{binomial, factorial, lcm, Rational};

/// Bernoulli numbers `B_0..=B_m` with `B_1 = -1/2`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        if n == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += &(&binomial(n as u64 + 1, k as u64) * bk);
        }
        b.push(-&(&acc / &Rational::from_int(n as i64 + 1)));
    }
    b
}

/// Coefficients (constant term first) of the Bernoulli polynomial `B_m(x)`.
pub fn bernoulli_poly(m: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(m);
    (0..=m).map(|j| &binomial(m as u64, j as u64) * &b[m - j]).collect()
}

fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
}

/// `psi(n) = chi(n) zeta^((n^2 - c^2)/D)`, periodic with period `period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedPeriodic {
    pub period: u32,
    pub values: Vec<CycNum>,
}

impl TwistedPeriodic {
    /// Twist the character of `pt` by the root of unity of order `root`.
    pub fn new(pt: &PartialTheta, root: u32) -> Result<TwistedPeriodic> {
        pt.check_integrality()?;
        let field = CycField::get(root);
        let period = lcm(pt.chi.period as u64, pt.divisor as u64 * root as u64) as u32;
        let values = (0..period as i64)
            .map(|n| {
                Ok(match pt.exponent_signed(n)? {
                    None => CycNum::zero(&field),
                    Some(e) => CycNum::zeta_power(&field, e).scale(pt.chi.value(n)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TwistedPeriodic { period, values })
    }

    /// The untwisted function with rational values.
    pub fn from_rationals(values: &[Rational]) -> TwistedPeriodic {
        let field = CycField::get(1);
        TwistedPeriodic {
            period: values.len() as u32,
            values: values
                .iter()
                .map(|v| CycNum::from_rational(&field, v.clone()))
                .collect(),
        }
    }

    pub fn value(&self, n: i64) -> &CycNum {
        &self.values[n.rem_euclid(self.period as i64) as usize]
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.values[0].field()
    }

    pub fn period_sum(&self) -> CycNum {
        self.values.iter().fold(CycNum::zero(self.field()), |acc, v| &acc + v)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.period as i64).all(|n| self.value(n) == self.value(self.period as i64 - n))
    }
}

impl PartialTheta {
    /// Exponent `(n^2 - c^2)/D` as a signed integer, or `None` off the support.
    fn exponent_signed(&self, n: i64) -> Result<Option<i64>> {
        if self.chi.value(n).is_zero() {
            return Ok(None);
        }
        let c = self.shift as i128;
        let num = n as i128 * n as i128 - c * c;
        if num % self.divisor as i128 != 0 {
            return Err(Error::IntegralityViolation {
                n,
                detail: format!("{} does not divide n^2 - {}", self.divisor, c * c),
            });
        }
        Ok(Some((num / self.divisor as i128) as i64))
    }
}

/// `L(-m, psi) = -(P^m / (m+1)) sum_{n=1}^{P} psi(n) B_{m+1}(n/P)`.
pub fn lvalue(psi: &TwistedPeriodic, m: usize) -> CycNum {
    let p = psi.period as i64;
    let poly = bernoulli_poly(m + 1);
    let mut acc = CycNum::zero(psi.field());
    for n in 1..=p {
        let v = psi.value(n);
        if v.is_zero() {
            continue;
        }
        let b = eval_poly(&poly, &Rational::new(n, p));
        acc = &acc + &v.scale(&b);
    }
    let scale = -&(&Rational::from_int(p).pow(m as u32) / &Rational::from_int(m as i64 + 1));
    acc.scale(&scale)
}

/// Asymptotic expansion through `t^K` of `pt` at `q = zeta_root e^(-t)`:
/// `prefactor e^(t c^2/D) sum_k L(-2k-w, psi) (-t/D)^k / k!`, plus the
/// `n = 0` term when the weight is zero.
pub fn rhs_asymptotic(pt: &PartialTheta, root: u32, t_order: usize) -> Result<TSeries> {
    let field = CycField::get(root);
    if pt.chi.is_zero() {
        return Ok(TSeries::zero(&field, t_order));
    }
    let psi = TwistedPeriodic::new(pt, root)?;
    if !psi.period_sum().is_zero() {
        return Err(Error::SingularExpansion { root });
    }
    let d = Rational::from_int(pt.divisor as i64);
    let coeffs = (0..=t_order)
        .map(|k| {
            let l = lvalue(&psi, 2 * k + pt.weight as usize);
            let c = &(-&d.recip()).pow(k as u32) / &factorial(k as u64);
            let mut term = l.scale(&c);
            if k == 0 && pt.weight == 0 {
                term = &term + psi.value(0);
            }
            term
        })
        .collect();
    let sum = TSeries::from_coeffs(coeffs);
    // e^(t c^2 / D)
    let c2 = Rational::from_int(pt.shift as i64 * pt.shift as i64);
    let rate = &c2 / &d;
    let growth = TSeries::from_coeffs(
        (0..=t_order)
            .map(|j| CycNum::from_rational(&field, &rate.pow(j as u32) / &factorial(j as u64)))
            .collect(),
    );
    let prefactor = CycNum::from_rational(&field, pt.prefactor.clone());
    Ok((&growth * &sum).scale(&prefactor))
}

/// A strange identity: multisum left side against a partial theta.
#[derive(Debug, Clone)]
pub struct StrangeSpec {
    pub name: String,
    pub family: Family,
    pub k: u32,
    pub a: u32,
    pub lhs: MultisumSpec,
    pub rhs: PartialTheta,
    pub validity: Validity,
}

impl StrangeSpec {
    pub fn prefactor(&self) -> &Rational {
        &self.rhs.prefactor
    }
}

/// The strange identity of a family; `hikami` with `k = 1` is Zagier's.
pub fn strange_spec(family: Family, k: u32, a: u32) -> Result<StrangeSpec> {
    let lhs = strange_lhs_spec(family, k, a)?;
    let rhs = family_theta(family, k, a)?.theta;
    Ok(StrangeSpec {
        name: family.name().to_string(),
        family,
        k,
        a,
        lhs,
        rhs,
        validity: family.validity(k),
    })
}

/// Zagier's identity with the symbol `(12/n)` on the right.
pub fn zagier_spec() -> Result<StrangeSpec> {
    let mut spec = strange_spec(Family::Hikami, 1, 0)?;
    spec.name = "zagier".into();
    spec.rhs = PartialTheta {
        chi: character(CharacterKind::Zagier12)?,
        weight: 1,
        divisor: 24,
        shift: 1,
        prefactor: Rational::new(-1, 2),
    };
    Ok(spec)
}

/// Look up a strange identity by name (`zagier`, a family name).
pub fn strange_by_name(name: &str, k: u32, a: u32) -> Result<StrangeSpec> {
    if name == "zagier" {
        return zagier_spec();
    }
    let family: Family = name.parse().map_err(|_| Error::UnknownIdentity(name.to_string()))?;
    strange_spec(family, k, a)
}

/// Outcome of a root-of-unity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The sides first differ at this t-degree (0 for quantum checks).
    Fail {
        t_degree: usize,
    },
    /// The root lies outside the identity's validity domain.
    RootRejected {
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct StrangeReport {
    pub name: String,
    pub k: u32,
    pub a: u32,
    pub root: u32,
    pub t_order: usize,
    pub outcome: Outcome,
    pub lhs: Vec<CycNum>,
    pub rhs: Vec<CycNum>,
}

impl StrangeReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

fn first_difference(lhs: &[CycNum], rhs: &[CycNum]) -> Outcome {
    match lhs.iter().zip(rhs).position(|(l, r)| l != r) {
        Some(t_degree) => Outcome::Fail { t_degree },
        None => Outcome::Pass,
    }
}

/// Compare both sides through `t^K` at the primitive `root`-th root of unity.
/// Roots outside the validity domain are reported as rejected.
pub fn strange_check(spec: &StrangeSpec, root: u32, t_order: usize) -> Result<StrangeReport> {
    let mut report = StrangeReport {
        name: spec.name.clone(),
        k: spec.k,
        a: spec.a,
        root,
        t_order,
        outcome: Outcome::Pass,
        lhs: Vec::new(),
        rhs: Vec::new(),
    };
    if !spec.validity.admits_root(root) {
        report.outcome = Outcome::RootRejected {
            reason: format!("{} identity, root order {root}", spec.validity.tag()),
        };
        return Ok(report);
    }
    report.lhs = eval_terminating_sum(&spec.lhs, root, t_order)?.coeffs().to_vec();
    report.rhs = rhs_asymptotic(&spec.rhs, root, t_order)?.coeffs().to_vec();
    report.outcome = first_difference(&report.lhs, &report.rhs);
    Ok(report)
}

/// As [`strange_check`] but ignoring the validity domain; a vanishing
/// denominator or a singular expansion becomes a rejection. Used to map
/// validity sets empirically.
pub fn strange_probe(spec: &StrangeSpec, root: u32, t_order: usize) -> Result<StrangeReport> {
    let open = StrangeSpec {
        validity: Validity::AllRoots,
        ..spec.clone()
    };
    match strange_check(&open, root, t_order) {
        Err(e @ (Error::DenominatorVanishes { .. } | Error::SingularExpansion { .. })) => Ok(StrangeReport {
            name: spec.name.clone(),
            k: spec.k,
            a: spec.a,
            root,
            t_order,
            outcome: Outcome::RootRejected { reason: e.to_string() },
            lhs: Vec::new(),
            rhs: Vec::new(),
        }),
        other => other,
    }
}

/// Identities between two strange left sides, exact at odd roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuantumId {
    /// family 1 at `2k-1` against twice family 2 at `k`.
    Fam1VsFam2 { k: u32 },
    /// family 5 at `(2k, 2a)` against twice family 3 at `(k, a)`.
    Fam5VsFam3 { k: u32, a: u32 },
    /// family 5 at `(2k+1, 2a+1)` against twice the Hikami sum at `(k, a)` in `q^2`.
    Fam5VsHikami { k: u32, a: u32 },
}

impl QuantumId {
    pub fn parse(name: &str, k: u32, a: u32) -> Result<QuantumId> {
        match name {
            "fam1_vs_fam2" => Ok(QuantumId::Fam1VsFam2 { k }),
            "fam5_vs_fam3" => Ok(QuantumId::Fam5VsFam3 { k, a }),
            "fam5_vs_hikami" => Ok(QuantumId::Fam5VsHikami { k, a }),
            _ => Err(Error::UnknownIdentity(name.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            QuantumId::Fam1VsFam2 { .. } => "fam1_vs_fam2",
            QuantumId::Fam5VsFam3 { .. } => "fam5_vs_fam3",
            QuantumId::Fam5VsHikami { .. } => "fam5_vs_hikami",
        }
    }

    pub fn params(&self) -> (u32, u32) {
        match *self {
            QuantumId::Fam1VsFam2 { k } => (k, 0),
            QuantumId::Fam5VsFam3 { k, a } | QuantumId::Fam5VsHikami { k, a } => (k, a),
        }
    }

    /// Left multisum and the multisum doubled on the right.
    pub fn sides(&self) -> Result<(MultisumSpec, MultisumSpec)> {
        match *self {
            QuantumId::Fam1VsFam2 { k } => {
                if k == 0 {
                    return Err(Error::BadParams("fam1_vs_fam2 needs k >= 1".into()));
                }
                Ok((
                    strange_lhs_spec(Family::Fam1, 2 * k - 1, 0)?,
                    strange_lhs_spec(Family::Fam2, k, 0)?,
                ))
            }
            QuantumId::Fam5VsFam3 { k, a } => Ok((
                strange_lhs_spec(Family::Fam5, 2 * k, 2 * a)?,
                strange_lhs_spec(Family::Fam3, k, a)?,
            )),
            QuantumId::Fam5VsHikami { k, a } => Ok((
                strange_lhs_spec(Family::Fam5, 2 * k + 1, 2 * a + 1)?,
                strange_lhs_spec(Family::Hikami, k, a)?.dilate(2),
            )),
        }
    }
}

impl fmt::Display for QuantumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, a) = self.params();
        match self {
            QuantumId::Fam1VsFam2 { .. } => write!(f, "{} k={k}", self.name()),
            _ => write!(f, "{} k={k} a={a}", self.name()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QuantumReport {
    pub id: QuantumId,
    pub root: u32,
    pub outcome: Outcome,
    pub lhs: Option<CycNum>,
    pub rhs: Option<CycNum>,
}

impl QuantumReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Exact comparison of both sides at the primitive `root`-th root of unity.
pub fn quantum_check(id: QuantumId, root: u32) -> Result<QuantumReport> {
    let (left, right) = id.sides()?;
    if !Validity::OddRoots.admits_root(root) {
        return Ok(QuantumReport {
            id,
            root,
            outcome: Outcome::RootRejected {
                reason: format!("quantum identities hold at odd roots, got order {root}"),
            },
            lhs: None,
            rhs: None,
        });
    }
    let lhs = eval_terminating_sum(&left, root, 0)?.coeff(0).clone();
    let rhs = eval_terminating_sum(&right, root, 0)?
        .coeff(0)
        .scale(&Rational::from_int(2));
    let outcome = first_difference(std::slice::from_ref(&lhs), std::slice::from_ref(&rhs));
    Ok(QuantumReport {
        id,
        root,
        outcome,
        lhs: Some(lhs),
        rhs: Some(rhs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn low_bernoulli_polynomials() {
        assert_eq!(bernoulli_poly(0), vec![r(1, 1)]);
        assert_eq!(bernoulli_poly(1), vec![r(-1, 2), r(1, 1)]);
        assert_eq!(bernoulli_poly(2), vec![r(1, 6), r(-1, 1), r(1, 1)]);
        assert_eq!(bernoulli_numbers(4)[4], r(-1, 30));
    }

    #[test]
    fn known_lvalues() {
        let chi12 = character(CharacterKind::Zagier12).unwrap();
        let psi = TwistedPeriodic::from_rationals(chi12.values());
        assert_eq!(lvalue(&psi, 1).as_rational(), Some(r(-2, 1)));
        let chi4 = TwistedPeriodic::from_rationals(&[r(1, 1), r(0, 1), r(-1, 1), r(0, 1)]);
        assert_eq!(lvalue(&chi4, 1).as_rational(), Some(r(-1, 2)));
        let zero = TwistedPeriodic::from_rationals(&vec![Rational::zero(); 5]);
        assert!(lvalue(&zero, 3).is_zero());
    }

    #[test]
    fn zagier_at_small_roots() {
        let spec = zagier_spec().unwrap();
        for (root, value) in [(1, 1), (2, 3)] {
            let report = strange_check(&spec, root, 0).unwrap();
            assert!(report.passed());
            assert_eq!(report.lhs[0].as_rational(), Some(r(value, 1)));
        }
    }

    #[test]
    fn odd_only_identity_rejects_even_root() {
        let spec = strange_spec(Family::Fam1, 1, 0).unwrap();
        let report = strange_check(&spec, 2, 0).unwrap();
        assert!(matches!(report.outcome, Outcome::RootRejected { .. }));
        let probe = strange_probe(&spec, 2, 0).unwrap();
        assert!(matches!(probe.outcome, Outcome::RootRejected { .. }));
    }
}
