//! Bailey pairs: Slater's pair and its specializations, the Bailey lemma,
//! the shift lemmas, inversion, verification and the family recipes.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::families::{closed_beta_spec, Family};
use crate::multisum::{evaluate_series, OuterRange};
use crate::qfunctions::{poch_finite, poch_inverse, Monomial};
use crate::rational::Rational;
use crate::series::{Mismatch, QSeries};

type Generator = dyn Fn(usize, u32) -> Result<QSeries> + Send + Sync;

/// Lazily generated sequence `n -> QSeries`, memoized by `(n, order)`.
#[derive(Clone)]
pub struct Sequence {
    inner: Arc<SequenceInner>,
}

struct SequenceInner {
    generator: Box<Generator>,
    memo: Mutex<HashMap<(usize, u32), QSeries>>,
}

impl Sequence {
    pub fn new(f: impl Fn(usize, u32) -> Result<QSeries> + Send + Sync + 'static) -> Self {
        Sequence {
            inner: Arc::new(SequenceInner {
                generator: Box::new(f),
                memo: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn zero() -> Self {
        Sequence::new(|_, order| Ok(QSeries::zero(order)))
    }

    pub fn get(&self, n: usize, order: u32) -> Result<QSeries> {
        if let Some(v) = self.inner.memo.lock().unwrap().get(&(n, order)) {
            return Ok(v.clone());
        }
        let value = (self.inner.generator)(n, order)?;
        self.inner.memo.lock().unwrap().insert((n, order), value.clone());
        Ok(value)
    }

    /// Pointwise product with a sequence-independent factor.
    pub fn scaled(&self, factor: Arc<dyn Fn(u32) -> Result<QSeries> + Send + Sync>) -> Sequence {
        let base = self.clone();
        Sequence::new(move |n, order| Ok(base.get(n, order)? * factor(order)?))
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cached = self.inner.memo.lock().map(|m| m.len()).unwrap_or(0);
        write!(f, "Sequence({cached} cached)")
    }
}

/// `(alpha, beta)` relative to `(rel_param, q^base)`.
#[derive(Clone, Debug)]
pub struct BaileyPair {
    pub rel_param: Monomial,
    pub base: u32,
    pub alpha: Sequence,
    pub beta: Sequence,
    pub label: String,
}

impl BaileyPair {
    /// Multiply both sequences by a fixed series; pairs are linear.
    pub fn scale_by(&self, factor: impl Fn(u32) -> Result<QSeries> + Send + Sync + 'static, label: &str) -> BaileyPair {
        let factor: Arc<dyn Fn(u32) -> Result<QSeries> + Send + Sync> = Arc::new(factor);
        BaileyPair {
            rel_param: self.rel_param.clone(),
            base: self.base,
            alpha: self.alpha.scaled(factor.clone()),
            beta: self.beta.scaled(factor),
            label: format!("{} * {label}", self.label),
        }
    }

    pub fn with_alpha(&self, alpha: Sequence, label: &str) -> BaileyPair {
        BaileyPair {
            alpha,
            label: label.to_string(),
            ..self.clone()
        }
    }
}

/// A Bailey lemma parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rho {
    Finite(Monomial),
    Infinity,
}

/// `c x^x_exp q^q_exp` as a series.
fn mono(c: Rational, x_exp: u64, q_exp: u64, order: u32) -> QSeries {
    QSeries::monomial(c, x_exp as usize, q_exp, order)
}

fn sign(n: usize) -> Rational {
    Rational::from_int(if n.is_multiple_of(2) { 1 } else { -1 })
}

fn c2(n: usize) -> u64 {
    (n as u64 * n as u64 - n as u64) / 2
}

/// `1 - c x^x_exp q^q_exp`.
fn one_minus(m: &Monomial, order: u32) -> QSeries {
    let mut s = QSeries::one(order);
    s.mul_one_minus(&m.coeff, m.x_exp as usize, m.q_exp);
    s
}

/// Bailey lemma factors for `(rho1, rho2)` relative to `(a, q^base)`.
#[derive(Debug, Clone)]
struct RhoFactors {
    base: u32,
    /// `a q^base`.
    ap: Monomial,
    finite: Vec<Monomial>,
    /// `a q^base / rho` for each finite rho.
    quotients: Vec<Monomial>,
    /// `a q^base / (rho1 rho2)` when both are finite.
    joint: Option<Monomial>,
}

impl RhoFactors {
    fn new(a: &Monomial, base: u32, rho1: &Rho, rho2: &Rho) -> Result<Self> {
        let ap = a.times_q(base);
        let finite: Vec<Monomial> = [rho1, rho2]
            .into_iter()
            .filter_map(|r| match r {
                Rho::Finite(m) => Some(m.clone()),
                Rho::Infinity => None,
            })
            .collect();
        let mut quotients = Vec::new();
        for m in &finite {
            let quot = ap
                .checked_div(m)
                .ok_or_else(|| Error::BadSpecialization(format!("{ap} / {m} is not a monomial")))?;
            if !quot.one_minus_is_unit() {
                return Err(Error::BadSpecialization(format!("1 - {quot} is not a unit")));
            }
            quotients.push(quot);
        }
        let joint = if finite.len() == 2 {
            Some(ap.checked_div(&finite[0].mul(&finite[1])).ok_or_else(|| {
                Error::BadSpecialization(format!("{ap} / ({} * {}) is not a monomial", finite[0], finite[1]))
            })?)
        } else {
            None
        };
        Ok(RhoFactors {
            base,
            ap,
            finite,
            quotients,
            joint,
        })
    }

    /// `(rho1)_j (rho2)_j (aq/rho1 rho2)^j` with the limits taken.
    fn numerator(&self, j: usize, order: u32) -> QSeries {
        let b = self.base;
        match self.finite.len() {
            0 => {
                let ap = &self.ap;
                mono(
                    ap.coeff.pow(j as u32),
                    ap.x_exp as u64 * j as u64,
                    ap.q_exp as u64 * j as u64 + 2 * b as u64 * c2(j),
                    order,
                )
            }
            1 => {
                let quot = &self.quotients[0];
                poch_finite(&self.finite[0], b, j, order).mul_monomial(
                    &(&sign(j) * &quot.coeff.pow(j as u32)),
                    quot.x_exp as usize * j,
                    b as u64 * c2(j) + quot.q_exp as u64 * j as u64,
                )
            }
            _ => {
                let joint = self.joint.as_ref().expect("joint quotient for two finite parameters");
                (poch_finite(&self.finite[0], b, j, order) * poch_finite(&self.finite[1], b, j, order)).mul_monomial(
                    &joint.coeff.pow(j as u32),
                    joint.x_exp as usize * j,
                    joint.q_exp as u64 * j as u64,
                )
            }
        }
    }

    /// `1 / ((aq/rho1)_n (aq/rho2)_n)`.
    fn denominator_inverse(&self, n: usize, order: u32) -> Result<QSeries> {
        let mut acc = QSeries::one(order);
        for quot in &self.quotients {
            acc = acc * poch_inverse(quot, self.base, n, order)?;
        }
        Ok(acc)
    }

    /// `(aq/rho1 rho2)_m`, or 1 when a parameter is infinite.
    fn middle(&self, m: usize, order: u32) -> QSeries {
        match &self.joint {
            Some(joint) => poch_finite(joint, self.base, m, order),
            None => QSeries::one(order),
        }
    }
}

/// Keep only degrees divisible by `unit`, mapping `r^(unit d) -> q^d`.
fn decimate(f: &QSeries, unit: u32) -> Result<QSeries> {
    if unit == 1 {
        return Ok(f.clone());
    }
    let mut terms = Vec::new();
    for (d, p) in f.terms() {
        if d % unit != 0 {
            return Err(Error::BadSpecialization(format!(
                "fractional power q^({d}/{unit}) survives in a pair term"
            )));
        }
        terms.push((d / unit, p.clone()));
    }
    Ok(QSeries::from_terms(terms, f.order() / unit))
}

/// Slater's pair relative to `(a, q^base)`. Monomials are written in powers
/// of `q^(1/unit)`, which allows parameters such as `x q^(1/2)`.
pub fn slater_pair(a: &Monomial, b: &Rho, c: &Rho, base: u32, unit: u32) -> Result<BaileyPair> {
    if unit == 0 || base == 0 {
        return Err(Error::BadParams("base and unit must be positive".into()));
    }
    let p = base * unit;
    let factors = Arc::new(RhoFactors::new(a, p, b, c)?);
    if !a.q_exp.is_multiple_of(unit) {
        return Err(Error::BadRelParam(format!("{a} is not integral in q")));
    }
    let rel_param = Monomial::new(a.coeff.clone(), a.x_exp, a.q_exp / unit);
    let label = format!("slater(a={rel_param}, base q^{base})");

    let fa = factors.clone();
    let alpha = Sequence::new(move |n, order| {
        if n == 0 {
            return Ok(QSeries::one(order));
        }
        let r_order = order * unit;
        let ap = &fa.ap;
        let mut value = poch_finite(ap, p, n - 1, r_order);
        value.mul_one_minus(&ap.coeff, ap.x_exp as usize, ap.q_exp + p * (2 * n as u32 - 1));
        let value = value
            * fa.numerator(n, r_order)
            * fa.denominator_inverse(n, r_order)?
            * poch_inverse(&Monomial::q(1, p), p, n, r_order)?;
        decimate(&value.mul_monomial(&sign(n), 0, p as u64 * c2(n)), unit)
    });
    let fb = factors;
    let beta = Sequence::new(move |n, order| {
        let r_order = order * unit;
        let value = fb.middle(n, r_order)
            * fb.denominator_inverse(n, r_order)?
            * poch_inverse(&Monomial::q(1, p), p, n, r_order)?;
        decimate(&value, unit)
    });
    Ok(BaileyPair {
        rel_param,
        base,
        alpha,
        beta,
        label,
    })
}

/// The eight Slater specializations behind the base cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasePair {
    /// `a = x^2 q`, `b, c -> inf`.
    Zagier,
    /// `a = x^2 q`, `b = -xq`, `c -> inf`.
    Family1,
    /// Base `q^2`, `a = x^2 q^2`, `b = -xq`, `c = -xq^2`.
    Family2,
    /// Base `q^2`, `a = x^2 q^2`, `b = -xq`, `c -> inf`.
    Family3,
    /// `a = x^2 q`, `b = -c = x q^(1/2)`.
    Family4,
    /// `a = x^2`, `b, c -> inf`.
    HikamiSeed,
    /// Base `q^2`, `a = x^2`, `b = -xq`, `c -> inf`.
    Family3Seed,
    /// `a = x^2`, `b = -c = x q^(1/2)`.
    Family4Seed,
}

pub const ALL_BASE_PAIRS: [BasePair; 8] = [
    BasePair::Zagier,
    BasePair::Family1,
    BasePair::Family2,
    BasePair::Family3,
    BasePair::Family4,
    BasePair::HikamiSeed,
    BasePair::Family3Seed,
    BasePair::Family4Seed,
];

/// `(x^2 q^base; q^base)_n / ((q^base; q^base)_n (1 - x^2 q^base))`.
fn x2q_prefix(base: u32, n: usize, order: u32) -> Result<QSeries> {
    if n == 0 {
        return one_minus(&Monomial::xq(1, 2, base), order).invert_unit();
    }
    Ok(poch_finite(&Monomial::xq(1, 2, 2 * base), base, n - 1, order)
        * poch_inverse(&Monomial::q(1, base), base, n, order)?)
}

/// `(x^2; q^base)_n (1 - x^2 q^(2 base n)) / ((q^base; q^base)_n (1 - x^2))`.
fn x2_prefix(base: u32, n: usize, order: u32) -> Result<QSeries> {
    if n == 0 {
        return Ok(QSeries::one(order));
    }
    let mut value = poch_finite(&Monomial::xq(1, 2, base), base, n - 1, order);
    value.mul_one_minus(&Rational::one(), 2, 2 * base * n as u32);
    Ok(value * poch_inverse(&Monomial::q(1, base), base, n, order)?)
}

impl BasePair {
    pub fn name(self) -> &'static str {
        match self {
            BasePair::Zagier => "zagier",
            BasePair::Family1 => "family1",
            BasePair::Family2 => "family2",
            BasePair::Family3 => "family3",
            BasePair::Family4 => "family4",
            BasePair::HikamiSeed => "hikami-seed",
            BasePair::Family3Seed => "family3-seed",
            BasePair::Family4Seed => "family4-seed",
        }
    }

    pub fn base(self) -> u32 {
        match self {
            BasePair::Family2 | BasePair::Family3 | BasePair::Family3Seed => 2,
            _ => 1,
        }
    }

    pub fn rel_param(self) -> Monomial {
        match self {
            BasePair::Zagier | BasePair::Family1 | BasePair::Family4 => Monomial::xq(1, 2, 1),
            BasePair::Family2 | BasePair::Family3 => Monomial::xq(1, 2, 2),
            _ => Monomial::xq(1, 2, 0),
        }
    }

    /// Slater's pair at this specialization, without normalization.
    pub fn slater(self) -> Result<BaileyPair> {
        use Rho::{Finite, Infinity};
        let minus_xq = Finite(Monomial::xq(-1, 1, 1));
        let half = (Finite(Monomial::xq(1, 1, 1)), Finite(Monomial::xq(-1, 1, 1)));
        let pair = match self {
            BasePair::Zagier => slater_pair(&Monomial::xq(1, 2, 1), &Infinity, &Infinity, 1, 1),
            BasePair::Family1 => slater_pair(&Monomial::xq(1, 2, 1), &minus_xq, &Infinity, 1, 1),
            BasePair::Family2 => slater_pair(&Monomial::xq(1, 2, 2), &minus_xq, &Finite(Monomial::xq(-1, 1, 2)), 2, 1),
            BasePair::Family3 => slater_pair(&Monomial::xq(1, 2, 2), &minus_xq, &Infinity, 2, 1),
            BasePair::Family4 => slater_pair(&Monomial::xq(1, 2, 2), &half.0, &half.1, 1, 2),
            BasePair::HikamiSeed => slater_pair(&Monomial::xq(1, 2, 0), &Infinity, &Infinity, 1, 1),
            BasePair::Family3Seed => slater_pair(&Monomial::xq(1, 2, 0), &minus_xq, &Infinity, 2, 1),
            BasePair::Family4Seed => slater_pair(&Monomial::xq(1, 2, 0), &half.0, &half.1, 1, 2),
        }?;
        Ok(BaileyPair {
            label: format!("{} ({})", self.name(), pair.label),
            ..pair
        })
    }

    /// Constant by which the displayed pair differs from Slater's, if any.
    pub fn normalization(self) -> Option<Monomial> {
        match self {
            BasePair::Family2 | BasePair::Family3 => Some(Monomial::xq(-1, 1, 1)),
            BasePair::Family4 => Some(Monomial::xq(1, 2, 1)),
            _ => None,
        }
    }

    /// The pair normalized as displayed, built from Slater's pair.
    pub fn normalized(self) -> Result<BaileyPair> {
        let pair = self.slater()?;
        Ok(match self.normalization() {
            None => pair,
            Some(m) => {
                let label = format!("1/(1 - {m})");
                pair.scale_by(move |order| one_minus(&m, order).invert_unit(), &label)
            }
        })
    }

    /// The displayed closed forms, coded independently of Slater's pair.
    pub fn displayed(self) -> BaileyPair {
        let (alpha, beta): (Sequence, Sequence) = match self {
            BasePair::Zagier => (
                Sequence::new(|n, order| {
                    let mut v = x2q_prefix(1, n, order)?;
                    v.mul_one_minus(&Rational::one(), 2, 2 * n as u32 + 1);
                    Ok(v.mul_monomial(&sign(n), 2 * n, (n * (3 * n + 1) / 2) as u64))
                }),
                Sequence::new(|n, order| poch_inverse(&Monomial::q(1, 1), 1, n, order)),
            ),
            BasePair::Family1 => (
                Sequence::new(|n, order| {
                    let mut v = x2q_prefix(1, n, order)?;
                    v.mul_one_minus(&Rational::one(), 2, 2 * n as u32 + 1);
                    Ok(v.mul_monomial(&sign(n), n, (n * n) as u64))
                }),
                Sequence::new(|n, order| {
                    Ok(poch_inverse(&Monomial::q(1, 1), 1, n, order)?
                        * poch_inverse(&Monomial::xq(-1, 1, 1), 1, n, order)?)
                }),
            ),
            BasePair::Family2 => (
                Sequence::new(|n, order| {
                    let mut v = x2q_prefix(2, n, order)?;
                    v.mul_one_minus(&Rational::one(), 1, 2 * n as u32 + 1);
                    Ok(v.mul_monomial(&sign(n), 0, (n * n) as u64))
                }),
                Sequence::new(|n, order| {
                    Ok(poch_finite(&Monomial::q(1, 1), 2, n, order)
                        * poch_inverse(&Monomial::q(1, 2), 2, n, order)?
                        * poch_inverse(&Monomial::xq(-1, 1, 1), 1, 2 * n + 1, order)?)
                }),
            ),
            BasePair::Family3 => (
                Sequence::new(|n, order| {
                    let mut v = x2q_prefix(2, n, order)?;
                    v.mul_one_minus(&Rational::one(), 1, 2 * n as u32 + 1);
                    Ok(v.mul_monomial(&sign(n), n, (2 * n * n + n) as u64))
                }),
                Sequence::new(|n, order| {
                    Ok(poch_inverse(&Monomial::q(1, 2), 2, n, order)?
                        * poch_inverse(&Monomial::xq(-1, 1, 1), 2, n + 1, order)?)
                }),
            ),
            BasePair::Family4 => (
                Sequence::new(|n, order| {
                    Ok(x2q_prefix(1, n, order)?.mul_monomial(&Rational::one(), 0, (n * (n + 1) / 2) as u64))
                }),
                Sequence::new(|n, order| {
                    Ok(poch_finite(&Monomial::q(-1, 1), 1, n, order)
                        * poch_inverse(&Monomial::q(1, 1), 1, n, order)?
                        * poch_inverse(&Monomial::xq(1, 2, 1), 2, n + 1, order)?)
                }),
            ),
            BasePair::HikamiSeed => (
                Sequence::new(|n, order| {
                    Ok(x2_prefix(1, n, order)?.mul_monomial(
                        &sign(n),
                        2 * n,
                        (n * (3 * n).saturating_sub(1) / 2) as u64,
                    ))
                }),
                Sequence::new(|n, order| poch_inverse(&Monomial::q(1, 1), 1, n, order)),
            ),
            BasePair::Family3Seed => (
                Sequence::new(|n, order| {
                    Ok(x2_prefix(2, n, order)?.mul_monomial(&sign(n), n, (2 * n * n).saturating_sub(n) as u64))
                }),
                Sequence::new(|n, order| {
                    Ok(poch_inverse(&Monomial::q(1, 2), 2, n, order)?
                        * poch_inverse(&Monomial::xq(-1, 1, 1), 2, n, order)?)
                }),
            ),
            BasePair::Family4Seed => (
                Sequence::new(|n, order| Ok(x2_prefix(1, n, order)?.mul_monomial(&Rational::one(), 0, c2(n)))),
                Sequence::new(|n, order| {
                    Ok(poch_finite(&Monomial::q(-1, 0), 1, n, order)
                        * poch_inverse(&Monomial::q(1, 1), 1, n, order)?
                        * poch_inverse(&Monomial::xq(1, 2, 1), 2, n, order)?)
                }),
            ),
        };
        BaileyPair {
            rel_param: self.rel_param(),
            base: self.base(),
            alpha,
            beta,
            label: format!("{} (displayed)", self.name()),
        }
    }
}

/// Right side of the pair relation:
/// `sum_k alpha_k / ((p;p)_(n-k) (a p;p)_(n+k))` with `p = q^base`.
pub fn pair_relation(alpha: &Sequence, a: &Monomial, base: u32, n: usize, order: u32) -> Result<QSeries> {
    let ap = a.times_q(base);
    let p = Monomial::q(1, base);
    let mut total = QSeries::zero(order);
    for k in 0..=n {
        let term = alpha.get(k, order)?;
        if term.is_zero() {
            continue;
        }
        total = total + term * poch_inverse(&p, base, n - k, order)? * poch_inverse(&ap, base, n + k, order)?;
    }
    Ok(total)
}

/// Outcome of [`verify_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub label: String,
    pub n_max: usize,
    pub order: u32,
    pub failure: Option<PairFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFailure {
    pub n: usize,
    pub mismatch: Mismatch,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check the pair relation for every `n <= n_max` at the given order.
pub fn verify_pair(pair: &BaileyPair, n_max: usize, order: u32) -> Result<PairReport> {
    for n in 0..=n_max {
        let expected = pair.beta.get(n, order)?;
        let got = pair_relation(&pair.alpha, &pair.rel_param, pair.base, n, order)?;
        if let Some(mismatch) = got.first_difference(&expected, order) {
            return Ok(PairReport {
                label: pair.label.clone(),
                n_max,
                order,
                failure: Some(PairFailure { n, mismatch }),
            });
        }
    }
    Ok(PairReport {
        label: pair.label.clone(),
        n_max,
        order,
        failure: None,
    })
}

/// Recover `alpha` from `beta` by Bailey inversion.
///
/// The factor `(a)_(n+j) / (1 - a)` is expanded as `(aq)_(n+j-1)`, so the
/// result is defined even when `1 - a` is not a unit.
pub fn invert_pair(beta: &Sequence, rel_param: &Monomial, base: u32) -> Sequence {
    let beta = beta.clone();
    let a = rel_param.clone();
    Sequence::new(move |n, order| {
        if n == 0 {
            return beta.get(0, order);
        }
        let ap = a.times_q(base);
        let mut total = QSeries::zero(order);
        for j in 0..=n {
            let b = beta.get(j, order)?;
            if b.is_zero() {
                continue;
            }
            let m = n - j;
            let term =
                b * poch_finite(&ap, base, n + j - 1, order) * poch_inverse(&Monomial::q(1, base), base, m, order)?;
            total = total + term.mul_monomial(&sign(m), 0, base as u64 * c2(m));
        }
        total.mul_one_minus(&a.coeff, a.x_exp as usize, a.q_exp + 2 * base * n as u32);
        Ok(total)
    })
}

/// One application of the Bailey lemma.
pub fn bailey_step(pair: &BaileyPair, rho1: &Rho, rho2: &Rho) -> Result<BaileyPair> {
    let base = pair.base;
    let factors = Arc::new(RhoFactors::new(&pair.rel_param, base, rho1, rho2)?);
    let fa = factors.clone();
    let old_alpha = pair.alpha.clone();
    let alpha = Sequence::new(move |n, order| {
        let a = old_alpha.get(n, order)?;
        if a.is_zero() {
            return Ok(a);
        }
        Ok(a * fa.numerator(n, order) * fa.denominator_inverse(n, order)?)
    });
    let fb = factors;
    let old_beta = pair.beta.clone();
    let beta = Sequence::new(move |n, order| {
        let mut total = QSeries::zero(order);
        for j in 0..=n {
            let b = old_beta.get(j, order)?;
            if b.is_zero() {
                continue;
            }
            total = total
                + b * fb.numerator(j, order)
                    * fb.middle(n - j, order)
                    * poch_inverse(&Monomial::q(1, base), base, n - j, order)?;
        }
        Ok(total * fb.denominator_inverse(n, order)?)
    });
    let show = |r: &Rho| match r {
        Rho::Finite(m) => m.to_string(),
        Rho::Infinity => "inf".to_string(),
    };
    Ok(BaileyPair {
        rel_param: pair.rel_param.clone(),
        base,
        alpha,
        beta,
        label: format!("{} -> step({}, {})", pair.label, show(rho1), show(rho2)),
    })
}

/// Apply `bailey_step(inf, inf)` repeatedly.
pub fn iterate_steps(pair: &BaileyPair, times: u32) -> Result<BaileyPair> {
    let mut out = pair.clone();
    for _ in 0..times {
        out = bailey_step(&out, &Rho::Infinity, &Rho::Infinity)?;
    }
    Ok(out)
}

/// The transforms that change `beta_n` by simple factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftKind {
    /// `beta_n -> (b)_n q^n beta_n / (bq)_n`; `None` is the limit `b -> 0`.
    GammaStar(Option<Monomial>),
    /// `beta_n -> (1 - q^n) beta_n`.
    OneMinusQn,
    /// `beta_n -> beta_(n+1)`, relative to `aq`; needs `alpha_0 = beta_0 = 0`,
    /// checked up to `check_order`.
    IndexShift { check_order: u32 },
    /// `beta_n -> (1 - q^(n+1)) beta_(n+1)`, relative to `aq`.
    Key,
}

pub fn shift_lemma(pair: &BaileyPair, kind: &ShiftKind) -> Result<BaileyPair> {
    let base = pair.base;
    let a = pair.rel_param.clone();
    let old_alpha = pair.alpha.clone();
    let old_beta = pair.beta.clone();
    match kind {
        ShiftKind::GammaStar(b) => {
            let b = b.clone();
            let gamma = {
                let a = a.clone();
                let b = b.clone();
                let old_alpha = old_alpha.clone();
                Sequence::new(move |n, order| gamma_star(&old_alpha, &a, b.as_ref(), base, n, order))
            };
            let alpha = Sequence::new(move |n, order| {
                let g = gamma.get(n, order)?;
                if n == 0 {
                    Ok(g)
                } else {
                    Ok(g - gamma.get(n - 1, order)?)
                }
            });
            let bb = b.clone();
            let beta = Sequence::new(move |n, order| {
                let v = old_beta
                    .get(n, order)?
                    .mul_monomial(&Rational::one(), 0, base as u64 * n as u64);
                Ok(match &bb {
                    None => v,
                    Some(b) => v * poch_finite(b, base, n, order) * poch_inverse(&b.times_q(base), base, n, order)?,
                })
            });
            let shown = b.map_or("0".to_string(), |m| m.to_string());
            Ok(BaileyPair {
                rel_param: a,
                base,
                alpha,
                beta,
                label: format!("{} -> gamma*({shown})", pair.label),
            })
        }
        ShiftKind::OneMinusQn => {
            let aa = a.clone();
            let alpha = Sequence::new(move |n, order| one_minus_qn_alpha(&old_alpha, &aa, base, n, order));
            let beta = Sequence::new(move |n, order| {
                let mut v = old_beta.get(n, order)?;
                v.mul_one_minus(&Rational::one(), 0, base * n as u32);
                Ok(v)
            });
            Ok(BaileyPair {
                rel_param: a,
                base,
                alpha,
                beta,
                label: format!("{} -> (1-q^n)", pair.label),
            })
        }
        ShiftKind::IndexShift { check_order } => {
            let a0 = old_alpha.get(0, *check_order)?;
            let b0 = old_beta.get(0, *check_order)?;
            if !a0.is_zero() || !b0.is_zero() {
                return Err(Error::PreconditionViolated(
                    "index shift needs alpha_0 = beta_0 = 0".into(),
                ));
            }
            let aa = a.clone();
            let alpha = Sequence::new(move |n, order| {
                let ap = aa.times_q(base);
                let mut first = old_alpha.get(n + 1, order)?;
                first.div_one_minus(&aa.coeff, aa.x_exp as usize, aa.q_exp + base * (2 * n as u32 + 2))?;
                if n > 0 {
                    let mut second = old_alpha.get(n, order)?.mul_monomial(
                        &aa.coeff,
                        aa.x_exp as usize,
                        (aa.q_exp + 2 * base * n as u32) as u64,
                    );
                    second.div_one_minus(&aa.coeff, aa.x_exp as usize, aa.q_exp + 2 * base * n as u32)?;
                    first = first - second;
                }
                first.div_one_minus(&ap.coeff, ap.x_exp as usize, ap.q_exp)?;
                Ok(first)
            });
            let beta = Sequence::new(move |n, order| old_beta.get(n + 1, order));
            Ok(BaileyPair {
                rel_param: a.times_q(base),
                base,
                alpha,
                beta,
                label: format!("{} -> shift", pair.label),
            })
        }
        ShiftKind::Key => {
            let aa = a.clone();
            let alpha = Sequence::new(move |n, order| {
                let ap = aa.times_q(base);
                let mut first = old_alpha.get(n + 1, order)?;
                first.mul_one_minus(&Rational::one(), 0, base * (n as u32 + 1));
                first.div_one_minus(&aa.coeff, aa.x_exp as usize, aa.q_exp + base * (2 * n as u32 + 2))?;
                let second = if n == 0 {
                    old_alpha.get(0, order)?
                } else {
                    let mut s = old_alpha
                        .get(n, order)?
                        .mul_monomial(&Rational::one(), 0, base as u64 * n as u64);
                    s.mul_one_minus(&aa.coeff, aa.x_exp as usize, aa.q_exp + base * n as u32);
                    s.div_one_minus(&aa.coeff, aa.x_exp as usize, aa.q_exp + 2 * base * n as u32)?;
                    s
                };
                let mut total = first + second;
                total.div_one_minus(&ap.coeff, ap.x_exp as usize, ap.q_exp)?;
                Ok(total)
            });
            let beta = Sequence::new(move |n, order| {
                let mut v = old_beta.get(n + 1, order)?;
                v.mul_one_minus(&Rational::one(), 0, base * (n as u32 + 1));
                Ok(v)
            });
            Ok(BaileyPair {
                rel_param: a.times_q(base),
                base,
                alpha,
                beta,
                label: format!("{} -> key", pair.label),
            })
        }
    }
}

/// `gamma*_n` of the `gamma_star` transform, written without division by `b`:
/// `(a p^(r+1)/b; p)_(n-r) (-b)^(n-r) = prod_i (a p^(r+1+i) - b)`.
fn gamma_star(
    alpha: &Sequence,
    a: &Monomial,
    b: Option<&Monomial>,
    base: u32,
    n: usize,
    order: u32,
) -> Result<QSeries> {
    let mut total = QSeries::zero(order);
    for r in 0..=n {
        let ar = alpha.get(r, order)?;
        if ar.is_zero() {
            continue;
        }
        let mut term = ar.mul_monomial(
            &Rational::one(),
            0,
            (n * (n + 1) / 2) as u64 * base as u64 - c2(r) * base as u64,
        );
        for i in 0..n - r {
            let shifted = a.times_q(base * (r as u32 + 1 + i as u32));
            let mut factor = shifted.to_qseries(order);
            if let Some(b) = b {
                factor = factor - b.to_qseries(order);
            }
            term = term * factor;
        }
        if let Some(b) = b {
            term = term * poch_finite(b, base, r, order);
        }
        total = total + term;
    }
    Ok(match b {
        None => total,
        Some(b) => total * poch_inverse(&b.times_q(base), base, n, order)?,
    })
}

fn one_minus_qn_alpha(alpha: &Sequence, a: &Monomial, base: u32, n: usize, order: u32) -> Result<QSeries> {
    let mut head = alpha.get(n, order)?;
    head.mul_one_minus(&Rational::one(), 0, base * n as u32);
    if n == 0 {
        return Ok(head);
    }
    let mut tail = QSeries::zero(order);
    for r in 0..n {
        let ar = alpha.get(r, order)?;
        if ar.is_zero() {
            continue;
        }
        let power = (n - 1 - r) as u32;
        let q_exp = base as u64 * ((n * n - n - r * r) as u64) + a.q_exp as u64 * power as u64;
        tail = tail + ar.mul_monomial(&a.coeff.pow(power), (a.x_exp * power) as usize, q_exp);
    }
    tail.mul_one_minus(&a.coeff, a.x_exp as usize, a.q_exp + 2 * base * n as u32);
    Ok(head + tail)
}

/// Both sides of the `x^2 q` limiting identity, truncated to x-degree
/// `x_order`: `(1-x) sum (xp)_n (p)_n x^n beta_n` and
/// `(1-x^2 p) sum (p)_n / (x^2 p)_n x^n alpha_n` with `p = q^base`.
pub fn x2q_identity(pair: &BaileyPair, order: u32, x_order: usize) -> Result<(QSeries, QSeries)> {
    let base = pair.base;
    if pair.rel_param != Monomial::xq(1, 2, base) {
        return Err(Error::BadRelParam(format!(
            "expected x^2 q^{base}, found {}",
            pair.rel_param
        )));
    }
    let p = Monomial::q(1, base);
    let xp = Monomial::xq(1, 1, base);
    let x2p = Monomial::xq(1, 2, base);
    let mut lhs = QSeries::zero(order);
    let mut rhs = QSeries::zero(order);
    for n in 0..=x_order {
        let b = pair.beta.get(n, order)?;
        lhs = lhs
            + (b * poch_finite(&xp, base, n, order) * poch_finite(&p, base, n, order)).mul_monomial(
                &Rational::one(),
                n,
                0,
            );
        let a = pair.alpha.get(n, order)?;
        rhs = rhs
            + (a * poch_finite(&p, base, n, order) * poch_inverse(&x2p, base, n, order)?).mul_monomial(
                &Rational::one(),
                n,
                0,
            );
    }
    lhs.mul_one_minus(&Rational::one(), 1, 0);
    rhs.mul_one_minus(&Rational::one(), 2, base);
    Ok((lhs.truncate_x(x_order), rhs.truncate_x(x_order)))
}

/// Which sign the family-3 closed alpha carries in `1 +- x^(2a+1) q^(...)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fam3Sign {
    Minus,
    Plus,
}

/// The pair built by a family's recipe, with its displayed closed alpha.
#[derive(Debug, Clone)]
pub struct FamilyPair {
    pub family: Family,
    pub k: u32,
    pub a: u32,
    /// Alpha and beta exactly as produced by iteration.
    pub iterated: BaileyPair,
    /// Closed-form alpha paired with the iterated beta.
    pub displayed: BaileyPair,
    pub fam3_sign: Option<Fam3Sign>,
}

/// The iteration recipe for each family.
pub fn family_recipe(family: Family, k: u32, a: u32) -> Result<BaileyPair> {
    family.validate(k, a)?;
    let key_then_steps = |seed: BasePair| -> Result<BaileyPair> {
        let pair = iterate_steps(&seed.normalized()?, a)?;
        let pair = shift_lemma(&pair, &ShiftKind::Key)?;
        iterate_steps(&pair, k - 1 - a)
    };
    let pair = match family {
        Family::Hikami => key_then_steps(BasePair::HikamiSeed)?,
        Family::Fam1 => iterate_steps(&BasePair::Family1.normalized()?, k - 1)?,
        Family::Fam2 => iterate_steps(&BasePair::Family2.normalized()?, k - 1)?,
        Family::Fam3 => key_then_steps(BasePair::Family3Seed)?,
        Family::Fam4 => key_then_steps(BasePair::Family4Seed)?,
        Family::Fam5 => {
            let inner = family_recipe(Family::Hikami, k - 1, a)?;
            bailey_step(&inner, &Rho::Finite(Monomial::q(-1, 1)), &Rho::Infinity)?
        }
    };
    Ok(BaileyPair {
        label: format!("{family}(k={k}, a={a}): {}", pair.label),
        ..pair
    })
}

/// Closed-form alpha of a family pair. `fam3_sign` is only read for family 3.
pub fn closed_alpha(family: Family, k: u32, a: u32, fam3_sign: Fam3Sign) -> Result<Sequence> {
    family.validate(k, a)?;
    if family == Family::Fam5 {
        let inner = closed_alpha(Family::Hikami, k - 1, a, fam3_sign)?;
        return Ok(Sequence::new(move |n, order| {
            let extra =
                poch_finite(&Monomial::q(-1, 1), 1, n, order) * poch_inverse(&Monomial::xq(-1, 2, 1), 1, n, order)?;
            Ok((inner.get(n, order)? * extra).mul_monomial(&Rational::one(), 2 * n, (n * (n + 1) / 2) as u64))
        }));
    }
    let (k, a) = (k as u64, a as u64);
    Ok(Sequence::new(move |n, order| {
        let m = n as u64;
        let tri = m * (m + 1) / 2;
        let lin = m * m + m;
        // (sign, x-exponent, q-exponent, correction (c, x, q)) with
        // alpha = prefix * sign x^.. q^.. * (1 + c x^.. q^..).
        let (alt, x_exp, q_exp, corr): (bool, u64, u64, (i64, u64, u64)) = match family {
            Family::Hikami => (
                true,
                2 * k * m,
                tri + (a + 1) * m * m + (k - a - 1) * lin,
                (-1, 2 * (a + 1), (a + 1) * (2 * m + 1)),
            ),
            Family::Fam1 => (true, (2 * k - 1) * m, k * m * m + (k - 1) * m, (-1, 2, 2 * m + 1)),
            Family::Fam2 => (
                true,
                (2 * k - 2) * m,
                (2 * k - 1) * m * m + (2 * k - 2) * m,
                (-1, 1, 2 * m + 1),
            ),
            Family::Fam3 => (
                true,
                (2 * k - 1) * m,
                2 * (a + 1) * m * m + m + 2 * (k - a - 1) * lin,
                (
                    if fam3_sign == Fam3Sign::Minus { -1 } else { 1 },
                    2 * a + 1,
                    (2 * a + 1) * (2 * m + 1),
                ),
            ),
            Family::Fam4 => (
                false,
                (2 * k - 2) * m,
                tri + a * m * m + (k - a - 1) * lin,
                (1, 2 * a, a * (2 * m + 1)),
            ),
            Family::Fam5 => unreachable!("handled above"),
        };
        let base = family.base();
        let coeff = if alt { sign(n) } else { Rational::one() };
        let head = x2q_prefix(base, n, order)?.mul_monomial(&coeff, x_exp as usize, q_exp);
        let correction = head.mul_monomial(&Rational::from_int(corr.0), corr.1 as usize, corr.2);
        Ok(head + correction)
    }))
}

/// Build a family's pair by its recipe and attach the closed-form alpha.
///
/// For family 3 both signs of the closed alpha are tried; the one that forms
/// a pair with the iterated beta is kept.
pub fn build_family_pair(family: Family, k: u32, a: u32) -> Result<FamilyPair> {
    const CHECK_N: usize = 3;
    const CHECK_ORDER: u32 = 20;
    let iterated = family_recipe(family, k, a)?;
    let (alpha, fam3_sign) = if family == Family::Fam3 {
        let mut passing = Vec::new();
        for s in [Fam3Sign::Minus, Fam3Sign::Plus] {
            let candidate = iterated.with_alpha(closed_alpha(family, k, a, s)?, "candidate");
            if verify_pair(&candidate, CHECK_N, CHECK_ORDER)?.passed() {
                passing.push(s);
            }
        }
        match passing.as_slice() {
            [s] => (closed_alpha(family, k, a, *s)?, Some(*s)),
            _ => {
                return Err(Error::PreconditionViolated(format!(
                    "family3 k={k} a={a}: {} closed-alpha signs verified, expected exactly one",
                    passing.len()
                )))
            }
        }
    } else {
        (closed_alpha(family, k, a, Fam3Sign::Minus)?, None)
    };
    let sign_note = match fam3_sign {
        Some(Fam3Sign::Minus) => ", sign resolved to minus",
        Some(Fam3Sign::Plus) => ", sign resolved to plus",
        None => "",
    };
    let displayed = iterated.with_alpha(alpha, &format!("{family}(k={k}, a={a}) closed alpha{sign_note}"));
    Ok(FamilyPair {
        family,
        k,
        a,
        iterated,
        displayed,
        fam3_sign,
    })
}

/// The family's beta_n as a multisum with outer index fixed at `n`.
pub fn closed_beta(family: Family, k: u32, a: u32, n: usize, order: u32) -> Result<QSeries> {
    evaluate_series(&closed_beta_spec(family, k, a)?, OuterRange::Fixed(n), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_pairs_verify() {
        for bp in ALL_BASE_PAIRS {
            let r = verify_pair(&bp.slater().unwrap(), 4, 12).unwrap();
            assert!(r.passed(), "{}: {:?}", bp.name(), r.failure);
            let r = verify_pair(&bp.displayed(), 4, 12).unwrap();
            assert!(r.passed(), "{} displayed: {:?}", bp.name(), r.failure);
        }
    }

    #[test]
    fn displayed_matches_normalized_slater() {
        for bp in ALL_BASE_PAIRS {
            let s = bp.normalized().unwrap();
            let d = bp.displayed();
            for n in 0..5 {
                assert_eq!(
                    s.alpha.get(n, 12).unwrap(),
                    d.alpha.get(n, 12).unwrap(),
                    "{} alpha {n}",
                    bp.name()
                );
                assert_eq!(
                    s.beta.get(n, 12).unwrap(),
                    d.beta.get(n, 12).unwrap(),
                    "{} beta {n}",
                    bp.name()
                );
            }
        }
    }

    #[test]
    fn corrupted_pair_fails_at_one() {
        let p = BasePair::Zagier.slater().unwrap();
        let beta = p.beta.clone();
        let bad = BaileyPair {
            beta: Sequence::new(move |n, order| {
                let v = beta.get(n, order)?;
                Ok(if n == 1 {
                    v + QSeries::monomial(Rational::one(), 0, 1, order)
                } else {
                    v
                })
            }),
            ..p
        };
        let r = verify_pair(&bad, 3, 10).unwrap();
        assert_eq!(r.failure.unwrap().n, 1);
    }

    #[test]
    fn key_is_shift_after_one_minus() {
        let p = BasePair::Family1.slater().unwrap();
        let key = shift_lemma(&p, &ShiftKind::Key).unwrap();
        let om = shift_lemma(&p, &ShiftKind::OneMinusQn).unwrap();
        let composed = shift_lemma(&om, &ShiftKind::IndexShift { check_order: 12 }).unwrap();
        for n in 0..4 {
            assert_eq!(key.alpha.get(n, 12).unwrap(), composed.alpha.get(n, 12).unwrap());
            assert_eq!(key.beta.get(n, 12).unwrap(), composed.beta.get(n, 12).unwrap());
        }
        assert!(verify_pair(&key, 3, 12).unwrap().passed());
    }

    #[test]
    fn index_shift_checks_precondition() {
        let p = BasePair::Zagier.slater().unwrap();
        assert!(matches!(
            shift_lemma(&p, &ShiftKind::IndexShift { check_order: 5 }),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn gamma_star_pairs_verify() {
        let p = BasePair::Zagier.slater().unwrap();
        for b in [None, Some(Monomial::q(1, 1)), Some(Monomial::xq(-1, 1, 0))] {
            let g = shift_lemma(&p, &ShiftKind::GammaStar(b.clone())).unwrap();
            assert!(verify_pair(&g, 3, 10).unwrap().passed(), "{b:?}");
        }
    }

    #[test]
    fn inversion_recovers_alpha() {
        let p = BasePair::HikamiSeed.slater().unwrap();
        let alpha = invert_pair(&p.beta, &p.rel_param, p.base);
        for n in 0..5 {
            assert_eq!(alpha.get(n, 12).unwrap(), p.alpha.get(n, 12).unwrap());
        }
        let zero = invert_pair(&Sequence::zero(), &p.rel_param, 1);
        assert!(zero.get(3, 10).unwrap().is_zero());
    }

    #[test]
    fn step_changes_nothing_at_zero() {
        let p = BasePair::Zagier.slater().unwrap();
        let s = bailey_step(&p, &Rho::Infinity, &Rho::Infinity).unwrap();
        assert_eq!(s.alpha.get(0, 8).unwrap(), p.alpha.get(0, 8).unwrap());
        assert_eq!(s.beta.get(0, 8).unwrap(), p.beta.get(0, 8).unwrap());
        let s = bailey_step(&p, &Rho::Finite(Monomial::q(-1, 1)), &Rho::Infinity).unwrap();
        assert!(verify_pair(&s, 3, 10).unwrap().passed());
    }

    #[test]
    fn bad_rho_is_rejected() {
        let p = BasePair::Zagier.slater().unwrap();
        let r = bailey_step(&p, &Rho::Finite(Monomial::xq(1, 2, 2)), &Rho::Infinity);
        assert!(matches!(r, Err(Error::BadSpecialization(_))));
    }

    #[test]
    fn zagier_x_identity() {
        let p = BasePair::Zagier.slater().unwrap();
        let (lhs, rhs) = x2q_identity(&p, 12, 6).unwrap();
        assert_eq!(lhs, rhs);
        let mut expected = QSeries::zero(12);
        for n in 0..3usize {
            let e = (n * (3 * n + 1) / 2) as u64;
            expected = expected + QSeries::monomial(sign(n), 3 * n, e, 12);
            expected = expected - QSeries::monomial(sign(n), 3 * n + 2, e + 2 * n as u64 + 1, 12);
        }
        assert_eq!(rhs, expected.truncate_x(6));
    }

    #[test]
    fn x2q_identity_needs_x2q() {
        let p = BasePair::HikamiSeed.slater().unwrap();
        assert!(matches!(x2q_identity(&p, 5, 3), Err(Error::BadRelParam(_))));
    }

    #[test]
    fn family_pairs_small() {
        for (family, k, a) in [
            (Family::Hikami, 2, 1),
            (Family::Fam1, 2, 0),
            (Family::Fam2, 2, 0),
            (Family::Fam3, 2, 0),
            (Family::Fam4, 2, 0),
            (Family::Fam5, 2, 0),
        ] {
            let fp = build_family_pair(family, k, a).unwrap();
            assert!(verify_pair(&fp.displayed, 3, 10).unwrap().passed(), "{family}");
            for n in 0..3 {
                assert_eq!(
                    closed_beta(family, k, a, n, 10).unwrap(),
                    fp.iterated.beta.get(n, 10).unwrap(),
                    "{family} beta {n}"
                );
                assert_eq!(
                    fp.displayed.alpha.get(n, 10).unwrap(),
                    fp.iterated.alpha.get(n, 10).unwrap()
                );
            }
        }
    }

    #[test]
    fn family3_sign_is_minus() {
        let fp = build_family_pair(Family::Fam3, 2, 0).unwrap();
        assert_eq!(fp.fam3_sign, Some(Fam3Sign::Minus));
    }
}
