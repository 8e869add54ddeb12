//! q-Pochhammer symbols, Gaussian binomials, periodic characters, partial
//! theta series, Lambert sums and the Jacobi triple product.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{lcm, Rational};
use crate::series::{QSeries, Substitution, XPoly};

/// `coeff * x^x_exp * q^q_exp`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Rational,
    pub x_exp: u32,
    pub q_exp: u32,
}

impl Monomial {
    pub fn new(coeff: Rational, x_exp: u32, q_exp: u32) -> Self {
        Monomial { coeff, x_exp, q_exp }
    }

    /// `c * q^e` with an integer coefficient.
    pub fn q(c: i64, q_exp: u32) -> Self {
        Self::new(Rational::from_int(c), 0, q_exp)
    }

    /// `c * x^x_exp * q^q_exp` with an integer coefficient.
    pub fn xq(c: i64, x_exp: u32, q_exp: u32) -> Self {
        Self::new(Rational::from_int(c), x_exp, q_exp)
    }

    pub fn one() -> Self {
        Self::q(1, 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            &self.coeff * &other.coeff,
            self.x_exp + other.x_exp,
            self.q_exp + other.q_exp,
        )
    }

    /// `self / other`, when the quotient still has non-negative exponents.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.coeff.is_zero() {
            return None;
        }
        Some(Monomial::new(
            &self.coeff / &other.coeff,
            self.x_exp.checked_sub(other.x_exp)?,
            self.q_exp.checked_sub(other.q_exp)?,
        ))
    }

    pub fn times_q(&self, e: u32) -> Monomial {
        Monomial::new(self.coeff.clone(), self.x_exp, self.q_exp + e)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial::new(self.coeff.pow(n), self.x_exp * n, self.q_exp * n)
    }

    pub fn neg(&self) -> Monomial {
        Monomial::new(-&self.coeff, self.x_exp, self.q_exp)
    }

    pub fn at_x_one(&self) -> Monomial {
        Monomial::new(self.coeff.clone(), 0, self.q_exp)
    }

    /// `q -> q^m`.
    pub fn dilate(&self, m: u32) -> Monomial {
        Monomial::new(self.coeff.clone(), self.x_exp, self.q_exp * m)
    }

    /// Whether `1 - self` is invertible in `Q[x][[q]]`.
    pub fn one_minus_is_unit(&self) -> bool {
        self.q_exp >= 1 || (self.x_exp == 0 && !self.coeff.is_one())
    }

    pub fn to_qseries(&self, order: u32) -> QSeries {
        QSeries::monomial(self.coeff.clone(), self.x_exp as usize, self.q_exp as u64, order)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.x_exp > 0 {
            write!(f, "*x^{}", self.x_exp)?;
        }
        if self.q_exp > 0 {
            write!(f, "*q^{}", self.q_exp)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Pochhammer argument or the formal limit point used by the Bailey lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PochArg {
    Mono(Monomial),
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochSpec {
    pub arg: PochArg,
    pub base: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLen {
    Finite(usize),
    Infinite,
}

/// `(arg; q^base)_n` for finite `n`.
pub fn poch_finite(arg: &Monomial, base: u32, n: usize, order: u32) -> QSeries {
    let mut acc = QSeries::one(order);
    for j in 0..n {
        let e = arg.q_exp as u64 + base as u64 * j as u64;
        if e > order as u64 {
            break;
        }
        acc.mul_one_minus(&arg.coeff, arg.x_exp as usize, e as u32);
    }
    acc
}

/// `1 / (arg; q^base)_n`.
pub fn poch_inverse(arg: &Monomial, base: u32, n: usize, order: u32) -> Result<QSeries> {
    let mut acc = QSeries::one(order);
    for j in 0..n {
        let e = arg.q_exp as u64 + base as u64 * j as u64;
        if e > order as u64 {
            break;
        }
        acc.div_one_minus(&arg.coeff, arg.x_exp as usize, e as u32)?;
    }
    Ok(acc)
}

/// `(arg; q^base)_inf`; the argument must carry a positive power of `q`.
pub fn poch_infinite(arg: &Monomial, base: u32, order: u32) -> Result<QSeries> {
    if arg.q_exp == 0 {
        return Err(Error::DivergentProduct(arg.to_string()));
    }
    let terms = (order.saturating_sub(arg.q_exp) / base) as usize + 1;
    Ok(poch_finite(arg, base, terms, order))
}

pub fn poch(spec: &PochSpec, len: PochLen, order: u32) -> Result<QSeries> {
    let arg = match &spec.arg {
        PochArg::Mono(m) => m,
        PochArg::Infinity => return Err(Error::InfiniteArgument),
    };
    match len {
        PochLen::Finite(n) => Ok(poch_finite(arg, spec.base, n, order)),
        PochLen::Infinite => poch_infinite(arg, spec.base, order),
    }
}

/// Coefficients of the Gaussian polynomial `[n over k]` in `q`.
pub fn gaussian_coeffs(n: i64, k: i64) -> Vec<BigInt> {
    if k < 0 || n < 0 || k > n {
        return Vec::new();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let mut poly = vec![BigInt::one()];
    // After step j the polynomial equals [n-k+j over j].
    for j in 1..=k {
        let top = n - k + j;
        let mut next = poly.clone();
        next.resize(poly.len() + top, BigInt::zero());
        for (d, c) in poly.iter().enumerate() {
            next[d + top] -= c;
        }
        for d in j..next.len() {
            let prev = next[d - j].clone();
            next[d] += prev;
        }
        next.truncate(next.len() - j);
        poly = next;
    }
    poly
}

/// `[n over k]` in base `q^base` as a series.
pub fn qbinom(n: i64, k: i64, base: u32, order: u32) -> QSeries {
    let coeffs = gaussian_coeffs(n, k);
    QSeries::from_terms(
        coeffs
            .into_iter()
            .enumerate()
            .filter(|(d, _)| *d as u64 * base as u64 <= order as u64)
            .map(|(d, c)| (d as u32 * base, XPoly::constant(Rational::from_bigint(c)))),
        order,
    )
}

/// Function on the integers with period `period`, stored by residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicFunction {
    pub period: u32,
    values: Vec<Rational>,
}

impl PeriodicFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty(), "empty period");
        PeriodicFunction {
            period: values.len() as u32,
            values,
        }
    }

    pub fn zero(period: u32) -> Self {
        Self::new(vec![Rational::zero(); period as usize])
    }

    /// `+1` on `plus`, `-1` on `minus` (residues reduced mod `period`).
    pub fn signed(period: u32, plus: &[i64], minus: &[i64]) -> Self {
        let mut values = vec![Rational::zero(); period as usize];
        for &r in plus {
            values[r.rem_euclid(period as i64) as usize] = Rational::one();
        }
        for &r in minus {
            values[r.rem_euclid(period as i64) as usize] = Rational::from_int(-1);
        }
        Self::new(values)
    }

    pub fn value(&self, n: i64) -> &Rational {
        &self.values[n.rem_euclid(self.period as i64) as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_even(&self) -> bool {
        (0..self.period as i64).all(|n| self.value(n) == self.value(-n))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rational::is_zero)
    }
}

/// The periodic characters appearing on the right-hand sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterKind {
    /// The symbol `(12/n)`.
    Zagier12,
    /// Modulus `8k+4`.
    Hikami { k: u32, a: u32 },
    /// Modulus `4k`.
    Fam1 { k: u32 },
    /// Modulus `8k-4`.
    Fam2 { k: u32 },
    /// Modulus `8k`.
    Fam3 { k: u32, a: u32 },
    /// Modulus `4k-2`.
    Fam4 { k: u32, a: u32 },
    /// Modulus `4k`, with a shift parameter.
    Fam5 { k: u32, a: u32 },
    /// Modulus `2st`.
    Torus { s: u32, t: u32 },
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParams(msg()))
    }
}

pub fn character(kind: CharacterKind) -> Result<PeriodicFunction> {
    use CharacterKind::*;
    let chi = match kind {
        Zagier12 => PeriodicFunction::signed(12, &[1, 11], &[5, 7]),
        Hikami { k, a } => {
            check(k >= 1 && a < k, || {
                format!("hikami character needs 0 <= a < k, got k={k} a={a}")
            })?;
            let (k, a) = (k as i64, a as i64);
            PeriodicFunction::signed(
                (8 * k + 4) as u32,
                &[2 * k - 2 * a - 1, 6 * k + 2 * a + 5],
                &[2 * k + 2 * a + 3, 6 * k - 2 * a + 1],
            )
        }
        Fam1 { k } => {
            check(k >= 1, || "family-1 character needs k >= 1".into())?;
            let k = k as i64;
            PeriodicFunction::signed((4 * k) as u32, &[k - 1, 3 * k + 1], &[k + 1, 3 * k - 1])
        }
        Fam2 { k } => {
            check(k >= 1, || "family-2 character needs k >= 1".into())?;
            let k = k as i64;
            PeriodicFunction::signed((8 * k - 4) as u32, &[2 * k - 2, 6 * k - 2], &[2 * k, 6 * k - 4])
        }
        Fam3 { k, a } => {
            check(k >= 1 && a < k, || {
                format!("family-3 character needs 0 <= a < k, got k={k} a={a}")
            })?;
            let (k, a) = (k as i64, a as i64);
            PeriodicFunction::signed(
                (8 * k) as u32,
                &[2 * k - 2 * a - 1, 6 * k + 2 * a + 1],
                &[2 * k + 2 * a + 1, 6 * k - 2 * a - 1],
            )
        }
        Fam4 { k, a } => {
            check(k >= 1 && a < k, || {
                format!("family-4 character needs 0 <= a < k, got k={k} a={a}")
            })?;
            let (k, a) = (k as i64, a as i64);
            let c = 2 * k - 2 * a - 1;
            PeriodicFunction::signed((4 * k - 2) as u32, &[c, -c], &[])
        }
        Fam5 { k, a } => {
            check(k >= 2 && a + 1 < k, || {
                format!("family-5 character needs 0 <= a < k-1, got k={k} a={a}")
            })?;
            let (k, a) = (k as i64, a as i64);
            PeriodicFunction::signed((4 * k) as u32, &[k - a - 1, 3 * k + a + 1], &[k + a + 1, 3 * k - a - 1])
        }
        Torus { s, t } => {
            check(s >= 1 && t >= 1, || "torus character needs s, t >= 1".into())?;
            let (s, t) = (s as i64, t as i64);
            PeriodicFunction::signed(
                (2 * s * t) as u32,
                &[s * t - s - t, s * t + s + t],
                &[s * t - s + t, s * t + s - t],
            )
        }
    };
    debug_assert!(chi.is_even());
    Ok(chi)
}

/// `prefactor * sum_{n >= 0} n^weight chi(n) q^((n^2 - shift^2) / divisor)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTheta {
    pub chi: PeriodicFunction,
    pub weight: u32,
    pub divisor: u32,
    pub shift: u32,
    pub prefactor: Rational,
}

/// Exponent of `x` attached to the `n`-th term: `(n - offset) / divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XRule {
    pub offset: i64,
    pub divisor: i64,
}

impl PartialTheta {
    /// q-exponent of the `n`-th term, or `None` off the support.
    pub fn exponent(&self, n: i64) -> Result<Option<u64>> {
        if self.chi.value(n).is_zero() {
            return Ok(None);
        }
        let c = self.shift as i64;
        let num = n as i128 * n as i128 - c as i128 * c as i128;
        if num % self.divisor as i128 != 0 {
            return Err(Error::IntegralityViolation {
                n,
                detail: format!("{} does not divide n^2 - {}", self.divisor, c * c),
            });
        }
        if num < 0 {
            return Err(Error::IntegralityViolation {
                n,
                detail: "negative q-exponent".into(),
            });
        }
        Ok(Some((num / self.divisor as i128) as u64))
    }

    /// Checks divisibility of `n^2 - c^2` over a joint period of `chi` and the divisor.
    pub fn check_integrality(&self) -> Result<()> {
        let span = lcm(self.chi.period as u64, self.divisor as u64) as i64;
        let c = self.shift as i64;
        for n in 0..span {
            if self.chi.value(n).is_zero() {
                continue;
            }
            let r = (n as i128 * n as i128 - c as i128 * c as i128).rem_euclid(self.divisor as i128);
            if r != 0 {
                return Err(Error::IntegralityViolation {
                    n,
                    detail: format!("{} does not divide n^2 - {}", self.divisor, c * c),
                });
            }
        }
        Ok(())
    }
}

pub fn partial_theta_qseries(pt: &PartialTheta, x_rule: Option<XRule>, order: u32) -> Result<QSeries> {
    pt.check_integrality()?;
    let mut out = QSeries::zero(order);
    let c = pt.shift as i64;
    let mut n: i64 = 0;
    loop {
        if n > c && (n as i128 * n as i128 - c as i128 * c as i128) > pt.divisor as i128 * order as i128 {
            break;
        }
        if let Some(e) = pt.exponent(n)? {
            if e <= order as u64 {
                let x_exp = match x_rule {
                    None => 0,
                    Some(rule) => {
                        let num = n - rule.offset;
                        if num < 0 || num % rule.divisor != 0 {
                            return Err(Error::IntegralityViolation {
                                n,
                                detail: format!(
                                    "x-exponent ({n} - {}) / {} is not a natural number",
                                    rule.offset, rule.divisor
                                ),
                            });
                        }
                        (num / rule.divisor) as usize
                    }
                };
                let weight = Rational::from_int(n).pow(pt.weight);
                let c = &(&weight * pt.chi.value(n)) * &pt.prefactor;
                out = out + QSeries::monomial(c, x_exp, e, order);
            }
        }
        n += 1;
    }
    Ok(out)
}

/// `sum_{j >= 1} q^(cj) / (1 - sign q^(dj))`.
pub fn lambert_sum(c: u32, d: u32, sign: i64, order: u32) -> QSeries {
    assert!(c >= 1 && d >= 1, "lambert_sum needs c, d >= 1");
    let mut coeffs = vec![0i64; order as usize + 1];
    let mut j = 1u64;
    while c as u64 * j <= order as u64 {
        let mut m = 0u64;
        loop {
            let e = c as u64 * j + d as u64 * j * m;
            if e > order as u64 {
                break;
            }
            coeffs[e as usize] += if sign < 0 && m % 2 == 1 { -1 } else { 1 };
            m += 1;
        }
        j += 1;
    }
    QSeries::from_ints(&coeffs, order)
}

/// Bilateral theta `sum_{n in Z} sign^n q^((quad n^2 + lin n) / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleProductArg {
    pub sign: i64,
    pub quad: u32,
    pub lin: i64,
}

/// Both sides of the Jacobi triple product for the given specialization.
pub fn triple_product(arg: TripleProductArg, order: u32) -> Result<(QSeries, QSeries)> {
    let TripleProductArg { sign, quad, lin } = arg;
    let a = quad as i64;
    if a < 1 || lin.abs() > a || (a + lin) % 2 != 0 || sign.abs() != 1 {
        return Err(Error::BadSpecialization(format!(
            "triple product needs |lin| <= quad and matching parity, got quad={quad} lin={lin} sign={sign}"
        )));
    }
    let mut lhs = QSeries::zero(order);
    let bound = (2.0 * order as f64 / a as f64).sqrt() as i64 + 2 + lin.abs();
    for n in -bound..=bound {
        let e = (a * n * n + lin * n) / 2;
        if e <= order as i64 {
            let c = if sign < 0 && n.rem_euclid(2) == 1 { -1 } else { 1 };
            lhs = lhs + QSeries::monomial(Rational::from_int(c), 0, e as u64, order);
        }
    }
    let factor = |e: i64| -> Result<QSeries> {
        let m = Monomial::q(-sign, e as u32);
        if e == 0 {
            let head = Rational::one() - &m.coeff;
            Ok(poch_infinite(&m.times_q(a as u32), a as u32, order)?.scale(&head))
        } else {
            poch_infinite(&m, a as u32, order)
        }
    };
    let rhs =
        factor((a + lin) / 2)? * factor((a - lin) / 2)? * poch_infinite(&Monomial::q(1, a as u32), a as u32, order)?;
    Ok((lhs, rhs))
}

/// Apply `q -> q^base` to a series built in base `q`.
pub fn rebase(f: &QSeries, base: u32) -> QSeries {
    if base == 1 {
        f.clone()
    } else {
        f.substitute(&Substitution::QPower(base))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &QSeries) -> Vec<i64> {
        f.to_rationals()
            .unwrap()
            .iter()
            .map(|r| r.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn pochhammer_examples() {
        let p = poch_finite(&Monomial::q(1, 1), 1, 3, 6);
        assert_eq!(ints(&p), vec![1, -1, -1, 0, 1, 1, -1]);
        assert_eq!(poch_finite(&Monomial::xq(7, 3, 0), 1, 0, 4), QSeries::one(4));
        let p = poch_finite(&Monomial::xq(-1, 1, 1), 1, 2, 5);
        let expected = QSeries::one(5)
            + Monomial::xq(1, 1, 1).to_qseries(5)
            + Monomial::xq(1, 1, 2).to_qseries(5)
            + Monomial::xq(1, 2, 3).to_qseries(5);
        assert_eq!(p, expected);
        assert!(matches!(
            poch_infinite(&Monomial::q(-1, 0), 1, 5),
            Err(Error::DivergentProduct(_))
        ));
        let spec = PochSpec {
            arg: PochArg::Infinity,
            base: 1,
        };
        assert_eq!(poch(&spec, PochLen::Finite(2), 5), Err(Error::InfiniteArgument));
    }

    #[test]
    fn euler_pentagonal() {
        let p = poch_infinite(&Monomial::q(1, 1), 1, 15).unwrap();
        let mut expected = vec![0i64; 16];
        for (e, c) in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)] {
            expected[e] = c;
        }
        assert_eq!(ints(&p), expected);
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(ints(&qbinom(4, 2, 1, 6)), vec![1, 1, 2, 1, 1, 0, 0]);
        assert_eq!(qbinom(5, 0, 1, 3), QSeries::one(3));
        assert!(qbinom(2, 3, 1, 3).is_zero());
        assert!(qbinom(2, -1, 1, 3).is_zero());
        assert_eq!(ints(&qbinom(2, 1, 2, 4)), vec![1, 0, 1, 0, 0]);
    }

    #[test]
    fn character_tables() {
        let z = character(CharacterKind::Zagier12).unwrap();
        for n in 0..12 {
            let want = match n {
                1 | 11 => 1,
                5 | 7 => -1,
                _ => 0,
            };
            assert_eq!(*z.value(n), Rational::from_int(want));
        }
        let f1 = character(CharacterKind::Fam1 { k: 1 }).unwrap();
        assert_eq!(f1.values(), &[1, 0, -1, 0].map(Rational::from_int));
        let h = character(CharacterKind::Hikami { k: 1, a: 0 }).unwrap();
        assert_eq!(h, z);
        assert!(character(CharacterKind::Hikami { k: 2, a: 2 }).is_err());
        assert!(character(CharacterKind::Fam5 { k: 2, a: 1 }).is_err());
    }

    #[test]
    fn zagier_partial_theta() {
        let pt = PartialTheta {
            chi: character(CharacterKind::Zagier12).unwrap(),
            weight: 1,
            divisor: 24,
            shift: 1,
            prefactor: Rational::new(-1, 2),
        };
        let s = partial_theta_qseries(&pt, None, 5).unwrap();
        // (12/5) = (12/7) = -1, so those terms flip sign.
        let want: Vec<Rational> = [-1, 5, 7, 0, 0, -11].iter().map(|&c| Rational::new(c, 2)).collect();
        assert_eq!(s.to_rationals().unwrap(), want);
    }

    #[test]
    fn family4_partial_theta() {
        let pt = PartialTheta {
            chi: character(CharacterKind::Fam4 { k: 1, a: 0 }).unwrap(),
            weight: 0,
            divisor: 8,
            shift: 1,
            prefactor: Rational::one(),
        };
        let s = partial_theta_qseries(&pt, None, 6).unwrap();
        assert_eq!(ints(&s), vec![1, 1, 0, 1, 0, 0, 1]);
        let zero = PartialTheta {
            chi: PeriodicFunction::zero(5),
            ..pt
        };
        assert!(partial_theta_qseries(&zero, None, 6).unwrap().is_zero());
    }

    #[test]
    fn integrality_is_checked() {
        let pt = PartialTheta {
            chi: character(CharacterKind::Zagier12).unwrap(),
            weight: 1,
            divisor: 7,
            shift: 1,
            prefactor: Rational::one(),
        };
        assert!(matches!(
            partial_theta_qseries(&pt, None, 5),
            Err(Error::IntegralityViolation { .. })
        ));
    }

    #[test]
    fn lambert_examples() {
        assert_eq!(ints(&lambert_sum(1, 1, 1, 4)), vec![0, 1, 2, 2, 3]);
        // q/(1+q^2) + q^2/(1+q^4) + q^3/(1+q^6): the q^3 terms cancel.
        assert_eq!(ints(&lambert_sum(1, 2, -1, 3)), vec![0, 1, 1, 0]);
        assert!(lambert_sum(1, 1, 1, 0).is_zero());
    }

    #[test]
    fn triple_products() {
        for arg in [
            TripleProductArg {
                sign: -1,
                quad: 2,
                lin: 0,
            },
            TripleProductArg {
                sign: -1,
                quad: 2,
                lin: 2,
            },
            TripleProductArg {
                sign: -1,
                quad: 4,
                lin: 2,
            },
            TripleProductArg {
                sign: 1,
                quad: 1,
                lin: 1,
            },
            TripleProductArg {
                sign: -1,
                quad: 5,
                lin: 3,
            },
        ] {
            let (lhs, rhs) = triple_product(arg, 30).unwrap();
            assert_eq!(lhs, rhs, "{arg:?}");
        }
        let (lhs, rhs) = triple_product(
            TripleProductArg {
                sign: -1,
                quad: 2,
                lin: 0,
            },
            30,
        )
        .unwrap();
        let odd = poch_infinite(&Monomial::q(1, 1), 2, 30).unwrap();
        let even = poch_infinite(&Monomial::q(1, 2), 2, 30).unwrap();
        assert_eq!(rhs, &(&odd * &odd) * &even);
        assert_eq!(lhs.coefficient(0).unwrap(), XPoly::one());
        assert!(triple_product(
            TripleProductArg {
                sign: -1,
                quad: 2,
                lin: 4
            },
            5
        )
        .is_err());
    }
}
