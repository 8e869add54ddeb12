//! Exact arithmetic in the cyclotomic field `Q(zeta_M)`, truncated power
//! series in `t` over it, and evaluation of terminating multisums under
//! `q -> zeta e^(-t)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::multisum::{evaluate, Evaluator, MultisumSpec, OuterRange};
use crate::qfunctions::{gaussian_coeffs, Monomial};
use crate::rational::{factorial, gcd, Rational};
use crate::series::QSeries;

/// Coefficients (constant term first) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic polynomials are indexed from 1");
    // x^m - 1 divided by every Phi_d with d | m, d < m.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = div_monic(&num, &cyclotomic_poly(d));
    }
    num
}

/// Exact quotient of integer polynomials by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = rem.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    quot
}

/// Euler's totient.
pub fn totient(m: u32) -> u32 {
    (1..=m).filter(|j| gcd(*j as u64, m as u64) == 1).count() as u32
}

/// The field `Q(zeta_M)` in the power basis modulo `Phi_M`.
#[derive(Debug)]
pub struct CycField {
    order: u32,
    phi: Vec<i64>,
    /// Coordinates of `zeta^r` for `0 <= r < M`.
    powers: Vec<Vec<Rational>>,
}

impl CycField {
    /// The shared field of order `m`.
    pub fn get(m: u32) -> Arc<CycField> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut fields = fields.lock().expect("field cache poisoned");
        fields.entry(m).or_insert_with(|| Arc::new(CycField::build(m))).clone()
    }

    fn build(m: u32) -> CycField {
        let phi = cyclotomic_poly(m);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut current = vec![Rational::zero(); degree];
        current[0] = Rational::one();
        for _ in 0..m {
            powers.push(current.clone());
            // multiply by zeta: shift up, then reduce the overflow coefficient
            let top = current[degree - 1].clone();
            for i in (1..degree).rev() {
                current[i] = current[i - 1].clone();
            }
            current[0] = Rational::zero();
            if !top.is_zero() {
                for (i, c) in current.iter_mut().enumerate() {
                    *c -= &(&top * &Rational::from_int(phi[i]));
                }
            }
        }
        CycField { order: m, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut coeffs: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for i in (d..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[i]);
            if c.is_zero() {
                continue;
            }
            for (j, p) in self.phi[..d].iter().enumerate() {
                if *p != 0 {
                    coeffs[i - d + j] -= &(&c * &Rational::from_int(*p));
                }
            }
        }
        coeffs.truncate(d);
        coeffs.resize(d, Rational::zero());
        coeffs
    }
}

/// An element of `Q(zeta_M)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coords: Vec<Rational>,
}

impl CycNum {
    pub fn from_rational(field: &Arc<CycField>, c: Rational) -> CycNum {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = c;
        CycNum {
            field: field.clone(),
            coords,
        }
    }

    pub fn zero(field: &Arc<CycField>) -> CycNum {
        Self::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Arc<CycField>) -> CycNum {
        Self::from_rational(field, Rational::one())
    }

    /// `zeta^p` for any integer `p`.
    pub fn zeta_power(field: &Arc<CycField>, p: i64) -> CycNum {
        let r = p.rem_euclid(field.order as i64) as usize;
        CycNum {
            field: field.clone(),
            coords: field.powers[r].clone(),
        }
    }

    /// Build from power-basis coordinates of any length, reducing mod `Phi_M`.
    pub fn from_coords(field: &Arc<CycField>, coords: Vec<Rational>) -> CycNum {
        let mut coords = coords;
        if coords.len() < field.degree() {
            coords.resize(field.degree(), Rational::zero());
        }
        CycNum {
            field: field.clone(),
            coords: field.reduce(coords),
        }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// The rational value, if the number lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Image under `Q(zeta_M) -> Q(zeta_L)`, `zeta_M -> zeta_L^(L/M)`.
    pub fn lift(&self, l: u32) -> Result<CycNum> {
        let m = self.field.order;
        if !l.is_multiple_of(m) {
            return Err(Error::BadParams(format!("cannot embed order {m} into order {l}")));
        }
        let target = CycField::get(l);
        let step = (l / m) as i64;
        let mut out = CycNum::zero(&target);
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &CycNum::zeta_power(&target, step * i as i64).scale(c);
            }
        }
        Ok(out)
    }

    fn common(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        if a.field.order == b.field.order {
            return (a.clone(), b.clone());
        }
        let l = lcm32(a.field.order, b.field.order);
        (
            a.lift(l).expect("lcm is a multiple"),
            b.lift(l).expect("lcm is a multiple"),
        )
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: Vec<Rational> = self.field.phi.iter().map(|c| Rational::from_int(*c)).collect();
        let (g, u) = ext_gcd(trim(self.coords.clone()), phi);
        // g is a nonzero constant because Phi_M is irreducible
        debug_assert_eq!(g.len(), 1);
        let g0 = g[0].recip();
        Ok(CycNum::from_coords(&self.field, u.iter().map(|c| c * &g0).collect()))
    }
}

fn lcm32(a: u32, b: u32) -> u32 {
    (a as u64 / gcd(a as u64, b as u64) * b as u64) as u32
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

/// Polynomial division with remainder over `Q`.
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    if rem.len() <= dn {
        return (vec![Rational::zero()], rem);
    }
    let lead = den[dn].recip();
    let mut quot = vec![Rational::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dn] * &lead;
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &(&c * d);
            }
        }
        quot[i] = c;
    }
    rem.truncate(dn.max(1));
    (quot, trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let get = |p: &[Rational], i: usize| p.get(i).cloned().unwrap_or_default();
    trim((0..n).map(|i| get(a, i) - get(b, i)).collect())
}

/// Returns `(g, u)` with `u a = g (mod m)`, `g = gcd(a, m)`.
fn ext_gcd(a: Vec<Rational>, m: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.field.order == other.field.order {
            self.coords == other.coords
        } else {
            let (a, b) = CycNum::common(self, other);
            a.coords == b.coords
        }
    }
}

impl Eq for CycNum {}

impl Add for &CycNum {
    type Output = CycNum;

    fn add(self, rhs: &CycNum) -> CycNum {
        if self.field.order != rhs.field.order {
            let (a, b) = CycNum::common(self, rhs);
            return &a + &b;
        }
        CycNum {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;

    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;

    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.field.order != rhs.field.order {
            let (a, b) = CycNum::common(self, rhs);
            return &a * &b;
        }
        CycNum {
            field: self.field.clone(),
            coords: self.field.reduce(poly_mul(&self.coords, &rhs.coords)),
        }
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = if c.is_negative() { -c } else { c.clone() };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{abs}*z^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({self})", self.field.order)
    }
}

/// Power series in `t` over `Q(zeta_M)`, truncated after `t^K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries {
    coeffs: Vec<CycNum>,
}

impl TSeries {
    pub fn constant(c: CycNum, t_order: usize) -> TSeries {
        let field = c.field.clone();
        let mut coeffs = vec![CycNum::zero(&field); t_order + 1];
        coeffs[0] = c;
        TSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<CycNum>) -> TSeries {
        assert!(!coeffs.is_empty(), "a t-series keeps at least its constant term");
        TSeries { coeffs }
    }

    pub fn zero(field: &Arc<CycField>, t_order: usize) -> TSeries {
        Self::constant(CycNum::zero(field), t_order)
    }

    pub fn one(field: &Arc<CycField>, t_order: usize) -> TSeries {
        Self::constant(CycNum::one(field), t_order)
    }

    pub fn t_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &CycNum {
        &self.coeffs[j]
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.coeffs[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    pub fn scale(&self, c: &CycNum) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn truncate(&self, t_order: usize) -> TSeries {
        TSeries {
            coeffs: self.coeffs[..=t_order.min(self.t_order())].to_vec(),
        }
    }

    pub fn inv(&self) -> Result<TSeries> {
        let b0 = self.coeffs[0].inv()?;
        let mut out = vec![b0.clone()];
        for k in 1..self.coeffs.len() {
            let mut acc = CycNum::zero(self.field());
            for i in 1..=k {
                acc = &acc + &(&self.coeffs[i] * &out[k - i]);
            }
            out.push(-&(&acc * &b0));
        }
        Ok(TSeries { coeffs: out })
    }
}

impl Add for &TSeries {
    type Output = TSeries;

    fn add(self, rhs: &TSeries) -> TSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TSeries {
    type Output = TSeries;

    fn sub(self, rhs: &TSeries) -> TSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &TSeries {
    type Output = TSeries;

    fn mul(self, rhs: &TSeries) -> TSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let field = self.field().clone();
        let mut coeffs = vec![CycNum::zero(&field); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TSeries { coeffs }
    }
}

/// `zeta^p e^(-m t)` truncated after `t^K`.
pub fn q_power(field: &Arc<CycField>, p: i64, m: i64, t_order: usize) -> TSeries {
    let root = CycNum::zeta_power(field, p);
    let coeffs = (0..=t_order)
        .map(|j| {
            let c = &Rational::from_int(-m).pow(j as u32) / &factorial(j as u64);
            root.scale(&c)
        })
        .collect();
    TSeries { coeffs }
}

/// The image of `q` under `q -> zeta_M^p e^(-t)`.
pub fn q_to_t(m: u32, zeta_power: i64, t_order: usize) -> TSeries {
    q_power(&CycField::get(m), zeta_power, 1, t_order)
}

/// `sum_d c_d q^d` under `q -> zeta e^(-t)`, grouping terms by `d mod M`.
pub fn eval_polynomial(field: &Arc<CycField>, terms: &[(u64, Rational)], t_order: usize) -> TSeries {
    let m = field.order as u64;
    let mut coeffs = Vec::with_capacity(t_order + 1);
    for j in 0..=t_order {
        let mut by_residue = vec![Rational::zero(); m as usize];
        for (d, c) in terms {
            if !c.is_zero() {
                by_residue[(d % m) as usize] += &(c * &Rational::from_int(-(*d as i64)).pow(j as u32));
            }
        }
        let mut acc = CycNum::zero(field);
        for (r, s) in by_residue.iter().enumerate() {
            if !s.is_zero() {
                acc = &acc + &CycNum::zeta_power(field, r as i64).scale(s);
            }
        }
        coeffs.push(acc.scale(&factorial(j as u64).recip()));
    }
    TSeries { coeffs }
}

impl CycField {
    /// Value at `q = zeta` of a series that is a polynomial in `q` free of `x`
    /// (the truncation order must cover its degree).
    pub fn eval_qseries(self: &Arc<Self>, f: &QSeries) -> Result<CycNum> {
        let mut acc = CycNum::zero(self);
        for (d, p) in f.terms() {
            let c = p
                .as_constant()
                .ok_or_else(|| Error::Unsupported("evaluating a series with x-dependence at a root of unity".into()))?;
            acc = &acc + &CycNum::zeta_power(self, d as i64).scale(&c);
        }
        Ok(acc)
    }
}

type FactorKey = (Monomial, u32);

/// Multisum arithmetic under `q -> zeta_M e^(-t)` with `x = 1`.
pub struct RootEvaluator {
    field: Arc<CycField>,
    t_order: usize,
    poch_cache: HashMap<FactorKey, Vec<TSeries>>,
    inv_cache: HashMap<FactorKey, Vec<TSeries>>,
    binom_cache: HashMap<(usize, usize, u32), TSeries>,
}

impl RootEvaluator {
    pub fn new(root: u32, t_order: usize) -> Self {
        RootEvaluator {
            field: CycField::get(root),
            t_order,
            poch_cache: HashMap::new(),
            inv_cache: HashMap::new(),
            binom_cache: HashMap::new(),
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    /// `1 - c q^e`.
    fn one_minus(&self, c: &Rational, e: u64) -> TSeries {
        let one = TSeries::one(&self.field, self.t_order);
        let term = q_power(&self.field, e as i64, e as i64, self.t_order);
        &one - &term.scale(&CycNum::from_rational(&self.field, c.clone()))
    }

    fn extend(&mut self, arg: &Monomial, base: u32, len: usize, invert: bool) -> Result<TSeries> {
        let key = (arg.clone(), base);
        let cache = if invert { &self.inv_cache } else { &self.poch_cache };
        if let Some(list) = cache.get(&key) {
            if list.len() > len {
                return Ok(list[len].clone());
            }
        }
        let mut list = cache
            .get(&key)
            .cloned()
            .unwrap_or_else(|| vec![TSeries::one(&self.field, self.t_order)]);
        while list.len() <= len {
            let j = list.len() - 1;
            let e = arg.q_exp as u64 + base as u64 * j as u64;
            let mut factor = self.one_minus(&arg.coeff, e);
            if invert {
                if factor.coeff(0).is_zero() {
                    return Err(Error::DenominatorVanishes {
                        root: self.field.order,
                        factor: format!("1 - ({})q^{e}", arg.coeff),
                    });
                }
                factor = factor.inv()?;
            }
            let next = &list[j] * &factor;
            list.push(next);
        }
        let out = list[len].clone();
        let cache = if invert {
            &mut self.inv_cache
        } else {
            &mut self.poch_cache
        };
        cache.insert(key, list);
        Ok(out)
    }
}

impl Evaluator for RootEvaluator {
    type Value = TSeries;

    fn one(&self) -> TSeries {
        TSeries::one(&self.field, self.t_order)
    }

    fn zero(&self) -> TSeries {
        TSeries::zero(&self.field, self.t_order)
    }

    fn add(&self, a: &TSeries, b: &TSeries) -> TSeries {
        a + b
    }

    fn mul(&self, a: &TSeries, b: &TSeries) -> TSeries {
        a * b
    }

    fn is_zero(&self, v: &TSeries) -> bool {
        v.is_zero()
    }

    fn mul_monomial(&mut self, v: &TSeries, coeff: &Rational, _x_exp: u64, q_exp: u64) -> Result<TSeries> {
        let c = CycNum::from_rational(&self.field, coeff.clone());
        let q = q_power(&self.field, q_exp as i64, q_exp as i64, self.t_order);
        Ok(&v.scale(&c) * &q)
    }

    fn poch(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<TSeries> {
        self.extend(arg, base, len, false)
    }

    fn poch_inv(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<TSeries> {
        self.extend(arg, base, len, true)
    }

    fn poch_tail(&mut self, _arg: &Monomial, _base: u32, _len: usize) -> Result<TSeries> {
        Err(Error::Unsupported(
            "tails of infinite products at a root of unity".into(),
        ))
    }

    fn qbinom(&mut self, top: usize, bottom: usize, base: u32) -> Result<TSeries> {
        if let Some(v) = self.binom_cache.get(&(top, bottom, base)) {
            return Ok(v.clone());
        }
        let terms: Vec<(u64, Rational)> = gaussian_coeffs(top as i64, bottom as i64)
            .into_iter()
            .enumerate()
            .map(|(d, c)| (d as u64 * base as u64, Rational::from_bigint(c)))
            .collect();
        let value = eval_polynomial(&self.field, &terms, self.t_order);
        self.binom_cache.insert((top, bottom, base), value.clone());
        Ok(value)
    }

    fn q_order(&self) -> Option<u64> {
        None
    }
}

/// Exact t-expansion (through `t^K`) of a terminating multisum at
/// `q = zeta_M e^(-t)`, with `x = 1`. The outer index runs below `M (K+2)`.
pub fn eval_terminating_sum(spec: &MultisumSpec, root: u32, t_order: usize) -> Result<TSeries> {
    eval_with_cutoff(spec, root, t_order, root as usize * (t_order + 2))
}

/// As [`eval_terminating_sum`] with the outer index running below `cutoff`.
pub fn eval_with_cutoff(spec: &MultisumSpec, root: u32, t_order: usize, cutoff: usize) -> Result<TSeries> {
    if root == 0 {
        return Err(Error::BadParams("root order must be positive".into()));
    }
    let mut eval = RootEvaluator::new(root, t_order);
    evaluate(spec, OuterRange::Below(cutoff), &mut eval)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn zeta4_squared() {
        let f = CycField::get(4);
        let z = CycNum::zeta_power(&f, 1);
        assert_eq!(&z * &z, CycNum::from_rational(&f, Rational::from_int(-1)));
    }

    #[test]
    fn inverse_in_q_zeta3() {
        let f = CycField::get(3);
        let a = &CycNum::one(&f) + &CycNum::zeta_power(&f, 1);
        // 1 + z = -z^2, so the inverse is -z
        let expected = -&CycNum::zeta_power(&f, 1);
        assert_eq!(a.inv().unwrap(), expected);
        assert_eq!(&a * &expected, CycNum::one(&f));
        assert_eq!(CycNum::zero(&f).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn lifting_agrees_with_power() {
        let z3 = CycNum::zeta_power(&CycField::get(3), 1);
        let z6 = CycNum::zeta_power(&CycField::get(6), 2);
        assert_eq!(z3, z6);
        let z2 = CycNum::zeta_power(&CycField::get(2), 1);
        assert_eq!((&z2 + &z3).order(), 6);
    }

    #[test]
    fn q_to_t_examples() {
        let e = q_to_t(1, 0, 2);
        let ints: Vec<_> = e.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
        assert_eq!(ints, vec![Rational::one(), Rational::from_int(-1), Rational::new(1, 2)]);
        let e = q_to_t(2, 1, 1);
        let ints: Vec<_> = e.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
        assert_eq!(ints, vec![Rational::from_int(-1), Rational::one()]);
    }
}
