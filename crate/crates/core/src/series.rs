//! Truncated power series in `q` with coefficients in `Q[x]`.
//!
//! A [`QSeries`] carries its own truncation order `N`; every binary operation
//! works modulo `q^(min(N1, N2) + 1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense polynomial in `x`; trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<Rational>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        XPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = XPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// The value as a rational when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add_assign(&mut self, other: &XPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.normalize();
    }

    pub fn sub_assign(&mut self, other: &XPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        self.normalize();
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &XPoly, b: &XPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Rational::zero());
        }
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    self.coeffs[i + j] += &(ai * bj);
                }
            }
        }
        self.normalize();
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        out.add_mul_assign(self, other);
        out
    }

    pub fn scale(&self, c: &Rational) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> XPoly {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    pub fn derivative(&self) -> XPoly {
        XPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Drop every term of x-degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*x")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Substitutions accepted by [`QSeries::substitute`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substitution {
    /// `q -> q^m`.
    QPower(u32),
    /// `x -> 1`.
    XToOne,
    /// `x -> c * q^e`.
    XToMonomial { coeff: Rational, q_exp: u32 },
    /// `x -> x^m`.
    XPower(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Add,
    Sub,
    Mul,
}

/// First coefficient at which two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub q_degree: u32,
    pub x_degree: usize,
    pub expected: Rational,
    pub got: Rational,
}

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    order: u32,
    terms: BTreeMap<u32, XPoly>,
}

impl QSeries {
    pub fn zero(order: u32) -> Self {
        QSeries {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: u32) -> Self {
        Self::monomial(c, 0, 0, order)
    }

    /// `c * x^x_exp * q^q_exp`, dropped when `q_exp` exceeds the order.
    pub fn monomial(c: Rational, x_exp: usize, q_exp: u64, order: u32) -> Self {
        let mut s = Self::zero(order);
        if q_exp <= order as u64 && !c.is_zero() {
            s.terms.insert(q_exp as u32, XPoly::monomial(c, x_exp));
        }
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, XPoly)>>(terms: I, order: u32) -> Self {
        let mut s = Self::zero(order);
        for (d, p) in terms {
            if d <= order {
                s.add_term(d, &p);
            }
        }
        s
    }

    /// Integer-coefficient series in `q` alone, from a coefficient list.
    pub fn from_ints(coeffs: &[i64], order: u32) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(d, &c)| (d as u32, XPoly::constant(Rational::from_int(c)))),
            order,
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &XPoly)> {
        self.terms.iter().map(|(d, p)| (*d, p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest q-degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coefficient(&self, d: u32) -> Result<XPoly> {
        if d > self.order {
            return Err(Error::OutOfRange {
                degree: d,
                order: self.order,
            });
        }
        Ok(self.terms.get(&d).cloned().unwrap_or_default())
    }

    /// Coefficients of `q^0..=q^order` when every coefficient is constant in `x`.
    pub fn to_rationals(&self) -> Option<Vec<Rational>> {
        (0..=self.order)
            .map(|d| self.terms.get(&d).map_or(Some(Rational::zero()), XPoly::as_constant))
            .collect()
    }

    pub fn max_x_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(XPoly::degree).max()
    }

    fn add_term(&mut self, d: u32, p: &XPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_default();
        entry.add_assign(p);
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    /// Reduce the truncation order (never raises it).
    pub fn with_order(&self, order: u32) -> QSeries {
        let order = order.min(self.order);
        QSeries {
            order,
            terms: self.terms.range(..=order).map(|(d, p)| (*d, p.clone())).collect(),
        }
    }

    pub fn combine(&self, other: &QSeries, kind: Combine) -> QSeries {
        match kind {
            Combine::Add => self + other,
            Combine::Sub => self - other,
            Combine::Mul => self * other,
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.order);
        }
        QSeries {
            order: self.order,
            terms: self.terms.iter().map(|(d, p)| (*d, p.scale(c))).collect(),
        }
    }

    /// Multiply by `c * x^x_exp * q^q_exp`.
    pub fn mul_monomial(&self, c: &Rational, x_exp: usize, q_exp: u64) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.order);
        }
        let order = self.order as u64;
        QSeries {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| **d as u64 + q_exp <= order)
                .map(|(d, p)| ((*d as u64 + q_exp) as u32, p.scale(c).shift(x_exp)))
                .collect(),
        }
    }

    /// In place `self *= 1 - c * x^x_exp * q^q_exp`.
    pub fn mul_one_minus(&mut self, c: &Rational, x_exp: usize, q_exp: u32) {
        if c.is_zero() {
            return;
        }
        let shifted = self.mul_monomial(c, x_exp, q_exp as u64);
        for (d, p) in shifted.terms {
            let entry = self.terms.entry(d).or_default();
            entry.sub_assign(&p);
            if entry.is_zero() {
                self.terms.remove(&d);
            }
        }
    }

    /// In place `self /= 1 - c * x^x_exp * q^q_exp`.
    pub fn div_one_minus(&mut self, c: &Rational, x_exp: usize, q_exp: u32) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if q_exp == 0 {
            if x_exp > 0 || c.is_one() {
                return Err(Error::NotAUnit(format!("1 - ({c})x^{x_exp}")));
            }
            *self = self.scale(&(Rational::one() - c).recip());
            return Ok(());
        }
        let order = self.order;
        let mut d = q_exp;
        while d <= order {
            if let Some(prev) = self.terms.get(&(d - q_exp)) {
                let add = prev.scale(c).shift(x_exp);
                self.add_term(d, &add);
            }
            d += 1;
        }
        Ok(())
    }

    pub fn invert_unit(&self) -> Result<QSeries> {
        let c0 = self
            .terms
            .get(&0)
            .and_then(XPoly::as_constant)
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NotAUnit(self.terms.get(&0).map_or("0".into(), |p| p.to_string())))?;
        let inv0 = c0.recip();
        let n = self.order as usize;
        let mut g: Vec<XPoly> = vec![XPoly::zero(); n + 1];
        g[0] = XPoly::constant(inv0.clone());
        let tail: Vec<(usize, &XPoly)> = self
            .terms
            .iter()
            .filter(|(d, _)| **d > 0)
            .map(|(d, p)| (*d as usize, p))
            .collect();
        for d in 1..=n {
            let mut acc = XPoly::zero();
            for &(j, f) in &tail {
                if j > d {
                    break;
                }
                acc.add_mul_assign(f, &g[d - j]);
            }
            g[d] = acc.scale(&-&inv0);
        }
        Ok(QSeries::from_terms(
            g.into_iter().enumerate().map(|(d, p)| (d as u32, p)),
            self.order,
        ))
    }

    pub fn substitute(&self, action: &Substitution) -> QSeries {
        let order = self.order;
        match action {
            Substitution::QPower(m) => {
                assert!(*m >= 1, "q-power substitution needs m >= 1");
                QSeries {
                    order,
                    terms: self
                        .terms
                        .iter()
                        .filter(|(d, _)| **d as u64 * *m as u64 <= order as u64)
                        .map(|(d, p)| (d * m, p.clone()))
                        .collect(),
                }
            }
            Substitution::XToOne => QSeries::from_terms(
                self.terms
                    .iter()
                    .map(|(d, p)| (*d, XPoly::constant(p.eval(&Rational::one())))),
                order,
            ),
            Substitution::XToMonomial { coeff, q_exp } => {
                let mut out = QSeries::zero(order);
                for (d, p) in &self.terms {
                    let mut power = Rational::one();
                    for (i, a) in p.coeffs().iter().enumerate() {
                        if i > 0 {
                            power = &power * coeff;
                        }
                        let deg = *d as u64 + *q_exp as u64 * i as u64;
                        if deg > order as u64 {
                            break;
                        }
                        if !a.is_zero() {
                            out.add_term(deg as u32, &XPoly::constant(a * &power));
                        }
                    }
                }
                out
            }
            Substitution::XPower(m) => QSeries {
                order,
                terms: self
                    .terms
                    .iter()
                    .map(|(d, p)| {
                        let mut coeffs = vec![Rational::zero(); p.coeffs().len() * *m as usize];
                        for (i, a) in p.coeffs().iter().enumerate() {
                            coeffs[i * *m as usize] = a.clone();
                        }
                        (*d, XPoly::from_coeffs(coeffs))
                    })
                    .collect(),
            },
        }
    }

    pub fn differentiate_x(&self) -> QSeries {
        QSeries::from_terms(self.terms.iter().map(|(d, p)| (*d, p.derivative())), self.order)
    }

    /// Drop every term of x-degree above `max_degree`.
    pub fn truncate_x(&self, max_degree: usize) -> QSeries {
        QSeries::from_terms(self.terms.iter().map(|(d, p)| (*d, p.truncate(max_degree))), self.order)
    }

    /// First disagreement with `expected` up to `order` (capped at both orders).
    pub fn first_difference(&self, expected: &QSeries, order: u32) -> Option<Mismatch> {
        let order = order.min(self.order).min(expected.order);
        let zero = XPoly::zero();
        for d in 0..=order {
            let got = self.terms.get(&d).unwrap_or(&zero);
            let want = expected.terms.get(&d).unwrap_or(&zero);
            if got != want {
                let len = got.coeffs().len().max(want.coeffs().len());
                for i in 0..len {
                    if got.coeff(i) != want.coeff(i) {
                        return Some(Mismatch {
                            q_degree: d,
                            x_degree: i,
                            expected: want.coeff(i),
                            got: got.coeff(i),
                        });
                    }
                }
            }
        }
        None
    }

    /// Coefficientwise equality up to an explicit order.
    pub fn agrees_with(&self, other: &QSeries, order: u32) -> bool {
        self.first_difference(other, order).is_none()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, p) in &self.terms {
            write!(f, "({p})q^{d} + ")?;
        }
        write!(f, "O(q^{})", self.order + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let mut out = self.with_order(rhs.order);
        for (d, p) in rhs.terms.range(..=out.order) {
            out.add_term(*d, p);
        }
        out
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let mut out = self.with_order(rhs.order);
        for (d, p) in rhs.terms.range(..=out.order) {
            out.add_term(*d, &-p);
        }
        out
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        if self.is_zero() || rhs.is_zero() {
            return QSeries::zero(order);
        }
        let mut acc: Vec<XPoly> = vec![XPoly::zero(); order as usize + 1];
        for (d1, p1) in self.terms.range(..=order) {
            for (d2, p2) in rhs.terms.range(..=order - d1) {
                acc[(d1 + d2) as usize].add_mul_assign(p1, p2);
            }
        }
        QSeries {
            order,
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(d, p)| (d as u32, p))
                .collect(),
        }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            order: self.order,
            terms: self.terms.iter().map(|(d, p)| (*d, -p)).collect(),
        }
    }
}

macro_rules! forward_series {
    ($tr:ident, $method:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: &QSeries) -> QSeries {
                (&self).$method(rhs)
            }
        }
        impl $tr<QSeries> for &QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                self.$method(&rhs)
            }
        }
    };
}

forward_series!(Add, add);
forward_series!(Sub, sub);
forward_series!(Mul, mul);
