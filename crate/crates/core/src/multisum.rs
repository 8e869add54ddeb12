//! Multisums over the index simplex `n_i <= n_{i+1} + delta`, linked by a
//! chain of Gaussian binomials.
//!
//! A [`MultisumSpec`] describes the summand; an [`Evaluator`] supplies the
//! arithmetic. [`SeriesEvaluator`] works in `Q[x][[q]]`; the cyclotomic module
//! provides one that substitutes `q -> zeta e^(-t)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::qfunctions::{gaussian_coeffs, poch_finite, poch_infinite, Monomial};
use crate::rational::Rational;
use crate::series::{QSeries, XPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Numerator,
    Denominator,
    /// `(arg; q^base)_len - (arg; q^base)_inf`.
    Tail,
}

/// `(arg; q^base)_{scale * n_var + offset}` in the numerator, denominator or
/// as a tail difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochFactor {
    pub arg: Monomial,
    pub base: u32,
    pub var: usize,
    pub scale: u32,
    pub offset: u32,
    pub kind: FactorKind,
}

impl PochFactor {
    pub fn new(kind: FactorKind, arg: Monomial, base: u32, var: usize) -> Self {
        PochFactor {
            arg,
            base,
            var,
            scale: 1,
            offset: 0,
            kind,
        }
    }

    pub fn with_length(mut self, scale: u32, offset: u32) -> Self {
        self.scale = scale;
        self.offset = offset;
        self
    }

    pub fn length(&self, n: usize) -> usize {
        self.scale as usize * n + self.offset as usize
    }

    /// Lower bound on the q-valuation of the factor.
    fn min_degree(&self, n: usize) -> u64 {
        match self.kind {
            FactorKind::Tail => self.arg.q_exp as u64 + self.base as u64 * self.length(n) as u64,
            _ => 0,
        }
    }
}

/// Summand `coeff * prod_i q^((A_i n_i^2 + B_i n_i)/2) x^(w_i n_i) * factors *
/// prod_{i<k} [n_{i+1} + delta_{i,a} over n_i]_{q^base}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisumSpec {
    pub depth: usize,
    pub base: u32,
    /// Binomial index `a` (1-based) whose top gains `+1`.
    pub delta_pos: Option<usize>,
    /// Per-variable `(A_i, B_i)`.
    pub quad: Vec<(u32, u32)>,
    pub x_weights: Vec<u32>,
    /// Variable whose x-exponent drops by one when it is positive.
    pub x_drop: Option<usize>,
    pub factors: Vec<PochFactor>,
    pub coeff: Rational,
}

/// Range of the outermost index `n_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterRange {
    Fixed(usize),
    Below(usize),
    Unbounded,
}

impl MultisumSpec {
    pub fn new(depth: usize, base: u32) -> Self {
        MultisumSpec {
            depth,
            base,
            delta_pos: None,
            quad: vec![(0, 0); depth],
            x_weights: vec![0; depth],
            x_drop: None,
            factors: Vec::new(),
            coeff: Rational::one(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.depth == 0 {
            return Err(Error::BadParams("multisum depth must be positive".into()));
        }
        if self.quad.len() != self.depth || self.x_weights.len() != self.depth {
            return Err(Error::BadParams("per-variable data does not match the depth".into()));
        }
        if let Some((i, _)) = self.quad.iter().enumerate().find(|(_, (a, b))| (a + b) % 2 == 1) {
            return Err(Error::BadParams(format!("variable {i} has a half-integral exponent")));
        }
        if self.factors.iter().any(|f| f.var >= self.depth) {
            return Err(Error::BadParams("factor refers to a missing variable".into()));
        }
        Ok(())
    }

    /// `q -> q^m` throughout.
    pub fn dilate(&self, m: u32) -> MultisumSpec {
        let mut out = self.clone();
        out.base *= m;
        out.quad = self.quad.iter().map(|(a, b)| (a * m, b * m)).collect();
        for f in &mut out.factors {
            f.arg = f.arg.dilate(m);
            f.base *= m;
        }
        out
    }

    /// `x -> 1` throughout.
    pub fn at_x_one(&self) -> MultisumSpec {
        let mut out = self.clone();
        out.x_weights = vec![0; self.depth];
        out.x_drop = None;
        for f in &mut out.factors {
            f.arg = f.arg.at_x_one();
        }
        out
    }

    pub fn has_x(&self) -> bool {
        self.x_weights.iter().any(|w| *w > 0) || self.factors.iter().any(|f| f.arg.x_exp > 0)
    }

    fn delta(&self, inner: usize) -> usize {
        usize::from(self.delta_pos == Some(inner + 1))
    }

    fn q_exponent(&self, var: usize, n: usize) -> u64 {
        let (a, b) = self.quad[var];
        let n = n as u64;
        (a as u64 * n * n + b as u64 * n) / 2
    }

    fn x_exponent(&self, var: usize, n: usize) -> u64 {
        let w = self.x_weights[var] as u64 * n as u64;
        if self.x_drop == Some(var) && n > 0 {
            w.saturating_sub(1)
        } else {
            w
        }
    }

    fn min_degree(&self, var: usize, n: usize) -> u64 {
        self.q_exponent(var, n)
            + self
                .factors
                .iter()
                .filter(|f| f.var == var)
                .map(|f| f.min_degree(n))
                .sum::<u64>()
    }

    /// Whether the outer index's own lower bound grows without limit.
    fn outer_grows(&self) -> bool {
        let outer = self.depth - 1;
        let (a, b) = self.quad[outer];
        a + b > 0
            || self
                .factors
                .iter()
                .any(|f| f.var == outer && f.kind == FactorKind::Tail && f.scale > 0)
    }
}

/// Arithmetic used to evaluate a multisum.
pub trait Evaluator {
    type Value: Clone;

    fn one(&self) -> Self::Value;
    fn zero(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn is_zero(&self, v: &Self::Value) -> bool;
    /// Multiply by `coeff * x^x_exp * q^q_exp`.
    fn mul_monomial(&mut self, v: &Self::Value, coeff: &Rational, x_exp: u64, q_exp: u64) -> Result<Self::Value>;
    fn poch(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<Self::Value>;
    fn poch_inv(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<Self::Value>;
    fn poch_tail(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<Self::Value>;
    fn qbinom(&mut self, top: usize, bottom: usize, base: u32) -> Result<Self::Value>;
    /// Truncation order for pruning, if the arithmetic is truncated in `q`.
    fn q_order(&self) -> Option<u64>;
}

type PochKey = (Monomial, u32);

/// Evaluation in `Q[x][[q]]` at a fixed truncation order, with caches.
pub struct SeriesEvaluator {
    order: u32,
    poch_cache: HashMap<PochKey, Vec<QSeries>>,
    inv_cache: HashMap<PochKey, Vec<QSeries>>,
    inf_cache: HashMap<PochKey, QSeries>,
    binom_cache: HashMap<(usize, usize, u32), QSeries>,
}

impl SeriesEvaluator {
    pub fn new(order: u32) -> Self {
        SeriesEvaluator {
            order,
            poch_cache: HashMap::new(),
            inv_cache: HashMap::new(),
            inf_cache: HashMap::new(),
            binom_cache: HashMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

/// Extend a cached list of partial products `(arg; q^base)_0..=len`.
fn extend_products(
    list: &mut Vec<QSeries>,
    arg: &Monomial,
    base: u32,
    len: usize,
    order: u32,
    invert: bool,
) -> Result<()> {
    if list.is_empty() {
        list.push(QSeries::one(order));
    }
    while list.len() <= len {
        let j = list.len() - 1;
        let mut next = list[j].clone();
        let e = arg.q_exp as u64 + base as u64 * j as u64;
        if e <= order as u64 {
            if invert {
                next.div_one_minus(&arg.coeff, arg.x_exp as usize, e as u32)?;
            } else {
                next.mul_one_minus(&arg.coeff, arg.x_exp as usize, e as u32);
            }
        }
        list.push(next);
    }
    Ok(())
}

impl Evaluator for SeriesEvaluator {
    type Value = QSeries;

    fn one(&self) -> QSeries {
        QSeries::one(self.order)
    }

    fn zero(&self) -> QSeries {
        QSeries::zero(self.order)
    }

    fn add(&self, a: &QSeries, b: &QSeries) -> QSeries {
        a + b
    }

    fn mul(&self, a: &QSeries, b: &QSeries) -> QSeries {
        a * b
    }

    fn is_zero(&self, v: &QSeries) -> bool {
        v.is_zero()
    }

    fn mul_monomial(&mut self, v: &QSeries, coeff: &Rational, x_exp: u64, q_exp: u64) -> Result<QSeries> {
        Ok(v.mul_monomial(coeff, x_exp as usize, q_exp))
    }

    fn poch(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<QSeries> {
        let list = self.poch_cache.entry((arg.clone(), base)).or_default();
        extend_products(list, arg, base, len, self.order, false)?;
        Ok(list[len].clone())
    }

    fn poch_inv(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<QSeries> {
        let list = self.inv_cache.entry((arg.clone(), base)).or_default();
        extend_products(list, arg, base, len, self.order, true)?;
        Ok(list[len].clone())
    }

    fn poch_tail(&mut self, arg: &Monomial, base: u32, len: usize) -> Result<QSeries> {
        let key = (arg.clone(), base);
        if !self.inf_cache.contains_key(&key) {
            let inf = poch_infinite(arg, base, self.order)?;
            self.inf_cache.insert(key.clone(), inf);
        }
        let finite = self.poch(arg, base, len)?;
        Ok(&finite - &self.inf_cache[&key])
    }

    fn qbinom(&mut self, top: usize, bottom: usize, base: u32) -> Result<QSeries> {
        let order = self.order;
        Ok(self
            .binom_cache
            .entry((top, bottom, base))
            .or_insert_with(|| {
                QSeries::from_terms(
                    gaussian_coeffs(top as i64, bottom as i64)
                        .into_iter()
                        .enumerate()
                        .filter(|(d, _)| *d as u64 * base as u64 <= order as u64)
                        .map(|(d, c)| (d as u32 * base, XPoly::constant(Rational::from_bigint(c)))),
                    order,
                )
            })
            .clone())
    }

    fn q_order(&self) -> Option<u64> {
        Some(self.order as u64)
    }
}

struct Walk<'a, E: Evaluator> {
    spec: &'a MultisumSpec,
    eval: &'a mut E,
    values: Vec<usize>,
    total: E::Value,
}

impl<E: Evaluator> Walk<'_, E> {
    /// Assign variable `var`, given the partial product of all outer variables.
    fn assign(&mut self, var: usize, n: usize, partial: &E::Value, lower: u64) -> Result<bool> {
        let spec = self.spec;
        let lower = lower + spec.min_degree(var, n);
        if self.eval.q_order().is_some_and(|order| lower > order) {
            return Ok(false);
        }
        self.values[var] = n;
        let mut value = self.eval.mul_monomial(
            partial,
            &Rational::one(),
            spec.x_exponent(var, n),
            spec.q_exponent(var, n),
        )?;
        for f in spec.factors.iter().filter(|f| f.var == var) {
            let len = f.length(n);
            let factor = match f.kind {
                FactorKind::Numerator => self.eval.poch(&f.arg, f.base, len)?,
                FactorKind::Denominator => self.eval.poch_inv(&f.arg, f.base, len)?,
                FactorKind::Tail => self.eval.poch_tail(&f.arg, f.base, len)?,
            };
            value = self.eval.mul(&value, &factor);
        }
        if var + 1 < spec.depth {
            let top = self.values[var + 1] + spec.delta(var);
            let binom = self.eval.qbinom(top, n, spec.base)?;
            value = self.eval.mul(&value, &binom);
        }
        if self.eval.is_zero(&value) {
            return Ok(true);
        }
        if var == 0 {
            self.total = self.eval.add(&self.total, &value);
        } else {
            let top = n + spec.delta(var - 1);
            for m in 0..=top {
                if !self.assign(var - 1, m, &value, lower)? {
                    break;
                }
            }
        }
        Ok(true)
    }
}

/// Sum the multisum over the requested outer range.
pub fn evaluate<E: Evaluator>(spec: &MultisumSpec, outer: OuterRange, eval: &mut E) -> Result<E::Value> {
    spec.validate()?;
    let start = eval.mul_monomial(&eval.one(), &spec.coeff, 0, 0)?;
    let outer_var = spec.depth - 1;
    let mut walk = Walk {
        spec,
        total: eval.zero(),
        eval,
        values: vec![0; spec.depth],
    };
    match outer {
        OuterRange::Fixed(n) => {
            walk.assign(outer_var, n, &start, 0)?;
        }
        OuterRange::Below(limit) => {
            for n in 0..limit {
                if !walk.assign(outer_var, n, &start, 0)? {
                    break;
                }
            }
        }
        OuterRange::Unbounded => {
            if walk.eval.q_order().is_none() || !spec.outer_grows() {
                return Err(Error::Unsupported(
                    "unbounded outer range needs q-truncation and a growing outer exponent".into(),
                ));
            }
            let mut n = 0;
            while walk.assign(outer_var, n, &start, 0)? {
                n += 1;
            }
        }
    }
    Ok(walk.total)
}

/// Convenience wrapper in `Q[x][[q]]`.
pub fn evaluate_series(spec: &MultisumSpec, outer: OuterRange, order: u32) -> Result<QSeries> {
    evaluate(spec, outer, &mut SeriesEvaluator::new(order))
}

/// `(arg; q^base)_inf`, peeling off a leading factor free of `q`.
fn limit_product(arg: &Monomial, base: u32, order: u32) -> Result<QSeries> {
    if arg.q_exp > 0 {
        return poch_infinite(arg, base, order);
    }
    let mut rest = poch_infinite(&arg.times_q(base), base, order)?;
    rest.mul_one_minus(&arg.coeff, arg.x_exp as usize, 0);
    Ok(rest)
}

/// Product of Pochhammer factors of a single index `n` (numerators and
/// denominators only), evaluated at `n` or in the limit `n -> infinity`.
pub fn factor_product(factors: &[PochFactor], n: Option<usize>, order: u32) -> Result<QSeries> {
    let mut acc = QSeries::one(order);
    for f in factors {
        let value = match (n, f.kind) {
            (Some(n), FactorKind::Numerator) => poch_finite(&f.arg, f.base, f.length(n), order),
            (Some(n), FactorKind::Denominator) => crate::qfunctions::poch_inverse(&f.arg, f.base, f.length(n), order)?,
            (None, FactorKind::Numerator) => limit_product(&f.arg, f.base, order)?,
            (None, FactorKind::Denominator) => limit_product(&f.arg, f.base, order)?.invert_unit()?,
            (_, FactorKind::Tail) => return Err(Error::Unsupported("tail factor in a single-index product".into())),
        };
        acc = &acc * &value;
    }
    Ok(acc)
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
    fn rogers_ramanujan_sum() {
        // sum q^(n^2) / (q)_n
        let mut spec = MultisumSpec::new(1, 1);
        spec.quad = vec![(2, 0)];
        spec.factors
            .push(PochFactor::new(FactorKind::Denominator, Monomial::q(1, 1), 1, 0));
        let s = evaluate_series(&spec, OuterRange::Unbounded, 12).unwrap();
        assert_eq!(ints(&s), vec![1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9]);
        assert_eq!(s.coefficient(4).unwrap(), XPoly::constant(Rational::from_int(2)));
    }

    #[test]
    fn binomial_chain_counts_simplex() {
        // At q = 0 only terms with zero q-degree survive: a count of index tuples.
        let mut spec = MultisumSpec::new(3, 1);
        spec.delta_pos = Some(1);
        let s = evaluate_series(&spec, OuterRange::Fixed(2), 0).unwrap();
        // n_2 <= 2, n_1 <= n_2 + 1, every binomial has constant term 1.
        assert_eq!(ints(&s), vec![2 + 3 + 4]);
    }

    #[test]
    fn tails_need_growth() {
        let spec = MultisumSpec::new(1, 1);
        assert!(evaluate_series(&spec, OuterRange::Unbounded, 5).is_err());
    }

    #[test]
    fn zero_factors_prune() {
        let mut spec = MultisumSpec::new(1, 1);
        spec.factors
            .push(PochFactor::new(FactorKind::Numerator, Monomial::q(1, 0), 1, 0));
        let s = evaluate_series(&spec, OuterRange::Below(50), 5).unwrap();
        assert_eq!(s, QSeries::one(5));
    }
}
