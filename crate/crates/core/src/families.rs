//! The multisum families: parameter ranges, summand shapes, right-hand
//! characters and root validity domains.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multisum::{FactorKind, MultisumSpec, PochFactor};
use crate::qfunctions::{character, CharacterKind, Monomial, PartialTheta, XRule};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Hikami,
    Fam1,
    Fam2,
    Fam3,
    Fam4,
    Fam5,
}

pub const ALL_FAMILIES: [Family; 6] = [
    Family::Hikami,
    Family::Fam1,
    Family::Fam2,
    Family::Fam3,
    Family::Fam4,
    Family::Fam5,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hikami => "hikami",
            Family::Fam1 => "family1",
            Family::Fam2 => "family2",
            Family::Fam3 => "family3",
            Family::Fam4 => "family4",
            Family::Fam5 => "family5",
        }
    }

    /// Base of the q-binomial chain and outer Pochhammer.
    pub fn base(self) -> u32 {
        match self {
            Family::Fam2 | Family::Fam3 => 2,
            _ => 1,
        }
    }

    pub fn uses_a(self) -> bool {
        !matches!(self, Family::Fam1 | Family::Fam2)
    }

    pub fn validate(self, k: u32, a: u32) -> Result<()> {
        let ok = match self {
            Family::Fam1 | Family::Fam2 => k >= 1 && a == 0,
            Family::Fam5 => k >= 2 && a + 1 < k,
            _ => k >= 1 && a < k,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParams(format!(
                "{} does not accept k={k}, a={a}",
                self.name()
            )))
        }
    }

    /// Every legal `a` for the given `k`.
    pub fn a_range(self, k: u32) -> Vec<u32> {
        (0..k.max(1)).filter(|&a| self.validate(k, a).is_ok()).collect()
    }

    pub fn validity(self, k: u32) -> Validity {
        match self {
            Family::Hikami => Validity::AllRoots,
            Family::Fam1 | Family::Fam2 | Family::Fam5 => Validity::OddRoots,
            Family::Fam3 if k == 1 => Validity::RootsNot2Mod4,
            Family::Fam3 => Validity::OddRoots,
            Family::Fam4 => Validity::EvenRoots,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hikami" => Family::Hikami,
            "family1" | "fam1" => Family::Fam1,
            "family2" | "fam2" => Family::Fam2,
            "family3" | "fam3" => Family::Fam3,
            "family4" | "fam4" => Family::Fam4,
            "family5" | "fam5" => Family::Fam5,
            _ => return Err(Error::BadParams(format!("unknown family {s:?}"))),
        })
    }
}

/// Where an identity is claimed to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Validity {
    Formal,
    OddRoots,
    EvenRoots,
    RootsNot2Mod4,
    AllRoots,
}

impl Validity {
    pub fn tag(self) -> &'static str {
        match self {
            Validity::Formal => "formal",
            Validity::OddRoots => "odd_roots",
            Validity::EvenRoots => "even_roots",
            Validity::RootsNot2Mod4 => "roots_not_2_mod_4",
            Validity::AllRoots => "all_roots",
        }
    }

    pub fn admits_root(self, root: u32) -> bool {
        match self {
            Validity::Formal => false,
            Validity::OddRoots => root % 2 == 1,
            Validity::EvenRoots => root.is_multiple_of(2),
            Validity::RootsNot2Mod4 => root % 4 != 2,
            Validity::AllRoots => root >= 1,
        }
    }
}

impl FromStr for Validity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "formal" => Validity::Formal,
            "odd_roots" | "odd" => Validity::OddRoots,
            "even_roots" | "even" => Validity::EvenRoots,
            "roots_not_2_mod_4" => Validity::RootsNot2Mod4,
            "all_roots" | "all" => Validity::AllRoots,
            _ => return Err(Error::BadParams(format!("unknown validity tag {s:?}"))),
        })
    }
}

/// Summand ingredients shared by every multisum attached to a family.
struct Shape {
    base: u32,
    delta: Option<usize>,
    /// `(A_i, B_i)` for `n_1..n_{k-1}`.
    inner: Vec<(u32, u32)>,
    /// Factors in the inner indices, as `(kind, arg, base, var, scale, offset)`.
    inner_factors: Vec<PochFactor>,
    /// Extra factors in the outer index `n_k`.
    outer_factors: Vec<PochFactor>,
}

fn shape(family: Family, k: u32, a: u32) -> Result<Shape> {
    family.validate(k, a)?;
    let k = k as usize;
    let a = a as usize;
    let base = family.base();
    let delta = if family.uses_a() && a >= 1 { Some(a) } else { None };
    let shifted = usize::from(family.uses_a() && a == 0) as u32;
    let linear = |i: usize| family.uses_a() && i > a;
    let inner: Vec<(u32, u32)> = (1..k)
        .map(|i| match family {
            Family::Hikami | Family::Fam4 => (2, if linear(i) { 2 } else { 0 }),
            Family::Fam1 => (2, 2),
            Family::Fam2 => (4, 4),
            Family::Fam3 => (4, if linear(i) { 4 } else { 0 }),
            Family::Fam5 if i == k - 1 => (1, 1),
            Family::Fam5 => (2, if linear(i) { 2 } else { 0 }),
        })
        .collect();
    use FactorKind::*;
    let mut inner_factors = Vec::new();
    let mut outer_factors = Vec::new();
    match family {
        Family::Hikami => {}
        Family::Fam1 => inner_factors.push(PochFactor::new(Denominator, Monomial::xq(-1, 1, 1), 1, 0)),
        Family::Fam2 => {
            inner_factors.push(PochFactor::new(Numerator, Monomial::q(1, 1), 2, 0));
            inner_factors.push(PochFactor::new(Denominator, Monomial::xq(-1, 1, 1), 1, 0).with_length(2, 1));
        }
        Family::Fam3 => {
            inner_factors.push(PochFactor::new(Denominator, Monomial::xq(-1, 1, 1), 2, 0).with_length(1, shifted))
        }
        Family::Fam4 => {
            inner_factors.push(PochFactor::new(Numerator, Monomial::q(-1, 0), 1, 0).with_length(1, shifted));
            inner_factors.push(PochFactor::new(Denominator, Monomial::xq(1, 2, 1), 2, 0).with_length(1, shifted));
        }
        Family::Fam5 => {
            inner_factors.push(PochFactor::new(Numerator, Monomial::q(-1, 1), 1, k - 2));
            outer_factors.push(PochFactor::new(Denominator, Monomial::xq(-1, 2, 1), 1, k - 1));
        }
    }
    Ok(Shape {
        base,
        delta,
        inner,
        inner_factors,
        outer_factors,
    })
}

fn q_base(base: u32) -> Monomial {
    Monomial::q(1, base)
}

/// `beta_n` of the family's Bailey pair as a multisum with outer index `n_k`.
pub fn closed_beta_spec(family: Family, k: u32, a: u32) -> Result<MultisumSpec> {
    let s = shape(family, k, a)?;
    let k = k as usize;
    let mut spec = MultisumSpec::new(k, s.base);
    spec.delta_pos = s.delta;
    spec.quad = s.inner.clone();
    spec.quad.push((0, 0));
    spec.x_weights = vec![2; k - 1];
    spec.x_weights.push(0);
    spec.factors = s.inner_factors;
    spec.factors.extend(s.outer_factors);
    spec.factors
        .push(PochFactor::new(FactorKind::Denominator, q_base(s.base), s.base, k - 1));
    Ok(spec)
}

/// Left side of the family's strange identity (at `x = 1`).
pub fn strange_lhs_spec(family: Family, k: u32, a: u32) -> Result<MultisumSpec> {
    let s = shape(family, k, a)?;
    let k = k as usize;
    let mut spec = MultisumSpec::new(k, s.base);
    spec.delta_pos = s.delta;
    spec.quad = s.inner.clone();
    spec.quad.push((0, 0));
    spec.factors = s.inner_factors;
    spec.factors.extend(s.outer_factors);
    spec.factors
        .push(PochFactor::new(FactorKind::Numerator, q_base(s.base), s.base, k - 1));
    Ok(spec.at_x_one())
}

/// Sum side of the family's Rogers-Ramanujan type corollary, depth `k-1`.
pub fn corollary_spec(family: Family, k: u32, a: u32) -> Result<MultisumSpec> {
    if family == Family::Fam5 || k < 2 {
        return Err(Error::BadParams(format!(
            "no corollary multisum for {family} with k={k}"
        )));
    }
    let s = shape(family, k, a)?;
    let depth = k as usize - 1;
    let mut spec = MultisumSpec::new(depth, s.base);
    spec.delta_pos = s.delta;
    spec.quad = s.inner;
    spec.factors = s.inner_factors;
    spec.factors.push(PochFactor::new(
        FactorKind::Denominator,
        q_base(s.base),
        s.base,
        depth - 1,
    ));
    Ok(spec.at_x_one())
}

/// The two pieces of the x-identity left side for `k >= 2`: the product
/// term (to be multiplied by `(xq^b; q^b)_inf`) and the tails term (to be
/// multiplied by `1 - x`).
pub fn x_identity_specs(family: Family, k: u32, a: u32) -> Result<(MultisumSpec, MultisumSpec)> {
    if family == Family::Fam5 || k < 2 {
        return Err(Error::Unsupported(format!(
            "x-identity multisums for {family} with k={k}"
        )));
    }
    let s = shape(family, k, a)?;
    let k = k as usize;
    let xq = Monomial::xq(1, 1, s.base);

    let mut product = MultisumSpec::new(k - 1, s.base);
    product.delta_pos = s.delta.filter(|&d| d < k - 1);
    product.quad = s.inner.clone();
    product.x_weights = vec![2; k - 1];
    product.x_weights[k - 2] = 3;
    if s.delta == Some(k - 1) {
        product.x_drop = Some(k - 2);
    }
    product.factors = s.inner_factors.clone();
    product
        .factors
        .push(PochFactor::new(FactorKind::Denominator, xq.clone(), s.base, k - 2));

    let mut tails = MultisumSpec::new(k, s.base);
    tails.delta_pos = s.delta;
    tails.quad = s.inner;
    tails.quad.push((0, 0));
    tails.x_weights = vec![2; k - 1];
    tails.x_weights.push(1);
    tails.factors = s.inner_factors;
    tails.factors.push(PochFactor::new(FactorKind::Tail, xq, s.base, k - 1));
    Ok((product, tails))
}

/// Pochhammer factors of `P_n` in the `k = 1` x-identity, where the left side
/// is `(1-x) sum (P_n - P_inf) x^n + P_inf`.
pub fn single_sum_factors(family: Family, a: u32) -> Result<Vec<PochFactor>> {
    if family == Family::Fam5 {
        return Err(Error::Unsupported("family5 has no single-sum x-identity".into()));
    }
    let s = shape(family, 1, a)?;
    let mut factors = vec![PochFactor::new(
        FactorKind::Numerator,
        Monomial::xq(1, 1, s.base),
        s.base,
        0,
    )];
    factors.extend(s.inner_factors);
    Ok(factors)
}

/// Right side data of a family: the partial theta (weight 1, with the strange
/// identity prefactor), its x-exponent rule and the weight-0 multiplicity.
#[derive(Debug, Clone)]
pub struct FamilyTheta {
    pub theta: PartialTheta,
    pub x_rule: Option<XRule>,
    /// Factor applied to the weight-0 sum in the x-identity.
    pub x_multiplicity: Rational,
    /// The `n = 0` term is counted once although the character has two
    /// coinciding residues there.
    pub single_zero_term: bool,
}

pub fn family_theta(family: Family, k: u32, a: u32) -> Result<FamilyTheta> {
    family.validate(k, a)?;
    let (ki, ai) = (k as i64, a as i64);
    let half = |r: i64| Rational::new(r, 2);
    let (kind, divisor, shift, prefactor, x_rule, mult) = match family {
        Family::Hikami => (
            CharacterKind::Hikami { k, a },
            8 * (2 * ki + 1),
            2 * ki - 2 * ai - 1,
            half(-1),
            Some(XRule {
                offset: 2 * ki - 2 * ai - 1,
                divisor: 2,
            }),
            Rational::one(),
        ),
        Family::Fam1 => (
            CharacterKind::Fam1 { k },
            4 * ki,
            ki - 1,
            Rational::from_int(-(1 + i64::from(k == 1))),
            Some(XRule {
                offset: ki - 1,
                divisor: 1,
            }),
            Rational::from_int(1 + i64::from(k == 1)),
        ),
        Family::Fam2 => (
            CharacterKind::Fam2 { k },
            8 * ki - 4,
            2 * ki - 2,
            half(-(1 + i64::from(k == 1))),
            Some(XRule {
                offset: 2 * ki - 2,
                divisor: 2,
            }),
            Rational::from_int(1 + i64::from(k == 1)),
        ),
        Family::Fam3 => (
            CharacterKind::Fam3 { k, a },
            8 * ki,
            2 * ki - 2 * ai - 1,
            half(-1),
            Some(XRule {
                offset: 2 * ki - 2 * ai - 1,
                divisor: 2,
            }),
            Rational::one(),
        ),
        Family::Fam4 => (
            CharacterKind::Fam4 { k, a },
            8 * (2 * ki - 1),
            2 * ki - 2 * ai - 1,
            half(-(1 + i64::from(a == 0))),
            Some(XRule {
                offset: 2 * ki - 2 * ai - 1,
                divisor: 2,
            }),
            Rational::from_int(1 + i64::from(a == 0)),
        ),
        Family::Fam5 => (
            CharacterKind::Fam5 { k, a },
            4 * ki,
            ki - ai - 1,
            Rational::from_int(-1),
            None,
            Rational::one(),
        ),
    };
    Ok(FamilyTheta {
        theta: PartialTheta {
            chi: character(kind)?,
            weight: 1,
            divisor: divisor as u32,
            shift: shift as u32,
            prefactor,
        },
        x_rule,
        x_multiplicity: mult,
        single_zero_term: k == 1 && matches!(family, Family::Fam1 | Family::Fam2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_ranges() {
        assert_eq!(Family::Hikami.a_range(3), vec![0, 1, 2]);
        assert_eq!(Family::Fam1.a_range(3), vec![0]);
        assert_eq!(Family::Fam5.a_range(3), vec![0, 1]);
        assert!(Family::Fam5.a_range(1).is_empty());
        assert!(Family::Fam4.validate(2, 2).is_err());
    }

    #[test]
    fn every_theta_is_integral() {
        for family in ALL_FAMILIES {
            for k in 1..=5 {
                for a in family.a_range(k) {
                    let ft = family_theta(family, k, a).unwrap();
                    ft.theta.check_integrality().unwrap();
                    assert!(ft.theta.chi.is_even());
                }
            }
        }
    }

    #[test]
    fn validity_tags() {
        assert!(Validity::RootsNot2Mod4.admits_root(4));
        assert!(!Validity::RootsNot2Mod4.admits_root(6));
        assert!(!Validity::OddRoots.admits_root(2));
        assert_eq!("even".parse::<Validity>().unwrap(), Validity::EvenRoots);
    }
}
