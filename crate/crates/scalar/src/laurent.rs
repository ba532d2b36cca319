use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::monomial::{var_index, var_name, Monomial};
use crate::ring::{Coefficient, Domain, Ring};

/// Sparse multivariate Laurent polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    terms: BTreeMap<Monomial, C>,
}

/// One term of the structured serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponents: BTreeMap<String, i32>,
    pub coefficient: String,
}

impl<C: Coefficient> Laurent<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    /// The variable named by a lowercase letter.
    ///
    /// # Panics
    /// If `name` is not a lowercase ASCII letter.
    pub fn var(name: char) -> Self {
        let v = var_index(name).expect("variables are lowercase letters");
        Self::monomial(Monomial::var(v), C::one())
    }

    pub fn var_pow(name: char, e: i32) -> Self {
        let v = var_index(name).expect("variables are lowercase letters");
        Self::monomial(Monomial::var_pow(v, e), C::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut out = Laurent::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign_ref(c);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> C {
        self.leading_term().map_or_else(C::zero, |(_, c)| c.clone())
    }

    pub fn vars(&self) -> BTreeSet<u8> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn max_degree_in(&self, v: u8) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: u8) -> i32 {
        self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0)
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, v: u8, e: i32) -> Self {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == e {
                out.terms.insert(m.without(v), c.clone());
            }
        }
        out
    }

    /// Largest monomial dividing every term (exponent-wise minimum).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.meet(m))
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        let mut out = Laurent::zero();
        for (m, d) in &self.terms {
            let p = d.mul(c);
            if !p.is_zero() {
                out.terms.insert(m.clone(), p);
            }
        }
        out
    }

    pub fn map_coefficients<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Every coefficient exactly divisible by `c`.
    pub fn div_scalar(&self, c: &C) -> Option<Self> {
        let mut out = Laurent::zero();
        for (m, d) in &self.terms {
            out.terms.insert(m.clone(), d.exact_div(c)?);
        }
        Some(out)
    }

    /// Integer power; negative exponents only for units.
    pub fn pow_i(&self, e: i64) -> Option<Self> {
        let e32 = u32::try_from(e.unsigned_abs()).ok()?;
        if e >= 0 {
            return Some(Ring::pow(self, e32));
        }
        let inv = self.inverse()?;
        Some(Ring::pow(&inv, e32))
    }

    /// Inverse when this is a unit (a monomial with unit coefficient).
    pub fn inverse(&self) -> Option<Self> {
        let (m, c) = match self.terms.len() {
            1 => self.terms.iter().next().unwrap(),
            _ => return None,
        };
        let ci = C::one().exact_div(c)?;
        Some(Laurent::monomial(m.inv(), ci))
    }

    /// Polynomial division by a polynomial without monomial factor;
    /// `None` when not exact.
    fn poly_div(&self, b: &Self) -> Option<Self> {
        let (lm, lc) = b.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !rm.divisible_by(&lm) {
                return None;
            }
            let qm = rm.div(&lm);
            let qc = rc.exact_div(&lc)?;
            let term = Laurent::monomial(qm.clone(), qc.clone());
            rem = Ring::sub(&rem, &Ring::mul(b, &term));
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    pub fn to_structured(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| Term {
                exponents: m.pairs().iter().map(|&(v, e)| (var_name(v).to_string(), e)).collect(),
                coefficient: c.to_string(),
            })
            .collect()
    }

    /// Write the polynomial with terms in decreasing order, e.g. `4*t^3 - 27`.
    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, abs) = c.sign_split();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else if abs.is_compound() {
                write!(f, "({abs})*{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> Ring for Laurent<C> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Laurent::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign_ref(other);
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut out = Laurent::zero();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        Laurent::constant(C::from_bigint(n))
    }
    fn characteristic() -> u64 {
        C::characteristic()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &c.neg());
        }
    }
}

impl<C: Coefficient> Domain for Laurent<C> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let ma = self.monomial_content();
        let mb = divisor.monomial_content();
        let a = self.mul_monomial(&ma.inv());
        let b = divisor.mul_monomial(&mb.inv());
        let q = a.poly_div(&b)?;
        Some(q.mul_monomial(&ma.div(&mb)))
    }

    fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_unit()
    }

    fn size_hint(&self) -> usize {
        self.terms.values().map(|c| c.size_hint()).sum::<usize>().max(1)
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Laurent::zero()
    }
}

impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_structured().serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let terms = Vec::<Term>::deserialize(d)?;
        let mut out = Laurent::zero();
        for t in terms {
            let coeff = crate::parse::parse_laurent::<C>(&t.coefficient).map_err(D::Error::custom)?;
            let coeff = coeff
                .as_constant()
                .ok_or_else(|| D::Error::custom(format!("coefficient {} is not a constant", t.coefficient)))?;
            let mut m = Monomial::one();
            for (name, e) in &t.exponents {
                let mut chars = name.chars();
                let v = match (chars.next(), chars.next()) {
                    (Some(c), None) => var_index(c),
                    _ => None,
                }
                .ok_or_else(|| D::Error::custom(format!("bad variable name {name:?}")))?;
                m = m.mul(&Monomial::var_pow(v, *e));
            }
            out.add_term(m, &coeff);
        }
        Ok(out)
    }
}

impl<C: Coefficient> From<C> for Laurent<C> {
    fn from(c: C) -> Self {
        Laurent::constant(c)
    }
}

impl<C: Coefficient> std::ops::Add for Laurent<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}
impl<'a, C: Coefficient> std::ops::Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        Ring::add(self, rhs)
    }
}
impl<C: Coefficient> std::ops::Sub for Laurent<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.sub_assign_ref(&rhs);
        self
    }
}
impl<'a, C: Coefficient> std::ops::Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        Ring::sub(self, rhs)
    }
}
impl<C: Coefficient> std::ops::Mul for Laurent<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Ring::mul(&self, &rhs)
    }
}
impl<'a, C: Coefficient> std::ops::Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        Ring::mul(self, rhs)
    }
}
impl<C: Coefficient> std::ops::Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Ring::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integer;

    type Z = Laurent<Integer>;

    #[test]
    fn prints_descending() {
        let t = Z::var('t');
        let d = Ring::sub(&Z::from_i64(4).mul(&t.pow(3)), &Z::from_i64(27));
        assert_eq!(d.to_string(), "4*t^3 - 27");
        let q = Z::var('q');
        assert_eq!(Ring::sub(&q, &q.inverse().unwrap()).to_string(), "q - q^-1");
    }

    #[test]
    fn exact_division() {
        let q = Z::var('q');
        let one = Z::one();
        let a = Ring::sub(&one, &q.pow(4));
        let b = Ring::sub(&one, &q.pow(2));
        assert_eq!(a.exact_div(&b).unwrap().to_string(), "q^2 + 1");
        assert!(b.exact_div(&a).is_none());
        let shifted = a.mul_monomial(&Monomial::var_pow(16, -3));
        assert_eq!(shifted.exact_div(&b).unwrap().to_string(), "q^-1 + q^-3");
    }
}
