//! Ring morphisms: substituting values for variables and reducing integer
//! coefficients modulo a prime.

use std::collections::BTreeMap;

use crate::laurent::Laurent;
use crate::monomial::{var_index, Monomial};
use crate::ratfunc::RationalFunction;
use crate::ring::{Coefficient, Field, FracCoefficient, Ring};
use crate::{Integer, ScalarError, Zp};

fn var_of(name: char) -> u8 {
    var_index(name).expect("variables are lowercase letters")
}

/// `sum_e coeff_e * value^e` for the `v`-expansion of `p`.
fn substitute_with<C, T>(
    p: &Laurent<C>,
    v: u8,
    lift: impl Fn(Laurent<C>) -> T,
    value: &T,
    invert: impl FnOnce(&T) -> Option<T>,
) -> Result<T, ScalarError>
where
    C: Coefficient,
    T: Ring,
{
    let mut by_exp: BTreeMap<i32, Laurent<C>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponent(v);
        by_exp
            .entry(e)
            .or_insert_with(Laurent::zero)
            .add_assign_ref(&Laurent::monomial(m.without(v), c.clone()));
    }
    let mut out = T::zero();
    let mut pos = (0, T::one());
    let needs_inverse = by_exp.keys().next().is_some_and(|&e| e < 0);
    let inv = if needs_inverse {
        Some(invert(value).ok_or_else(|| ScalarError::EvaluationAtPole(format!("inverse of {value}")))?)
    } else {
        None
    };
    let mut neg = (0, T::one());
    for (e, coeff) in by_exp {
        let factor = if e >= 0 {
            while pos.0 < e {
                pos = (pos.0 + 1, pos.1.mul(value));
            }
            pos.1.clone()
        } else {
            let inv = inv.as_ref().expect("inverse computed");
            if neg.0 == 0 {
                neg = (-e, Ring::pow(inv, (-e) as u32));
            } else {
                while neg.0 > -e {
                    // exponents are visited in increasing order
                    neg = (neg.0 - 1, neg.1.mul(value));
                }
            }
            neg.1.clone()
        };
        out.add_assign_ref(&lift(coeff).mul(&factor));
    }
    Ok(out)
}

impl<C: Coefficient> Laurent<C> {
    /// Substitute a Laurent polynomial for a variable. Negative powers
    /// require the value to be a unit.
    pub fn substitute_laurent(&self, name: char, value: &Laurent<C>) -> Result<Laurent<C>, ScalarError> {
        substitute_with(self, var_of(name), |x| x, value, |x| x.inverse())
    }

    /// Substitute several variables one after the other.
    pub fn specialize_laurent(&self, bindings: &[(char, Laurent<C>)]) -> Result<Laurent<C>, ScalarError> {
        bindings
            .iter()
            .try_fold(self.clone(), |acc, (v, x)| acc.substitute_laurent(*v, x))
    }

    /// Whether the polynomial involves the named variable.
    pub fn involves(&self, name: char) -> bool {
        let v = var_of(name);
        self.terms().any(|(m, _)| m.exponent(v) != 0)
    }
}

impl<C: FracCoefficient> Laurent<C> {
    pub fn substitute(&self, name: char, value: &RationalFunction<C>) -> Result<RationalFunction<C>, ScalarError> {
        substitute_with(self, var_of(name), RationalFunction::from_laurent, value, |x| x.inv())
    }
}

impl<C: FracCoefficient> RationalFunction<C> {
    /// Substitute a value for a variable; a vanishing denominator is a pole.
    pub fn substitute(&self, name: char, value: &RationalFunction<C>) -> Result<Self, ScalarError> {
        let n = self.num().substitute(name, value)?;
        let d = self.den().substitute(name, value)?;
        n.div(&d)
            .ok_or_else(|| ScalarError::EvaluationAtPole(format!("{self} at {name} = {value}")))
    }

    /// Apply substitutions in order.
    pub fn specialize(&self, bindings: &[(char, RationalFunction<C>)]) -> Result<Self, ScalarError> {
        bindings.iter().try_fold(self.clone(), |acc, (v, x)| acc.substitute(*v, x))
    }
}

impl Laurent<Integer> {
    pub fn reduce_mod<const P: u64>(&self) -> Laurent<Zp<P>> {
        self.map_coefficients(|c| Zp::from_integer(&c.0))
    }
}

impl RationalFunction<Integer> {
    /// Image in `F_P(vars)`; fails when the denominator vanishes mod `P`.
    pub fn reduce_mod<const P: u64>(&self) -> Result<RationalFunction<Zp<P>>, ScalarError> {
        RationalFunction::new(self.num().reduce_mod::<P>(), self.den().reduce_mod::<P>())
            .ok_or_else(|| ScalarError::EvaluationAtPole(format!("{self} mod {P}")))
    }
}

impl<C: Coefficient> Laurent<C> {
    /// Rename variables by a map of letters.
    pub fn rename(&self, map: &[(char, char)]) -> Laurent<C> {
        let table: Vec<(u8, u8)> = map.iter().map(|&(a, b)| (var_of(a), var_of(b))).collect();
        Laurent::from_terms(self.terms().map(|(m, c)| {
            let pairs = m
                .pairs()
                .iter()
                .map(|&(v, e)| (table.iter().find(|(a, _)| *a == v).map_or(v, |(_, b)| *b), e));
            (Monomial::from_pairs(pairs), c.clone())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_laurent, parse_ratfunc};

    type Q = RationalFunction<Integer>;

    fn q(s: &str) -> Q {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn q_minus_inverse_vanishes_at_one() {
        let x = q("q - q^-1");
        assert!(x.substitute('q', &Q::one()).unwrap().is_zero());
    }

    #[test]
    fn quantum_two_mod_two() {
        let two = q("1 + q^2");
        let shifted = two.substitute('q', &q("1 + t")).unwrap();
        assert_eq!(shifted.to_string(), "t^2 + 2*t + 2");
        assert_eq!(shifted.reduce_mod::<2>().unwrap().to_string(), "t^2");
    }

    #[test]
    fn poles_are_reported() {
        let x = q("1/t");
        assert!(matches!(x.substitute('t', &Q::zero()), Err(ScalarError::EvaluationAtPole(_))));
        let y = q("1/(q + 1)");
        assert!(y.substitute('q', &q("-1")).is_err());
        assert!(q("1/3").reduce_mod::<3>().is_err());
        let z: Laurent<Integer> = parse_laurent("q^-1").unwrap();
        assert!(z.substitute_laurent('q', &parse_laurent("1 + t").unwrap()).is_err());
    }

    #[test]
    fn negative_powers_accumulate() {
        let z: Laurent<Integer> = parse_laurent("q^-3 + 2*q^-1 + q^2").unwrap();
        let got = z.substitute('q', &q("2")).unwrap();
        assert_eq!(got, q("1/8 + 1 + 4"));
    }
}
