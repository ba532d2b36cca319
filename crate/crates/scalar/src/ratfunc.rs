use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::laurent::Laurent;
use crate::ring::{Coefficient, Domain, Field, FracCoefficient, FractionField, Ring};

/// An element of the fraction field of `C[x, x^-1, ...]`, kept in lowest
/// terms with a normalized polynomial denominator.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "", try_from = "RawFraction<C>")]
pub struct RationalFunction<C: FracCoefficient> {
    num: Laurent<C>,
    den: Laurent<C>,
}

#[derive(Deserialize)]
#[serde(bound = "")]
struct RawFraction<C: FracCoefficient> {
    num: Laurent<C>,
    den: Laurent<C>,
}

impl<C: FracCoefficient> TryFrom<RawFraction<C>> for RationalFunction<C> {
    type Error = &'static str;
    fn try_from(raw: RawFraction<C>) -> Result<Self, Self::Error> {
        RationalFunction::new(raw.num, raw.den).ok_or("zero denominator")
    }
}

impl<C: FracCoefficient> RationalFunction<C> {
    /// `None` when `den` is zero.
    pub fn new(num: Laurent<C>, den: Laurent<C>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (num, den) = C::normalize_fraction(num, den);
        Some(RationalFunction { num, den })
    }

    pub fn from_laurent(num: Laurent<C>) -> Self {
        Self::new(num, Laurent::one()).expect("nonzero denominator")
    }

    pub fn constant(c: C) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    pub fn var(name: char) -> Self {
        Self::from_laurent(Laurent::var(name))
    }

    pub fn num(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn den(&self) -> &Laurent<C> {
        &self.den
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn to_laurent(&self) -> Option<Laurent<C>> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn as_constant(&self) -> Option<C> {
        self.to_laurent()?.as_constant()
    }

    pub fn pow_i(&self, e: i64) -> Option<Self> {
        let e32 = u32::try_from(e.unsigned_abs()).ok()?;
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Some(Ring::pow(&base, e32))
    }

    pub fn map_laurent<D: FracCoefficient>(&self, mut f: impl FnMut(&Laurent<C>) -> Laurent<D>) -> Option<RationalFunction<D>> {
        RationalFunction::new(f(&self.num), f(&self.den))
    }
}

impl<C: FracCoefficient> Ring for RationalFunction<C> {
    fn zero() -> Self {
        RationalFunction {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }
    fn one() -> Self {
        RationalFunction {
            num: Laurent::one(),
            den: Laurent::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(Ring::add(&self.num, &other.num), self.den.clone()).expect("nonzero");
        }
        let l = C::denominator_lcm(&self.den, &other.den);
        let a = Ring::mul(&self.num, &l.exact_div(&self.den).expect("lcm"));
        let b = Ring::mul(&other.num, &l.exact_div(&other.den).expect("lcm"));
        Self::new(Ring::add(&a, &b), l).expect("nonzero")
    }
    fn sub(&self, other: &Self) -> Self {
        Ring::add(self, &Ring::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(Ring::mul(&self.num, &other.num));
        }
        Self::new(Ring::mul(&self.num, &other.num), Ring::mul(&self.den, &other.den)).expect("nonzero")
    }
    fn neg(&self) -> Self {
        RationalFunction {
            num: Ring::neg(&self.num),
            den: self.den.clone(),
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::from_laurent(Laurent::from_bigint(n))
    }
    fn characteristic() -> u64 {
        C::characteristic()
    }
}

impl<C: FracCoefficient> Domain for RationalFunction<C> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        Field::div(self, divisor)
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
    fn size_hint(&self) -> usize {
        self.num.size_hint() + self.den.size_hint()
    }
}

impl<C: FracCoefficient> Field for RationalFunction<C> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (n, d) = C::invert_fraction(&self.num, &self.den);
        Self::new(n, d)
    }
}

impl<C: FracCoefficient> FractionField for RationalFunction<C> {
    type Domain = Laurent<C>;

    fn numerator(&self) -> Laurent<C> {
        self.num.clone()
    }
    fn denominator(&self) -> Laurent<C> {
        self.den.clone()
    }
    fn from_domain(x: &Laurent<C>) -> Self {
        Self::from_laurent(x.clone())
    }
    fn from_fraction(num: &Laurent<C>, den: &Laurent<C>) -> Option<Self> {
        Self::new(num.clone(), den.clone())
    }
    fn common_denominator(elems: &[Self]) -> Laurent<C> {
        elems.iter().fold(Laurent::one(), |acc, x| {
            if x.den.is_one() || x.den == acc {
                acc
            } else {
                C::denominator_lcm(&acc, &x.den)
            }
        })
    }
}

impl<C: FracCoefficient> From<Laurent<C>> for RationalFunction<C> {
    fn from(x: Laurent<C>) -> Self {
        Self::from_laurent(x)
    }
}

impl<C: FracCoefficient> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let single = |p: &Laurent<C>| p.num_terms() == 1 && !p.terms().any(|(_, c)| c.is_compound());
        if single(&self.num) {
            write!(f, "{}/", self.num)?;
        } else {
            write!(f, "({})/", self.num)?;
        }
        if single(&self.den) {
            write!(f, "{}", self.den)
        } else {
            write!(f, "({})", self.den)
        }
    }
}

impl<C: FracCoefficient> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: FracCoefficient> Coefficient for RationalFunction<C> {
    fn sign_split(&self) -> (bool, Self) {
        if self.num.num_terms() == 1 {
            let (neg, _) = self.num.leading_coefficient().sign_split();
            if neg {
                return (true, Ring::neg(self));
            }
        }
        (false, self.clone())
    }

    fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.num_terms() > 1 || self.num.terms().any(|(_, c)| c.is_compound())
    }

    fn bit_size(&self) -> u64 {
        self.num
            .terms()
            .chain(self.den.terms())
            .map(|(_, c)| c.bit_size())
            .max()
            .unwrap_or(0)
    }
}

impl<C: FracCoefficient> std::ops::Add for RationalFunction<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Ring::add(&self, &rhs)
    }
}
impl<'a, C: FracCoefficient> std::ops::Add<&'a RationalFunction<C>> for &'a RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn add(self, rhs: &'a RationalFunction<C>) -> RationalFunction<C> {
        Ring::add(self, rhs)
    }
}
impl<C: FracCoefficient> std::ops::Sub for RationalFunction<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Ring::sub(&self, &rhs)
    }
}
impl<'a, C: FracCoefficient> std::ops::Sub<&'a RationalFunction<C>> for &'a RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn sub(self, rhs: &'a RationalFunction<C>) -> RationalFunction<C> {
        Ring::sub(self, rhs)
    }
}
impl<C: FracCoefficient> std::ops::Mul for RationalFunction<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Ring::mul(&self, &rhs)
    }
}
impl<'a, C: FracCoefficient> std::ops::Mul<&'a RationalFunction<C>> for &'a RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn mul(self, rhs: &'a RationalFunction<C>) -> RationalFunction<C> {
        Ring::mul(self, rhs)
    }
}
impl<C: FracCoefficient> std::ops::Neg for RationalFunction<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Ring::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use crate::parse::parse_ratfunc;
    use crate::{Cyclotomic, Field, Integer, RationalFunction, Ring, Zp};

    type Q = RationalFunction<Integer>;

    #[test]
    fn lowest_terms() {
        let x: Q = parse_ratfunc("(q^2 - 1)/(2*q + 2)").unwrap();
        assert_eq!(x.to_string(), "(q - 1)/2");
        let y: Q = parse_ratfunc("6/(-4*q)").unwrap();
        assert_eq!(y.to_string(), "-3*q^-1/2");
    }

    #[test]
    fn field_ops() {
        let x: Q = parse_ratfunc("1/(1 + q^2)").unwrap();
        let y = x.inv().unwrap();
        assert_eq!(y.to_string(), "q^2 + 1");
        assert!(Ring::mul(&x, &y).is_one());
        let half: Q = parse_ratfunc("1/2").unwrap();
        assert!(Ring::add(&half, &half).is_one());
    }

    #[test]
    fn characteristic_two() {
        let e: RationalFunction<Zp<2>> = parse_ratfunc("(1 + a)/t").unwrap();
        let f = Ring::add(&RationalFunction::one(), &e);
        // monomials are units, so no denominator remains
        assert_eq!(f.to_string(), "a*t^-1 + 1 + t^-1");
        let g: RationalFunction<Zp<2>> = parse_ratfunc("1/(1 + t)").unwrap();
        assert_eq!(Ring::add(&g, &g), RationalFunction::zero());
    }

    #[test]
    fn cyclotomic_denominators_are_rationalized() {
        let x: RationalFunction<Cyclotomic<3>> = parse_ratfunc("1/(q - w)").unwrap();
        let back = x.inv().unwrap();
        assert_eq!(back.to_string(), "q - w");
        assert!(x.den().terms().all(|(_, c)| c.as_integer().is_some()));
    }
}
