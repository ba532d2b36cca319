use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::Laurent;
use crate::ring::{Coefficient, Domain, FracCoefficient, GcdCoefficient, Ring};
use crate::{gcd, impl_ring_ops};

/// Arbitrary-precision integer. Serializes as a decimal string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Integer(pub BigInt);

impl Integer {
    pub fn new(n: impl Into<BigInt>) -> Self {
        Integer(n.into())
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        i64::try_from(&self.0).ok()
    }

    pub fn is_negative(&self) -> bool {
        self.0.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Integer {
        Integer(self.0.abs())
    }
}

impl From<i64> for Integer {
    fn from(n: i64) -> Self {
        Integer(BigInt::from(n))
    }
}

impl Serialize for Integer {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map(Integer).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer(BigInt::zero())
    }
    fn one() -> Self {
        Integer(BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Integer(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Integer(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Integer(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Integer(-&self.0)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Integer(n.clone())
    }
    fn characteristic() -> u64 {
        0
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.0 += &other.0;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        self.0 -= &other.0;
    }
}

impl Domain for Integer {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Integer(q))
    }

    fn is_unit(&self) -> bool {
        self.0.abs().is_one()
    }

    fn size_hint(&self) -> usize {
        1 + self.0.bits() as usize / 64
    }
}

impl Coefficient for Integer {
    fn sign_split(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }

    fn bit_size(&self) -> u64 {
        self.0.bits()
    }
}

impl GcdCoefficient for Integer {
    fn gcd(&self, other: &Self) -> Self {
        Integer(self.0.gcd(&other.0))
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            Integer::from(-1)
        } else {
            Integer::one()
        }
    }
}

impl FracCoefficient for Integer {
    fn normalize_fraction(num: Laurent<Self>, den: Laurent<Self>) -> (Laurent<Self>, Laurent<Self>) {
        gcd::normalize_fraction(num, den)
    }

    fn invert_fraction(num: &Laurent<Self>, den: &Laurent<Self>) -> (Laurent<Self>, Laurent<Self>) {
        (den.clone(), num.clone())
    }

    fn denominator_lcm(a: &Laurent<Self>, b: &Laurent<Self>) -> Laurent<Self> {
        gcd::lcm(a, b)
    }
}

impl_ring_ops!(Integer);
