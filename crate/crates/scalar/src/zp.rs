use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

use crate::impl_ring_ops;
use crate::laurent::Laurent;
use crate::ring::{Coefficient, Domain, Field, FracCoefficient, FractionField, GcdCoefficient, Ring};
use crate::gcd;

/// The prime field `Z/P`. `P` must be prime; this is checked when the
/// type is first used in a constant context.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Zp<const P: u64>(u64);

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> Zp<P> {
    const CHECK: () = assert!(is_prime(P) && P < (1 << 32), "Zp modulus must be a prime below 2^32");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Zp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn from_integer(n: &BigInt) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        let r = n.mod_floor(&BigInt::from(P));
        Zp(r.to_u64().expect("residue fits"))
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> Ring for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn one() -> Self {
        Zp::new(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Zp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Zp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Zp(((self.0 as u128 * other.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Zp((P - self.0) % P)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Zp::from_integer(n)
    }
    fn characteristic() -> u64 {
        P
    }
}

impl<const P: u64> Domain for Zp<P> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        Field::div(self, divisor)
    }
    fn is_unit(&self) -> bool {
        self.0 != 0
    }
}

impl<const P: u64> Field for Zp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat
        Some(self.pow((P - 2) as u32))
    }
}

impl<const P: u64> FractionField for Zp<P> {
    type Domain = Zp<P>;

    fn numerator(&self) -> Self {
        *self
    }
    fn denominator(&self) -> Self {
        Zp::one()
    }
    fn from_domain(x: &Self) -> Self {
        *x
    }
    fn from_fraction(num: &Self, den: &Self) -> Option<Self> {
        Field::div(num, den)
    }
    fn common_denominator(_elems: &[Self]) -> Self {
        Zp::one()
    }
}

impl<const P: u64> Coefficient for Zp<P> {
    fn bit_size(&self) -> u64 {
        64 - self.0.leading_zeros() as u64
    }
}

impl<const P: u64> GcdCoefficient for Zp<P> {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            Zp(0)
        } else {
            Zp::one()
        }
    }

    fn normalizing_unit(&self) -> Self {
        self.inv().unwrap_or_else(Zp::one)
    }
}

impl<const P: u64> FracCoefficient for Zp<P> {
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

impl_ring_ops!(Zp<P>, const P: u64);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_five() {
        for v in 1..5 {
            let x = Zp::<5>::new(v);
            assert!(Ring::mul(&x, &x.inv().unwrap()).is_one());
        }
        assert!(Zp::<5>::new(0).inv().is_none());
    }

    #[test]
    fn negative_literals_reduce() {
        assert_eq!(Zp::<3>::new(-27), Zp::<3>::new(0));
        assert_eq!(Zp::<2>::from_integer(&BigInt::from(-1)), Zp::<2>::one());
    }
}
