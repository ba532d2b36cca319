//! Algebraic traits shared by every coefficient ring in the tower.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;

use crate::laurent::Laurent;

/// A commutative unital ring with exact arithmetic.
///
/// Method names avoid the `std::ops` names so that generic code can call
/// them on references without cloning; concrete types additionally
/// implement the operator traits.
pub trait Ring: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// 0 for characteristic zero.
    fn characteristic() -> u64;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = Ring::add(self, other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = Ring::sub(self, other);
    }
}

/// An integral domain with exact division.
pub trait Domain: Ring {
    /// `Some(q)` with `q * divisor == self`, `None` when no such `q` exists.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool;

    /// Rough measure of how expensive an element is to multiply; used to
    /// pick pivots in fraction-free elimination.
    fn size_hint(&self) -> usize {
        1
    }
}

/// A field.
pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| Ring::mul(self, &i))
    }
}

/// A field presented as fractions over an integral domain, so that linear
/// algebra can run fraction-free in the domain.
pub trait FractionField: Field {
    type Domain: Domain;

    fn numerator(&self) -> Self::Domain;
    fn denominator(&self) -> Self::Domain;
    fn from_domain(x: &Self::Domain) -> Self;
    /// `None` when the denominator is zero.
    fn from_fraction(num: &Self::Domain, den: &Self::Domain) -> Option<Self>;
    /// A common denominator (ideally the least) of the given elements.
    fn common_denominator(elems: &[Self]) -> Self::Domain;
}

/// Coefficient rings of sparse Laurent polynomials.
pub trait Coefficient: Domain + std::hash::Hash {
    /// Whether the element is "negative" for printing, with its absolute
    /// value. Rings without an order always answer `false`.
    fn sign_split(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// True when the printed form contains an operator and must be
    /// parenthesised inside a product.
    fn is_compound(&self) -> bool {
        false
    }

    /// Named constants of the coefficient ring (the cyclotomic generator).
    fn from_symbol(_name: &str) -> Option<Self> {
        None
    }

    /// Bit size of the largest integer inside, for resource limits.
    fn bit_size(&self) -> u64;
}

/// Coefficient rings with a gcd (Z and prime fields).
pub trait GcdCoefficient: Coefficient {
    fn gcd(&self, other: &Self) -> Self;

    /// A unit `u` with `u * self` in normal form (positive, or monic).
    fn normalizing_unit(&self) -> Self;
}

/// Coefficient rings over which the fraction field of the Laurent
/// polynomial ring has a canonical reduced representation.
pub trait FracCoefficient: Coefficient {
    /// Reduce `num/den` to canonical lowest terms. `den` must be nonzero.
    fn normalize_fraction(num: Laurent<Self>, den: Laurent<Self>) -> (Laurent<Self>, Laurent<Self>);

    /// `(den', num')` with `num'/den' = den/num`, not necessarily reduced.
    fn invert_fraction(num: &Laurent<Self>, den: &Laurent<Self>) -> (Laurent<Self>, Laurent<Self>);

    /// A common multiple of two canonical denominators.
    fn denominator_lcm(a: &Laurent<Self>, b: &Laurent<Self>) -> Laurent<Self>;
}

/// Implements the `std::ops` operator traits for a concrete [`Ring`].
#[macro_export]
macro_rules! impl_ring_ops {
    ($ty:ty $(, $($gen:tt)*)?) => {
        impl$(<$($gen)*>)? ::std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty { $crate::Ring::add(&self, &rhs) }
        }
        impl<'a $(, $($gen)*)?> ::std::ops::Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: &'a $ty) -> $ty { $crate::Ring::add(self, rhs) }
        }
        impl$(<$($gen)*>)? ::std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty { $crate::Ring::sub(&self, &rhs) }
        }
        impl<'a $(, $($gen)*)?> ::std::ops::Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: &'a $ty) -> $ty { $crate::Ring::sub(self, rhs) }
        }
        impl$(<$($gen)*>)? ::std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty { $crate::Ring::mul(&self, &rhs) }
        }
        impl<'a $(, $($gen)*)?> ::std::ops::Mul<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn mul(self, rhs: &'a $ty) -> $ty { $crate::Ring::mul(self, rhs) }
        }
        impl$(<$($gen)*>)? ::std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty { $crate::Ring::neg(&self) }
        }
        impl<'a $(, $($gen)*)?> ::std::ops::Neg for &'a $ty {
            type Output = $ty;
            fn neg(self) -> $ty { $crate::Ring::neg(self) }
        }
    };
}
