use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::laurent::Laurent;
use crate::ring::{Coefficient, Domain, FracCoefficient, GcdCoefficient, Ring};
use crate::{gcd, impl_ring_ops, Integer};

const MAX_ORDER: usize = 128;
const WORK: usize = 1024;

const fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Coefficients (constant term first) and degree of the `r`-th cyclotomic
/// polynomial, from the Möbius product of `y^d - 1` over divisors `d`.
pub const fn cyclotomic_coefficients(r: usize) -> ([i64; MAX_ORDER + 1], usize) {
    assert!(r >= 1 && r <= MAX_ORDER, "cyclotomic order out of range");
    let mut work = [0i64; WORK];
    work[0] = 1;
    let mut deg = 0;
    let mut d = 1;
    while d <= r {
        if r.is_multiple_of(d) && mobius(r / d) == 1 {
            let mut k = deg + d;
            while k > 0 {
                let shifted = if k >= d { work[k - d] } else { 0 };
                work[k] = shifted - work[k];
                k -= 1;
            }
            work[0] = -work[0];
            deg += d;
        }
        d += 1;
    }
    d = 1;
    while d <= r {
        if r.is_multiple_of(d) && mobius(r / d) == -1 {
            let qdeg = deg - d;
            let mut quot = [0i64; WORK];
            let mut k = qdeg + 1;
            while k > 0 {
                k -= 1;
                let above = if k + d <= qdeg { quot[k + d] } else { 0 };
                quot[k] = work[k + d] + above;
            }
            work = quot;
            deg = qdeg;
        }
        d += 1;
    }
    let mut out = [0i64; MAX_ORDER + 1];
    let mut i = 0;
    while i <= deg {
        out[i] = work[i];
        i += 1;
    }
    (out, deg)
}

/// An element of `Z[w]/Φ_R(w)`, stored as its `φ(R)` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic<const R: usize> {
    coeffs: Vec<BigInt>,
}

impl<const R: usize> Cyclotomic<R> {
    const PHI: ([i64; MAX_ORDER + 1], usize) = cyclotomic_coefficients(R);
    pub const DEGREE: usize = Self::PHI.1;

    /// The class of `w`.
    pub fn generator() -> Self {
        Self::from_coefficients([BigInt::zero(), BigInt::one()])
    }

    /// `w^k` for any integer `k`.
    pub fn root_power(k: i64) -> Self {
        let e = k.rem_euclid(R as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self::from_coefficients(v)
    }

    pub fn from_integer(n: &BigInt) -> Self {
        Self::from_coefficients([n.clone()])
    }

    /// Reduce an arbitrary coefficient list (constant term first) mod Φ_R.
    pub fn from_coefficients(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let n = Self::DEGREE;
        let mut v: Vec<BigInt> = coeffs.into_iter().collect();
        let phi = &Self::PHI.0;
        while v.len() > n {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = v.len() - n;
            for (i, &c) in phi[..n].iter().enumerate() {
                if c != 0 {
                    v[base + i] -= &top * c;
                }
            }
        }
        v.resize(n, BigInt::zero());
        Cyclotomic { coeffs: v }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Image under the automorphism `w -> w^k` (`k` coprime to `R`).
    pub fn galois(&self, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); R.max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(i * k) % R.max(1)] += c;
            }
        }
        Self::from_coefficients(v)
    }

    /// Exponents `k` of the nontrivial Galois automorphisms.
    pub fn conjugate_exponents() -> impl Iterator<Item = usize> {
        (2..R).filter(|k| k.gcd(&R) == 1)
    }

    /// Product of the nontrivial Galois conjugates, so that
    /// `self * conjugate_product()` is the norm.
    pub fn conjugate_product(&self) -> Self {
        Self::conjugate_exponents().fold(Self::one(), |acc, k| acc.mul(&self.galois(k)))
    }

    pub fn norm(&self) -> BigInt {
        let n = self.mul(&self.conjugate_product());
        n.as_integer().cloned().expect("norm is rational")
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl<const R: usize> fmt::Display for Cyclotomic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<const R: usize> fmt::Debug for Cyclotomic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const R: usize> Ring for Cyclotomic<R> {
    fn zero() -> Self {
        Self::from_coefficients([])
    }
    fn one() -> Self {
        Self::from_coefficients([BigInt::one()])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let n = Self::DEGREE;
        let mut v = vec![BigInt::zero(); 2 * n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_coefficients(v)
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::from_integer(n)
    }
    fn characteristic() -> u64 {
        0
    }
}

impl<const R: usize> Domain for Cyclotomic<R> {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let conj = divisor.conjugate_product();
        let n = divisor.mul(&conj).as_integer().cloned().expect("norm is rational");
        let num = self.mul(&conj);
        let mut out = Vec::with_capacity(num.coeffs.len());
        for c in &num.coeffs {
            let (q, r) = c.div_rem(&n);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Cyclotomic { coeffs: out })
    }

    fn is_unit(&self) -> bool {
        !self.is_zero() && self.norm().abs().is_one()
    }

    fn size_hint(&self) -> usize {
        self.nonzero_count().max(1)
    }
}

impl<const R: usize> Coefficient for Cyclotomic<R> {
    fn sign_split(&self) -> (bool, Self) {
        if self.nonzero_count() == 1 && self.coeffs.iter().any(|c| c.is_negative()) {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }

    fn is_compound(&self) -> bool {
        self.nonzero_count() > 1
    }

    fn from_symbol(name: &str) -> Option<Self> {
        (name == "w").then(Self::generator)
    }

    fn bit_size(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl<const R: usize> FracCoefficient for Cyclotomic<R> {
    fn normalize_fraction(num: Laurent<Self>, den: Laurent<Self>) -> (Laurent<Self>, Laurent<Self>) {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.terms().all(|(_, c)| c.as_integer().is_some()) {
            (num, den)
        } else {
            let conj = Self::conjugate_exponents()
                .fold(Laurent::one(), |acc: Laurent<Self>, k| acc.mul(&den.map_coefficients(|c| c.galois(k))));
            (num.mul(&conj), den.mul(&conj))
        };
        let den_z = to_integer_poly(&den);
        let parts: Vec<Laurent<Integer>> = (0..Self::DEGREE)
            .map(|j| num.map_coefficients(|c| Integer(c.coeffs[j].clone())))
            .collect();
        let mut g = den_z.clone();
        for p in &parts {
            if g.is_one() {
                break;
            }
            g = gcd::gcd(&g, p);
        }
        let den_z = den_z.exact_div(&g).expect("gcd divides");
        let shift = den_z.monomial_content().inv();
        let unit = den_z.leading_coefficient().normalizing_unit();
        let den_z = den_z.mul_monomial(&shift).scale(&unit);
        let num = parts.iter().enumerate().fold(Laurent::zero(), |acc: Laurent<Self>, (j, p)| {
            let p = p.exact_div(&g).expect("gcd divides").mul_monomial(&shift).scale(&unit);
            acc.add(&lift(&p).scale(&Self::root_power(j as i64)))
        });
        (num, lift(&den_z))
    }

    fn invert_fraction(num: &Laurent<Self>, den: &Laurent<Self>) -> (Laurent<Self>, Laurent<Self>) {
        (den.clone(), num.clone())
    }

    fn denominator_lcm(a: &Laurent<Self>, b: &Laurent<Self>) -> Laurent<Self> {
        lift(&gcd::lcm(&to_integer_poly(a), &to_integer_poly(b)))
    }
}

fn to_integer_poly<const R: usize>(p: &Laurent<Cyclotomic<R>>) -> Laurent<Integer> {
    p.map_coefficients(|c| Integer(c.as_integer().cloned().expect("rational coefficients")))
}

fn lift<const R: usize>(p: &Laurent<Integer>) -> Laurent<Cyclotomic<R>> {
    p.map_coefficients(|c| Cyclotomic::from_integer(&c.0))
}

impl_ring_ops!(Cyclotomic<R>, const R: usize);

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(r: usize) -> Vec<i64> {
        let (c, d) = cyclotomic_coefficients(r);
        c[..=d].to_vec()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(coeffs(1), vec![-1, 1]);
        assert_eq!(coeffs(2), vec![1, 1]);
        assert_eq!(coeffs(3), vec![1, 1, 1]);
        assert_eq!(coeffs(4), vec![1, 0, 1]);
        assert_eq!(coeffs(6), vec![1, -1, 1]);
        assert_eq!(coeffs(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(coeffs(12), vec![1, 0, -1, 0, 1]);
        // first cyclotomic polynomial with a coefficient of absolute value 2
        assert!(coeffs(105).contains(&-2));
    }

    #[test]
    fn root_of_unity() {
        let w = Cyclotomic::<3>::generator();
        assert!(w.pow(3).is_one());
        assert_eq!(w.pow(2).to_string(), "-w - 1");
        assert_eq!(Cyclotomic::<3>::root_power(-1), w.pow(2));
    }

    #[test]
    fn norms_and_division() {
        let w = Cyclotomic::<4>::generator();
        let one_plus_i = Ring::add(&Cyclotomic::one(), &w);
        assert_eq!(one_plus_i.norm(), BigInt::from(2));
        let two = Cyclotomic::<4>::from_i64(2);
        let q = two.exact_div(&one_plus_i).unwrap();
        assert_eq!(Ring::mul(&q, &one_plus_i), two);
        assert!(Cyclotomic::<4>::one().exact_div(&one_plus_i).is_none());
        assert!(w.is_unit());
    }
}
