//! Quantum integers and factorials.

use crate::ring::Ring;

/// `1 + base + ... + base^(i-1)`, the quotient `(1 - base^i)/(1 - base)`.
/// For `i = 0` this is the empty sum `0`.
pub fn quantum_integer<R: Ring>(i: usize, base: &R) -> R {
    let mut acc = R::zero();
    let mut power = R::one();
    for k in 0..i {
        acc.add_assign_ref(&power);
        if k + 1 < i {
            power = power.mul(base);
        }
    }
    acc
}

/// `n_base! = n_base (n-1)_base ... 2_base`; the empty product for `n <= 1`.
pub fn quantum_factorial<R: Ring>(n: usize, base: &R) -> R {
    (2..=n).fold(R::one(), |acc, j| acc.mul(&quantum_integer(j, base)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_laurent, Integer, Laurent};

    fn q(s: &str) -> Laurent<Integer> {
        parse_laurent(s).unwrap()
    }

    #[test]
    fn small_values() {
        let q2 = q("q^2");
        assert!(quantum_integer(1, &q2).is_one());
        assert_eq!(quantum_integer(2, &q2), q("1 + q^2"));
        assert_eq!(quantum_integer(3, &q("q")), q("1 + q + q^2"));
        assert!(quantum_factorial(1, &q2).is_one());
        assert_eq!(quantum_factorial(3, &q2), q("(1 + q^2)*(1 + q^2 + q^4)"));
    }

    #[test]
    fn at_one_gives_ordinary_integers() {
        let one = Integer::from(1);
        assert_eq!(quantum_integer(7, &one), Integer::from(7));
        assert_eq!(quantum_factorial(5, &one), Integer::from(120));
    }
}
