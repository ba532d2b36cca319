use std::fmt;

use crate::ring::{Domain, Field, Ring};
use crate::{Integer, ScalarError};

/// Dense univariate polynomial over `R`, constant term first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
    var: char,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>, var: char) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs, var }
    }

    pub fn zero(var: char) -> Self {
        UniPoly { coeffs: Vec::new(), var }
    }

    /// The indeterminate itself.
    pub fn x(var: char) -> Self {
        Self::new(vec![R::zero(), R::one()], var)
    }

    pub fn constant(c: R, var: char) -> Self {
        Self::new(vec![c], var)
    }

    /// `x - root`.
    pub fn linear(root: &R, var: char) -> Self {
        Self::new(vec![root.neg(), R::one()], var)
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading_coefficient(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&R::from_i64(k as i64)))
            .collect();
        Self::new(coeffs, self.var)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coefficient(k).add(&other.coefficient(k))).collect(), self.var)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coefficient(k).sub(&other.coefficient(k))).collect(), self.var)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.mul(b));
            }
        }
        Self::new(out, self.var)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.var)
    }

    pub fn map_coefficients<S: Ring>(&self, f: impl FnMut(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), self.var)
    }

    /// `x^deg f(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c, self.var)
    }

    pub fn product(factors: impl IntoIterator<Item = Self>, var: char) -> Self {
        factors.into_iter().fold(Self::constant(R::one(), var), |acc, f| acc.mul(&f))
    }
}

impl<R: Domain> UniPoly<R> {
    /// Exact quotient and remainder by a polynomial whose leading
    /// coefficient divides every intermediate leading coefficient;
    /// `None` otherwise.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading_coefficient();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(&lc)?;
            let shift = rem.len() - dd;
            for (k, c) in divisor.coeffs[..dd].iter().enumerate() {
                rem[shift + k].sub_assign_ref(&q.mul(c));
            }
            quot[shift] = q;
        }
        Some((Self::new(quot, self.var), Self::new(rem, self.var)))
    }

    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Resultant as the determinant of the Sylvester matrix.
    pub fn resultant(&self, other: &Self) -> R {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return R::zero();
        };
        if m + n == 0 {
            return R::one();
        }
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for shift in 0..n {
            let mut row = vec![R::zero(); size];
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
        for shift in 0..m {
            let mut row = vec![R::zero(); size];
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
        bareiss_determinant(rows)
    }

    /// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`, so that `x^3 - t x - 1`
    /// has discriminant `4 t^3 - 27`.
    pub fn discriminant(&self) -> Result<R, ScalarError> {
        let n = match self.degree() {
            None | Some(0) => return Err(ScalarError::Degenerate("discriminant of a constant")),
            Some(n) => n,
        };
        let res = self.resultant(&self.derivative());
        let lc = self.leading_coefficient();
        let mut d = res
            .exact_div(&lc)
            .ok_or_else(|| ScalarError::NotInvertible(format!("leading coefficient {lc}")))?;
        if (n * (n - 1) / 2) % 2 == 1 {
            d = d.neg();
        }
        Ok(d)
    }
}

impl<R: Field> UniPoly<R> {
    pub fn monic(&self) -> Self {
        match self.leading_coefficient().inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("field division");
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Fraction-free determinant.
fn bareiss_determinant<R: Domain>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return R::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// The `r`-th cyclotomic polynomial in `y`, by exact division of `y^r - 1`
/// by the cyclotomic polynomials of the proper divisors of `r`.
///
/// # Panics
/// If `r` is zero.
pub fn cyclotomic(r: usize) -> UniPoly<Integer> {
    assert!(r >= 1, "cyclotomic polynomial of order 0");
    let mut c = vec![Integer::zero(); r + 1];
    c[0] = Integer::from(-1);
    c[r] = Integer::one();
    let mut f = UniPoly::new(c, 'y');
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        f = f.exact_div(&cyclotomic(d)).expect("cyclotomic factors divide y^r - 1");
    }
    f
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s.contains(' ') || (s.contains('/') && k > 0);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s),
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let x = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            if x.is_empty() {
                f.write_str(&body)?;
            } else if body == "1" {
                f.write_str(&x)?;
            } else if compound {
                write!(f, "({body})*{x}")?;
            } else {
                write!(f, "{body}*{x}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_laurent, Laurent};

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn cyclotomic_by_division() {
        assert_eq!(cyclotomic(1).to_string(), "y - 1");
        assert_eq!(cyclotomic(3).to_string(), "y^2 + y + 1");
        assert_eq!(cyclotomic(4).to_string(), "y^2 + 1");
        assert_eq!(cyclotomic(9).to_string(), "y^6 + y^3 + 1");
    }

    #[test]
    fn discriminant_of_deformed_cubic() {
        let t: Laurent<Integer> = parse_laurent("t").unwrap();
        let f = UniPoly::new(vec![Laurent::from_i64(-1), t.neg(), Laurent::zero(), Laurent::one()], 'x');
        assert_eq!(f.to_string(), "x^3 - t*x - 1");
        assert_eq!(f.discriminant().unwrap().to_string(), "4*t^3 - 27");
    }

    #[test]
    fn discriminant_edge_cases() {
        let x2 = UniPoly::new(vec![z(0), z(0), z(1)], 'x');
        assert!(x2.discriminant().unwrap().is_zero());
        assert!(UniPoly::constant(z(3), 'x').discriminant().is_err());
        // a x^2 + b x + c has discriminant b^2 - 4ac
        let g = UniPoly::new(vec![z(5), z(3), z(2)], 'x');
        assert_eq!(g.discriminant().unwrap(), z(9 - 40));
    }
}
