use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Variables are the lowercase ASCII letters; `a` is index 0.
pub fn var_index(name: char) -> Option<u8> {
    name.is_ascii_lowercase().then(|| name as u8 - b'a')
}

pub fn var_name(index: u8) -> char {
    (b'a' + index) as char
}

/// A Laurent monomial: sorted `(variable, nonzero exponent)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(u8, i32); 3]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: u8) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: u8, e: i32) -> Self {
        let mut m = SmallVec::new();
        if e != 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u8, i32)>) -> Self {
        let mut out = Monomial::one();
        for (v, e) in pairs {
            out = out.mul(&Monomial::var_pow(v, e));
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(u8, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: u8) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    fn merge(&self, other: &Self, sign: i32) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len().max(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i]);
                i += 1;
            } else if take_b {
                out.push((b[j].0, sign * b[j].1));
                j += 1;
            } else {
                let e = a[i].1 + sign * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, 1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.merge(other, -1)
    }

    pub fn inv(&self) -> Self {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Exponent-wise minimum, treating absent variables as exponent 0.
    pub fn meet(&self, other: &Self) -> Self {
        let mut out = Monomial::one();
        for v in self.vars().chain(other.vars()) {
            let e = self.exponent(v).min(other.exponent(v));
            if e != 0 && out.exponent(v) == 0 {
                out = out.mul(&Monomial::var_pow(v, e));
            }
        }
        out
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|(_, e)| *e >= 0)
    }

    /// `self / other` has only non-negative exponents.
    pub fn divisible_by(&self, other: &Self) -> bool {
        self.div(other).is_polynomial()
    }

    pub fn without(&self, v: u8) -> Self {
        Monomial(self.0.iter().copied().filter(|(w, _)| *w != v).collect())
    }
}

/// Graded order: total degree first, then the exponent of `a`, `b`, ...
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(&(_, e)), None) => return e.cmp(&0),
                    (None, Some(&(_, e))) => return 0.cmp(&e),
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va < vb {
                            return ea.cmp(&0);
                        } else if vb < va {
                            return 0.cmp(&eb);
                        } else if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{}", var_name(v))?;
            } else {
                write!(f, "{}^{}", var_name(v), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded() {
        let q = var_index('q').unwrap();
        let t = var_index('t').unwrap();
        let q2 = Monomial::var_pow(q, 2);
        let qt = Monomial::var(q).mul(&Monomial::var(t));
        let t2 = Monomial::var_pow(t, 2);
        assert!(q2 > qt && qt > t2);
        assert!(Monomial::var(q) > Monomial::one());
        assert!(Monomial::var_pow(q, -1) < Monomial::one());
    }

    #[test]
    fn mul_cancels() {
        let q = Monomial::var(16);
        assert!(q.mul(&q.inv()).is_one());
        assert_eq!(q.pow(3).to_string(), "q^3");
        assert_eq!(q.inv().to_string(), "q^-1");
    }
}
