//! The Hecke algebra `H_n(q)` of `S_n` on the basis `T_w`, with
//! `T_s^2 = (q - q^-1) T_s + 1`.

use std::collections::BTreeMap;
use std::fmt;

use sepdeform_scalar::{Integer, Laurent, Ring, ScalarError, ZLaurent};

use crate::algebra::{add_into, write_terms, Algebra, Element};
use crate::error::{check_budget, CoreError, Result};
use crate::group::{parse_word, GroupDescriptor, Perm};

/// Ranks above this are refused by the table-building operations.
pub const MAX_TABLE_RANK: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `H_n` over a ring containing `q` and `q^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hecke<R: Ring> {
    n: usize,
    q: R,
    /// `q - q^-1`
    gap: R,
}

impl Hecke<ZLaurent> {
    /// Over `Z[q, q^-1]`.
    pub fn generic(n: usize) -> Result<Self> {
        Hecke::new(n, Laurent::var('q'), Laurent::var_pow('q', -1))
    }
}

impl<R: Ring> Hecke<R> {
    pub fn new(n: usize, q: R, q_inv: R) -> Result<Self> {
        if n == 0 || n > 12 {
            return Err(CoreError::InvalidInput(format!("rank {n} outside 1..=12")));
        }
        if !q.mul(&q_inv).is_one() {
            return Err(CoreError::InvalidInput(format!("{q_inv} is not the inverse of {q}")));
        }
        let gap = q.sub(&q_inv);
        Ok(Hecke { n, q, gap })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    pub fn basis(&self, w: &Perm) -> Result<HeckeElement<R>> {
        if w.degree() != self.n {
            return Err(CoreError::InvalidInput(format!("{w} is not in S_{}", self.n)));
        }
        Ok(HeckeElement { n: self.n, terms: BTreeMap::from([(w.clone(), R::one())]) })
    }

    pub fn one(&self) -> HeckeElement<R> {
        HeckeElement { n: self.n, terms: BTreeMap::from([(Perm::identity(self.n), R::one())]) }
    }

    pub fn zero(&self) -> HeckeElement<R> {
        HeckeElement { n: self.n, terms: BTreeMap::new() }
    }

    pub fn generator(&self, i: usize) -> Result<HeckeElement<R>> {
        self.basis(&Perm::simple(self.n, i)?)
    }

    fn check(&self, x: &HeckeElement<R>) -> Result<()> {
        if x.n == self.n {
            Ok(())
        } else {
            Err(CoreError::DescriptorMismatch(format!("H_{} element used in H_{}", x.n, self.n)))
        }
    }

    /// `T_{s_i} x` or `x T_{s_i}`.
    pub fn multiply_by_generator(&self, i: usize, x: &HeckeElement<R>, side: Side) -> Result<HeckeElement<R>> {
        self.check(x)?;
        let s = Perm::simple(self.n, i)?;
        let mut acc = BTreeMap::new();
        for (w, c) in &x.terms {
            let sw = match side {
                Side::Left => s.compose(w),
                Side::Right => w.compose(&s),
            };
            if sw.coxeter_length() < w.coxeter_length() {
                add_into(&mut acc, w.clone(), c.mul(&self.gap));
            }
            add_into(&mut acc, sw, c.clone());
        }
        Ok(HeckeElement { n: self.n, terms: acc })
    }

    /// `T_v T_w` by left multiplication with the generators of a reduced
    /// word of `v`, rightmost first; extended bilinearly.
    pub fn multiply(&self, x: &HeckeElement<R>, y: &HeckeElement<R>) -> Result<HeckeElement<R>> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = self.zero();
        for (v, c) in &x.terms {
            let mut prod = y.clone();
            for &i in v.reduced_word().iter().rev() {
                prod = self.multiply_by_generator(i, &prod, Side::Left)?;
            }
            acc = acc.add(&prod.scale(c))?;
        }
        Ok(acc)
    }

    /// `T_{i_1} ... T_{i_k}` for an arbitrary (not necessarily reduced) word.
    pub fn word(&self, word: &[usize]) -> Result<HeckeElement<R>> {
        word.iter()
            .rev()
            .try_fold(self.one(), |acc, &i| self.multiply_by_generator(i, &acc, Side::Left))
    }

    /// A word in generators (`s1 s2 s1`, multiplied in the algebra) or a
    /// permutation in cycle notation (the basis element `T_w`).
    pub fn parse(&self, text: &str) -> Result<HeckeElement<R>> {
        if text.trim_start().starts_with('(') {
            self.basis(&Perm::parse(text, self.n)?)
        } else {
            self.word(&parse_word(text, self.n)?)
        }
    }

    /// The elements of `S_n` in lexicographic one-line order.
    pub fn permutations(&self) -> Result<Vec<Perm>> {
        check_budget("Hecke basis", (2..=self.n as u128).product(), 40_320)?;
        Ok(GroupDescriptor::Symmetric(self.n)
            .elements(40_320)?
            .into_iter()
            .map(|g| g.as_perm().cloned().expect("symmetric group elements are permutations"))
            .collect())
    }

    /// `H_n` as a structure-constant algebra on the basis `T_w`,
    /// `w` in lexicographic order, with scalars mapped by `f`.
    pub fn to_algebra<S: Ring>(&self, mut f: impl FnMut(&R) -> Result<S>) -> Result<(Algebra<S>, Vec<Perm>)> {
        if self.n > MAX_TABLE_RANK {
            return Err(CoreError::BudgetExceeded {
                what: "Hecke structure constants",
                size: self.n as u128,
                limit: MAX_TABLE_RANK as u128,
            });
        }
        let perms = self.permutations()?;
        let index: BTreeMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = Vec::with_capacity(perms.len() * perms.len());
        for v in &perms {
            for w in &perms {
                let prod = self.multiply(&self.basis(v)?, &self.basis(w)?)?;
                table.push(
                    prod.terms
                        .iter()
                        .map(|(u, c)| Ok((index[u], f(c)?)))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
        }
        let labels = perms.iter().map(basis_label).collect();
        let unit = vec![(index[&Perm::identity(self.n)], S::one())];
        let alg = Algebra::new(format!("H{}", self.n), labels, table, unit)?;
        Ok((alg, perms))
    }
}

fn basis_label(w: &Perm) -> String {
    if w.is_identity() {
        "1".into()
    } else {
        format!("T{w}")
    }
}

/// A sparse combination of basis elements `T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement<R: Ring> {
    n: usize,
    terms: BTreeMap<Perm, R>,
}

impl<R: Ring> HeckeElement<R> {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(CoreError::DescriptorMismatch(format!("H_{} vs H_{}", self.n, other.n)));
        }
        let mut acc = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut acc, w.clone(), c.clone());
        }
        Ok(HeckeElement { n: self.n, terms: acc })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&R::one().neg()))
    }

    pub fn scale(&self, s: &R) -> Self {
        HeckeElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(s)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// `(T_w label, scalar)` pairs.
    pub fn labelled_terms(&self) -> Vec<(String, String)> {
        self.terms.iter().map(|(w, c)| (basis_label(w), c.to_string())).collect()
    }
}

impl<R: Ring> fmt::Display for HeckeElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(w, c)| (basis_label(w), c)))
    }
}

impl<R: Ring> fmt::Debug for HeckeElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `T_w -> w` with coefficients evaluated at `q = 1`, as an element of
/// `ZS_n` (which must be the group algebra of `S_n`).
pub fn specialize_q1(x: &HeckeElement<ZLaurent>, zsn: &Algebra<Integer>) -> Result<Element<Integer>> {
    let one = ZLaurent::one();
    let mut terms = Vec::new();
    for (w, c) in &x.terms {
        let label = w.to_string();
        let k = zsn
            .index_of(&label)
            .ok_or_else(|| CoreError::DescriptorMismatch(format!("{label} is not a basis element of {}", zsn.name())))?;
        let v = c.specialize_laurent(&[('q', one.clone())])?;
        let v = v
            .as_constant()
            .ok_or_else(|| ScalarError::EvaluationAtPole(format!("{c} at q = 1")))?;
        terms.push((k, v));
    }
    zsn.element(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sepdeform_scalar::parse_laurent;

    fn h(n: usize) -> Hecke<ZLaurent> {
        Hecke::generic(n).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let h2 = h(2);
        let s = h2.generator(1).unwrap();
        let sq = h2.multiply(&s, &s).unwrap();
        let expected = h2
            .one()
            .add(&s.scale(&parse_laurent("q - q^-1").unwrap()))
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn lengths_add() {
        let h3 = h(3);
        let s1 = h3.generator(1).unwrap();
        let s2 = h3.generator(2).unwrap();
        let s1s2 = h3.basis(&Perm::from_word(3, &[1, 2]).unwrap()).unwrap();
        assert_eq!(h3.multiply(&s1, &s2).unwrap(), s1s2);
        let expected = s1s2.scale(&parse_laurent("q - q^-1").unwrap()).add(&s2).unwrap();
        assert_eq!(h3.multiply(&s1, &s1s2).unwrap(), expected);
    }

    #[test]
    fn words_and_cycles_parse() {
        let h3 = h(3);
        assert_eq!(h3.parse("s1 s2").unwrap(), h3.parse("(1,2,3)").unwrap());
        assert!(h3.parse("s3").is_err());
    }
}
