use std::collections::BTreeMap;
use std::fmt;

use sepdeform_scalar::Ring;

use super::{add_into, write_terms, Algebra, AlgebraKind, Element};
use crate::error::{CoreError, Result};

/// An element of `A_1 ⊗ ... ⊗ A_n`, kept factored: keys are multi-indices of
/// basis elements of the factors.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<R: Ring> {
    parts: Vec<Algebra<R>>,
    terms: BTreeMap<Vec<usize>, R>,
}

impl<R: Ring> Tensor<R> {
    pub fn zero(parts: Vec<Algebra<R>>) -> Self {
        Tensor { parts, terms: BTreeMap::new() }
    }

    pub fn basis(parts: Vec<Algebra<R>>, index: Vec<usize>) -> Result<Self> {
        Tensor::from_terms(parts, [(index, R::one())])
    }

    pub fn from_terms(parts: Vec<Algebra<R>>, terms: impl IntoIterator<Item = (Vec<usize>, R)>) -> Result<Self> {
        let mut acc = BTreeMap::new();
        for (idx, c) in terms {
            if idx.len() != parts.len() || idx.iter().zip(&parts).any(|(&i, a)| i >= a.dim()) {
                return Err(CoreError::InvalidInput(format!("multi-index {idx:?} does not fit the factors")));
            }
            add_into(&mut acc, idx, c);
        }
        Ok(Tensor { parts, terms: acc })
    }

    /// `x_1 ⊗ ... ⊗ x_n`.
    pub fn pure(factors: &[Element<R>]) -> Self {
        let parts: Vec<Algebra<R>> = factors.iter().map(|x| x.algebra().clone()).collect();
        let mut terms: Vec<(Vec<usize>, R)> = vec![(vec![], R::one())];
        for x in factors {
            terms = terms
                .into_iter()
                .flat_map(|(idx, c)| {
                    x.terms().map(move |(k, d)| {
                        let mut idx = idx.clone();
                        idx.push(k);
                        (idx, c.mul(d))
                    })
                })
                .collect();
        }
        Tensor::from_terms(parts, terms).expect("indices come from the factors")
    }

    pub fn one(parts: Vec<Algebra<R>>) -> Self {
        let units: Vec<Element<R>> = parts.iter().map(Algebra::unit).collect();
        Tensor::pure(&units)
    }

    pub fn parts(&self) -> &[Algebra<R>] {
        &self.parts
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &R)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &[usize]) -> R {
        self.terms.get(index).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.parts == other.parts {
            Ok(())
        } else {
            Err(CoreError::DescriptorMismatch("tensor factors differ".into()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut acc = self.terms.clone();
        for (k, c) in &other.terms {
            add_into(&mut acc, k.clone(), c.clone());
        }
        Ok(Tensor { parts: self.parts.clone(), terms: acc })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Tensor {
            parts: self.parts.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Tensor {
            parts: self.parts.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.mul(s)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_twisted(other, &vec![false; self.arity()])
    }

    /// Componentwise product where factor `k` uses the opposite
    /// multiplication when `opposite[k]` is set.
    pub fn mul_twisted(&self, other: &Self, opposite: &[bool]) -> Result<Self> {
        self.same(other)?;
        if opposite.len() != self.arity() {
            return Err(CoreError::InvalidInput("one opposite flag per factor is needed".into()));
        }
        let mut acc = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut partial: Vec<(Vec<usize>, R)> = vec![(Vec::with_capacity(i.len()), a.mul(b))];
                for (k, alg) in self.parts.iter().enumerate() {
                    let prod = if opposite[k] {
                        alg.basis_product(j[k], i[k])
                    } else {
                        alg.basis_product(i[k], j[k])
                    };
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    partial = partial
                        .into_iter()
                        .flat_map(|(idx, c)| {
                            prod.iter().map(move |(l, d)| {
                                let mut idx = idx.clone();
                                idx.push(*l);
                                (idx, c.mul(d))
                            })
                        })
                        .collect();
                }
                for (idx, c) in partial {
                    add_into(&mut acc, idx, c);
                }
            }
        }
        Ok(Tensor { parts: self.parts.clone(), terms: acc })
    }

    /// `(x ⊗ 1 ⊗ ... ⊗ 1) self` with `x` in factor `pos`.
    pub fn act_left(&self, x: &Element<R>, pos: usize) -> Result<Self> {
        self.single_factor(x, pos)?.mul(self)
    }

    /// `self (1 ⊗ ... ⊗ x ⊗ ... ⊗ 1)` with `x` in factor `pos`.
    pub fn act_right(&self, x: &Element<R>, pos: usize) -> Result<Self> {
        self.mul(&self.single_factor(x, pos)?)
    }

    fn single_factor(&self, x: &Element<R>, pos: usize) -> Result<Self> {
        if pos >= self.arity() || *x.algebra() != self.parts[pos] {
            return Err(CoreError::DescriptorMismatch(format!("element does not live in factor {pos}")));
        }
        let factors: Vec<Element<R>> = self
            .parts
            .iter()
            .enumerate()
            .map(|(k, a)| if k == pos { x.clone() } else { a.unit() })
            .collect();
        Ok(Tensor::pure(&factors))
    }

    /// `x_1 x_2 ... x_n` summed over terms; all factors must be one algebra.
    pub fn multiply_out(&self) -> Result<Element<R>> {
        let alg = self
            .parts
            .first()
            .ok_or_else(|| CoreError::InvalidInput("empty tensor".into()))?;
        if self.parts.iter().any(|a| a != alg) {
            return Err(CoreError::DescriptorMismatch("factors are different algebras".into()));
        }
        let mut acc = alg.zero();
        for (idx, c) in &self.terms {
            let prod = idx
                .iter()
                .try_fold(alg.unit(), |x, &k| x.mul(&alg.basis(k)))?;
            acc = acc.add(&prod.scale(c))?;
        }
        Ok(acc)
    }

    /// Moves factor `k` to position `perm[k]`.
    pub fn permute_factors(&self, perm: &[usize]) -> Result<Self> {
        let n = self.arity();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(CoreError::InvalidInput(format!("{perm:?} is not a permutation of the factors")));
        }
        let mut parts = self.parts.clone();
        for (k, &p) in perm.iter().enumerate() {
            parts[p] = self.parts[k].clone();
        }
        let terms = self.terms.iter().map(|(idx, c)| {
            let mut out = vec![0; n];
            for (k, &p) in perm.iter().enumerate() {
                out[p] = idx[k];
            }
            (out, c.clone())
        });
        Tensor::from_terms(parts, terms)
    }

    /// Places the factors of `self` at `positions` of a tensor with factors
    /// `parts`, with the unit in every other slot.
    pub fn embed(&self, positions: &[usize], parts: Vec<Algebra<R>>) -> Result<Self> {
        if positions.len() != self.arity()
            || positions.iter().enumerate().any(|(k, &p)| p >= parts.len() || parts[p] != self.parts[k])
        {
            return Err(CoreError::InvalidInput("embedding positions do not match the factors".into()));
        }
        let mut placed = vec![false; parts.len()];
        for &p in positions {
            if std::mem::replace(&mut placed[p], true) {
                return Err(CoreError::InvalidInput("embedding positions repeat".into()));
            }
        }
        let fill: Vec<usize> = (0..parts.len()).filter(|&p| !placed[p]).collect();
        let fill_parts: Vec<Algebra<R>> = fill.iter().map(|&p| parts[p].clone()).collect();
        let ones = Tensor::one(fill_parts);
        let mut terms = Vec::new();
        for (idx, c) in &self.terms {
            for (jdx, d) in &ones.terms {
                let mut out = vec![0; parts.len()];
                for (k, &p) in positions.iter().enumerate() {
                    out[p] = idx[k];
                }
                for (k, &p) in fill.iter().enumerate() {
                    out[p] = jdx[k];
                }
                terms.push((out, c.mul(d)));
            }
        }
        Tensor::from_terms(parts, terms)
    }

    /// The same multi-indices over other factors of equal dimensions, with
    /// scalars mapped by `f`.
    pub fn transport<S: Ring>(&self, parts: Vec<Algebra<S>>, mut f: impl FnMut(&R) -> Result<S>) -> Result<Tensor<S>> {
        if parts.len() != self.arity() || parts.iter().zip(&self.parts).any(|(a, b)| a.dim() != b.dim()) {
            return Err(CoreError::DescriptorMismatch("target factors have other dimensions".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(idx, c)| Ok((idx.clone(), f(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Tensor::from_terms(parts, terms)
    }

    /// `(labels, scalar)` pairs, for serialization.
    pub fn labelled_terms(&self) -> Vec<(Vec<String>, String)> {
        self.terms
            .iter()
            .map(|(idx, c)| {
                let labels = idx.iter().zip(&self.parts).map(|(&k, a)| a.label(k).to_string()).collect();
                (labels, c.to_string())
            })
            .collect()
    }

    fn term_label(&self, idx: &[usize]) -> String {
        idx.iter()
            .zip(&self.parts)
            .map(|(&k, a)| a.label(k))
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

impl<R: Ring> fmt::Display for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|(idx, c)| {
                let label = self.term_label(idx);
                // "1⊗1" must not be read as the scalar label "1"
                (if self.arity() > 1 { format!("({label})") } else { label }, c)
            }),
        )
    }
}

impl<R: Ring> fmt::Debug for Tensor<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `T = Σ e_ij ⊗ e_ji` in `M_n ⊗ M_n`.
pub fn switch_element<R: Ring>(n: usize) -> Result<Tensor<R>> {
    switch_element_in(&Algebra::matrix(n)?)
}

pub fn switch_element_in<R: Ring>(m: &Algebra<R>) -> Result<Tensor<R>> {
    let AlgebraKind::Matrix(n) = *m.kind() else {
        return Err(CoreError::InvalidInput(format!("{} is not a matrix algebra", m.name())));
    };
    let terms = (0..n).flat_map(|i| (0..n).map(move |j| (vec![i * n + j, j * n + i], R::one())));
    Tensor::from_terms(vec![m.clone(), m.clone()], terms)
}

/// `Σ x_i a y_i` for `T = Σ x_i ⊗ y_i`, returned as a scalar.
pub fn reduced_trace<R: Ring>(a: &Element<R>, t: &Tensor<R>) -> Result<R> {
    if t.arity() != 2 || t.parts.iter().any(|p| p != a.algebra()) {
        return Err(CoreError::DescriptorMismatch("the switch element belongs to another algebra".into()));
    }
    let alg = a.algebra();
    let mut acc = alg.zero();
    for (idx, c) in &t.terms {
        acc = acc.add(&alg.basis(idx[0]).mul(a)?.mul(&alg.basis(idx[1]))?.scale(c))?;
    }
    acc.as_scalar()
        .ok_or_else(|| CoreError::RelationFailure(format!("Σ x a y = {acc} is not a scalar")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sepdeform_scalar::{Integer, Zp};

    #[test]
    fn switch_squares_to_one() {
        for n in 1..=3 {
            let t = switch_element::<Integer>(n).unwrap();
            assert_eq!(t.mul(&t).unwrap(), Tensor::one(t.parts().to_vec()));
        }
        assert_eq!(switch_element::<Integer>(1).unwrap().to_string(), "(e11⊗e11)");
    }

    #[test]
    fn traces() {
        let t = switch_element::<Zp<2>>(2).unwrap();
        let m = t.parts()[0].clone();
        assert_eq!(reduced_trace(&m.basis(0), &t).unwrap(), Zp::new(1));
        let t3 = switch_element::<Integer>(3).unwrap();
        let m3 = t3.parts()[0].clone();
        assert_eq!(reduced_trace(&m3.unit(), &t3).unwrap(), Integer::from(3));
    }

    #[test]
    fn orthogonal_pure_tensors() {
        let m = Algebra::<Integer>::matrix(2).unwrap();
        let (e, f) = (m.basis(0), m.basis(3));
        let x = Tensor::pure(&[e.clone(), f.clone()]);
        let y = Tensor::pure(&[f, e]);
        assert!(x.mul(&y).unwrap().is_zero());
    }
}
