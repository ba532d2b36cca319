//! Explicit matrix units and isotropy elements inside a wreath product
//! `A ≀ G`, `A` a direct sum of full matrix algebras.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use sepdeform_scalar::{Integer, Ring};

use super::{act_on_index, format_index, position_group};
use crate::algebra::{add_into, write_terms, Algebra};
use crate::error::{check_budget, CoreError, Result};
use crate::group::{GroupDescriptor, Perm};

/// Bounds for the explicit check.
pub const MAX_UNIT_CHECK_GROUP: usize = 48;
pub const MAX_UNIT_CHECK_INNER_DIM: u128 = 16;

/// `⊕_b M_{d_b}` with basis `E{b}_{ij}`, blocks in order.
pub fn block_matrix_algebra<R: Ring>(sizes: &[usize]) -> Result<Algebra<R>> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(CoreError::InvalidInput("block sizes must be positive".into()));
    }
    let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &d| {
        let o = *acc;
        *acc += d * d;
        Some(o)
    }).collect();
    let dim: usize = sizes.iter().map(|d| d * d).sum();
    let mut labels = Vec::with_capacity(dim);
    let mut coords = Vec::with_capacity(dim);
    for (b, &d) in sizes.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                labels.push(format!("E{}_{}{}", b + 1, i + 1, j + 1));
                coords.push((b, i, j));
            }
        }
    }
    let mut table = Vec::with_capacity(dim * dim);
    for &(b1, i1, j1) in &coords {
        for &(b2, i2, j2) in &coords {
            table.push(if b1 == b2 && j1 == i2 {
                vec![(offsets[b1] + i1 * sizes[b1] + j2, R::one())]
            } else {
                vec![]
            });
        }
    }
    let unit = sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &d)| (0..d).map(move |i| (b, i)))
        .map(|(b, i)| (offsets[b] + i * sizes[b] + i, R::one()))
        .collect();
    let name = format!("⊕M[{}]", sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    Algebra::new(name, labels, table, unit)
}

type Key = (Vec<usize>, Perm);

/// An element `Σ c (b_1⊗...⊗b_n) π` of `A ≀ G`, with
/// `(α σ)(β τ) = α σ(β) στ`.
#[derive(Clone, PartialEq, Eq)]
pub struct WreathElement<R: Ring> {
    terms: BTreeMap<Key, R>,
}

impl<R: Ring> WreathElement<R> {
    pub fn zero() -> Self {
        WreathElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_into(&mut terms, k.clone(), c.clone());
        }
        WreathElement { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

impl<R: Ring> fmt::Display for WreathElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|((idx, p), c)| (format!("{}{p}", format_index(idx)), c)))
    }
}

impl<R: Ring> fmt::Debug for WreathElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `A ≀ G` for `A = ⊕ M_{d_b}` and `G` acting on `n` positions.
pub struct Wreath<R: Ring> {
    base: Algebra<R>,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    n: usize,
    elements: Vec<Perm>,
}

impl<R: Ring> Wreath<R> {
    pub fn new(sizes: &[usize], n: usize, g: &GroupDescriptor) -> Result<Self> {
        let base = block_matrix_algebra(sizes)?;
        let (_, elements) = position_group(g, n, true)?;
        let elements = elements.expect("enumerated");
        let offsets = sizes.iter().scan(0, |acc, &d| {
            let o = *acc;
            *acc += d * d;
            Some(o)
        }).collect();
        Ok(Wreath { base, sizes: sizes.to_vec(), offsets, n, elements })
    }

    pub fn base(&self) -> &Algebra<R> {
        &self.base
    }

    /// Group elements as position permutations, in enumeration order.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    fn unit_index(&self, b: usize, i: usize, j: usize) -> usize {
        self.offsets[b] + i * self.sizes[b] + j
    }

    pub fn mul(&self, x: &WreathElement<R>, y: &WreathElement<R>) -> WreathElement<R> {
        let mut terms = BTreeMap::new();
        for ((a, s), c) in &x.terms {
            for ((b, t), d) in &y.terms {
                let moved = act_on_index(s, b);
                // componentwise products of basis elements of A
                let mut acc: Vec<(Vec<usize>, R)> = vec![(Vec::with_capacity(self.n), c.mul(d))];
                for k in 0..self.n {
                    let prod = self.base.basis_product(a[k], moved[k]);
                    acc = acc
                        .into_iter()
                        .flat_map(|(idx, coeff)| {
                            prod.iter().map(move |(l, e)| {
                                let mut idx = idx.clone();
                                idx.push(*l);
                                (idx, coeff.mul(e))
                            })
                        })
                        .collect();
                }
                let st = s.compose(t);
                for (idx, coeff) in acc {
                    add_into(&mut terms, (idx, st.clone()), coeff);
                }
            }
        }
        WreathElement { terms }
    }

    /// `x π` for a group element `π`.
    pub fn times_group(&self, x: &WreathElement<R>, pi: &Perm) -> WreathElement<R> {
        WreathElement { terms: x.terms.iter().map(|((i, s), c)| ((i.clone(), s.compose(pi)), c.clone())).collect() }
    }

    /// `π x`.
    pub fn group_times(&self, pi: &Perm, x: &WreathElement<R>) -> WreathElement<R> {
        WreathElement {
            terms: x.terms.iter().map(|((i, s), c)| ((act_on_index(pi, i), pi.compose(s)), c.clone())).collect(),
        }
    }

    /// `Σ` of the tensors with the given coefficient, times the identity of `G`.
    fn tensor(&self, terms: impl IntoIterator<Item = (Vec<usize>, R)>) -> WreathElement<R> {
        let id = Perm::identity(self.n);
        let mut out = BTreeMap::new();
        for (idx, c) in terms {
            add_into(&mut out, (idx, id.clone()), c);
        }
        WreathElement { terms: out }
    }

    fn index_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
        dims.iter().fold(vec![vec![]], |acc, &d| {
            acc.into_iter()
                .flat_map(|v| {
                    (0..d).map(move |j| {
                        let mut v = v.clone();
                        v.push(j);
                        v
                    })
                })
                .collect()
        })
    }

    /// `e(I) = ⊗_k 1_{A_{I_k}}`.
    pub fn block_idempotent(&self, index: &[usize]) -> WreathElement<R> {
        let dims: Vec<usize> = index.iter().map(|&b| self.sizes[b]).collect();
        self.tensor(Self::index_tuples(&dims).into_iter().map(|js| {
            let idx = js.iter().zip(index).map(|(&j, &b)| self.unit_index(b, j, j)).collect();
            (idx, R::one())
        }))
    }

    /// Basis `⊗_k E^{I_k}_{i_k j_k}` of `A(I)`.
    pub fn inner_basis(&self, index: &[usize]) -> Vec<WreathElement<R>> {
        let dims: Vec<usize> = index.iter().flat_map(|&b| [self.sizes[b], self.sizes[b]]).collect();
        Self::index_tuples(&dims)
            .into_iter()
            .map(|ij| {
                let idx = index.iter().enumerate().map(|(k, &b)| self.unit_index(b, ij[2 * k], ij[2 * k + 1])).collect();
                self.tensor([(idx, R::one())])
            })
            .collect()
    }

    /// The element of `A(I)` permuting tensor factors like `π ∈ G_I`:
    /// `T_π x T_π^{-1} = π(x)`.
    pub fn factor_permutation(&self, index: &[usize], pi: &Perm) -> Result<WreathElement<R>> {
        if act_on_index(pi, index) != index {
            return Err(CoreError::InvalidInput(format!("{pi} does not fix {}", format_index(index))));
        }
        let dims: Vec<usize> = index.iter().map(|&b| self.sizes[b]).collect();
        Ok(self.tensor(Self::index_tuples(&dims).into_iter().map(|js| {
            let ls = act_on_index(pi, &js);
            let idx = (0..self.n).map(|k| self.unit_index(index[k], ls[k], js[k])).collect();
            (idx, R::one())
        })))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixUnitCertificate {
    pub index: String,
    pub orbit_size: usize,
    pub isotropy_order: usize,
    pub inner_dim: u128,
    /// `E_{a,b} E_{c,d} = δ_{bc} E_{a,d}` for `E_{a,b} = e(aI) a b^-1`.
    pub matrix_units: bool,
    /// `T_π T_{π^-1} = e(I)` for all `π ∈ G_I`.
    pub factor_permutations_invertible: bool,
    /// `υ(π) υ(π') = υ(π π')`.
    pub upsilon_multiplicative: bool,
    /// `υ(1) = Σ_a e(aI) = Σ_a E_{a,a}`.
    pub upsilon_unit: bool,
    /// `υ(π)` commutes with every `x^a a b^-1`, `x` in a basis of `A(I)`.
    pub upsilon_commutes: bool,
    pub ok: bool,
}

/// Builds `E_{a,b}` and `υ(π) = Σ_μ μ T_π^{-1} π μ^{-1}` for the multi-index
/// `index` (zero-based block labels) and checks their relations.
pub fn matrix_unit_check(sizes: &[usize], index: &[usize], g: &GroupDescriptor) -> Result<MatrixUnitCertificate> {
    let n = index.len();
    if index.iter().any(|&b| b >= sizes.len()) {
        return Err(CoreError::InvalidInput(format!("{} names a missing block", format_index(index))));
    }
    check_budget("group order", g.order(), MAX_UNIT_CHECK_GROUP as u128)?;
    let inner_dim: u128 = index.iter().map(|&b| (sizes[b] * sizes[b]) as u128).product();
    check_budget("inner dimension", inner_dim, MAX_UNIT_CHECK_INNER_DIM)?;
    let w: Wreath<Integer> = Wreath::new(sizes, n, g)?;
    let elements = w.elements().to_vec();
    // coset representatives: least element (in enumeration order) per image
    let mut reps: Vec<(Vec<usize>, Perm)> = Vec::new();
    for s in &elements {
        let j = act_on_index(s, index);
        if !reps.iter().any(|(k, _)| *k == j) {
            reps.push((j, s.clone()));
        }
    }
    let stab: Vec<Perm> = elements.iter().filter(|s| act_on_index(s, index) == index).cloned().collect();
    if reps.len() * stab.len() != elements.len() {
        return Err(CoreError::RelationFailure("orbit-stabilizer count mismatch".into()));
    }
    let e_of = |j: &[usize]| w.block_idempotent(j);
    let unit_e = |a: &(Vec<usize>, Perm), b: &(Vec<usize>, Perm)| w.times_group(&e_of(&a.0), &a.1.compose(&b.1.inverse()));

    let mut matrix_units = true;
    for a in &reps {
        for b in &reps {
            let eab = unit_e(a, b);
            for c in &reps {
                for d in &reps {
                    let prod = w.mul(&eab, &unit_e(c, d));
                    let want = if b.0 == c.0 { unit_e(a, d) } else { WreathElement::zero() };
                    matrix_units &= prod == want;
                }
            }
        }
    }

    let e_i = e_of(index);
    let mut factor_permutations_invertible = true;
    let mut t_inv = Vec::with_capacity(stab.len());
    for pi in &stab {
        let t = w.factor_permutation(index, pi)?;
        let ti = w.factor_permutation(index, &pi.inverse())?;
        factor_permutations_invertible &= w.mul(&t, &ti) == e_i;
        t_inv.push(ti);
    }
    let upsilon = |k: usize| -> WreathElement<Integer> {
        let core = w.times_group(&t_inv[k], &stab[k]);
        reps.iter().fold(WreathElement::zero(), |acc, (_, mu)| {
            acc.add(&w.times_group(&w.group_times(mu, &core), &mu.inverse()))
        })
    };
    let ups: Vec<WreathElement<Integer>> = (0..stab.len()).map(upsilon).collect();
    let mut upsilon_multiplicative = true;
    for (i, p) in stab.iter().enumerate() {
        for (j, p2) in stab.iter().enumerate() {
            let k = stab.iter().position(|s| *s == p.compose(p2)).expect("stabilizer is a group");
            upsilon_multiplicative &= w.mul(&ups[i], &ups[j]) == ups[k];
        }
    }
    let id_pos = stab.iter().position(Perm::is_identity).expect("identity fixes every index");
    let sum_e = reps.iter().fold(WreathElement::zero(), |acc, r| acc.add(&e_of(&r.0)));
    let sum_units = reps.iter().fold(WreathElement::zero(), |acc, r| acc.add(&unit_e(r, r)));
    let upsilon_unit = ups[id_pos] == sum_e && sum_e == sum_units;

    let mut upsilon_commutes = true;
    let inner = w.inner_basis(index);
    'outer: for a in &reps {
        for b in &reps {
            let shift = a.1.compose(&b.1.inverse());
            for x in &inner {
                let y = w.times_group(&w.group_times(&a.1, &w.times_group(x, &a.1.inverse())), &shift);
                for u in &ups {
                    if w.mul(u, &y) != w.mul(&y, u) {
                        upsilon_commutes = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let ok = matrix_units && factor_permutations_invertible && upsilon_multiplicative && upsilon_unit && upsilon_commutes;
    Ok(MatrixUnitCertificate {
        index: format_index(index),
        orbit_size: reps.len(),
        isotropy_order: stab.len(),
        inner_dim,
        matrix_units,
        factor_permutations_invertible,
        upsilon_multiplicative,
        upsilon_unit,
        upsilon_commutes,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn off_diagonal_gives_m2() {
        let c = matrix_unit_check(&[1, 1], &[0, 1], &GroupDescriptor::Cyclic(2)).unwrap();
        assert!(c.ok, "{c:?}");
        assert_eq!((c.orbit_size, c.isotropy_order), (2, 1));
    }

    #[test]
    fn diagonal_uses_switch() {
        let c = matrix_unit_check(&[2], &[0, 0], &GroupDescriptor::Symmetric(2)).unwrap();
        assert!(c.ok, "{c:?}");
        let c3 = matrix_unit_check(&[1, 2], &[0, 0, 1], &GroupDescriptor::Symmetric(3)).unwrap();
        assert!(c3.ok, "{c3:?}");
        assert_eq!(c3.orbit_size, 3);
    }
}
