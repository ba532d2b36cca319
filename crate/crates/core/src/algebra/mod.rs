//! Finite-dimensional associative algebras, free on an explicit basis, with
//! multiplication given by structure constants.

pub mod spec;
mod tensor;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepdeform_scalar::{FractionField, Ring, UniPoly};

pub use spec::AlgebraSpec;
pub use tensor::{reduced_trace, switch_element, switch_element_in, Tensor};

use crate::error::{check_budget, CoreError, Result};
use crate::group::{GroupDescriptor, GroupElement};
use crate::linalg::nullspace;

/// Largest dimension for which associativity is checked on every triple.
pub const EXHAUSTIVE_CHECK_DIM: usize = 64;
/// Number of random triples checked above [`EXHAUSTIVE_CHECK_DIM`].
pub const RANDOM_CHECK_TRIPLES: usize = 2000;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// A sparse vector: sorted basis indices with nonzero coefficients.
pub type Sparse<R> = Vec<(usize, R)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Table,
    /// `R[x]/(f)` for monic `f` of the given degree.
    Quotient,
    /// `M_n(R)` with basis `e_ij`, index `(i-1) n + (j-1)`.
    Matrix(usize),
    Group(GroupDescriptor),
}

struct Inner<R> {
    name: String,
    kind: AlgebraKind,
    labels: Vec<String>,
    table: Vec<Sparse<R>>,
    unit: Sparse<R>,
}

/// An algebra descriptor; cloning is cheap and clones compare equal.
#[derive(Clone)]
pub struct Algebra<R: Ring>(Arc<Inner<R>>);

impl<R: Ring> PartialEq for Algebra<R> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl<R: Ring> Eq for Algebra<R> {}

impl<R: Ring> fmt::Debug for Algebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.0.name, self.dim())
    }
}

fn sparse_from_dense<R: Ring>(v: Vec<R>) -> Sparse<R> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn add_into<K: Ord, R: Ring>(acc: &mut BTreeMap<K, R>, k: K, c: R) {
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().add(&c);
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl<R: Ring> Algebra<R> {
    /// Build from a full product table (`table[i * dim + j]` is the product
    /// of basis elements `i` and `j`) and a unit.  The unit law is checked on
    /// every basis element and associativity as described at
    /// [`Algebra::verify_associativity`].
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Sparse<R>>, unit: Sparse<R>) -> Result<Self> {
        let alg = Self::build(name.into(), AlgebraKind::Table, labels, table, unit)?;
        alg.verify(DEFAULT_SEED)?;
        Ok(alg)
    }

    fn build(name: String, kind: AlgebraKind, labels: Vec<String>, table: Vec<Sparse<R>>, unit: Sparse<R>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(CoreError::InvalidInput("an algebra needs a nonempty basis".into()));
        }
        if table.len() != dim * dim {
            return Err(CoreError::InvalidInput(format!(
                "product table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        let normalize = |v: Sparse<R>| -> Result<Sparse<R>> {
            let mut acc = BTreeMap::new();
            for (k, c) in v {
                if k >= dim {
                    return Err(CoreError::InvalidInput(format!("basis index {k} out of range")));
                }
                add_into(&mut acc, k, c);
            }
            Ok(acc.into_iter().collect())
        };
        let table = table.into_iter().map(normalize).collect::<Result<Vec<_>>>()?;
        let unit = normalize(unit)?;
        Ok(Algebra(Arc::new(Inner { name, kind, labels, table, unit })))
    }

    /// Unit law on all basis elements, then associativity.
    pub fn verify(&self, seed: u64) -> Result<()> {
        let one = self.unit();
        for i in 0..self.dim() {
            let b = self.basis(i);
            if one.mul(&b)? != b || b.mul(&one)? != b {
                return Err(CoreError::RelationFailure(format!(
                    "unit of {} is not an identity for {}",
                    self.name(),
                    self.label(i)
                )));
            }
        }
        self.verify_associativity(seed)
    }

    /// On every basis triple up to dimension [`EXHAUSTIVE_CHECK_DIM`],
    /// otherwise on [`RANDOM_CHECK_TRIPLES`] triples drawn with `seed`.
    pub fn verify_associativity(&self, seed: u64) -> Result<()> {
        let d = self.dim();
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
            if a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)? {
                return Err(CoreError::RelationFailure(format!(
                    "({} {}) {} differs from {} ({} {}) in {}",
                    self.label(i),
                    self.label(j),
                    self.label(k),
                    self.label(i),
                    self.label(j),
                    self.label(k),
                    self.name()
                )));
            }
            Ok(())
        };
        if d <= EXHAUSTIVE_CHECK_DIM {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..RANDOM_CHECK_TRIPLES {
                check(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))?;
            }
        }
        Ok(())
    }

    /// `R[x]/(f)` with basis `1, x, ..., x^{r-1}` for monic `f` of degree `r`.
    pub fn quotient(name: impl Into<String>, f: &UniPoly<R>) -> Result<Self> {
        let r = f
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| CoreError::InvalidInput("quotient needs a polynomial of positive degree".into()))?;
        if !f.leading_coefficient().is_one() {
            return Err(CoreError::InvalidInput(format!("{f} is not monic")));
        }
        let x = f.var();
        // powers[k] = x^k reduced, for k < 2r - 1
        let mut powers: Vec<Vec<R>> = (0..r)
            .map(|k| (0..r).map(|j| if j == k { R::one() } else { R::zero() }).collect())
            .collect();
        for _ in r..2 * r - 1 {
            let prev = powers.last().expect("r >= 1");
            let top = prev[r - 1].clone();
            let mut next = vec![R::zero()];
            next.extend(prev[..r - 1].iter().cloned());
            for (j, c) in next.iter_mut().enumerate() {
                c.sub_assign_ref(&top.mul(&f.coefficient(j)));
            }
            powers.push(next);
        }
        let labels = (0..r)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => x.to_string(),
                _ => format!("{x}^{k}"),
            })
            .collect();
        let table = (0..r * r).map(|ij| sparse_from_dense(powers[ij / r + ij % r].clone())).collect();
        let alg = Self::build(name.into(), AlgebraKind::Quotient, labels, table, vec![(0, R::one())])?;
        alg.verify(DEFAULT_SEED)?;
        Ok(alg)
    }

    pub fn matrix(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(CoreError::InvalidInput("M_0 is not an algebra".into()));
        }
        let label = |i: usize, j: usize| {
            if n <= 9 {
                format!("e{}{}", i + 1, j + 1)
            } else {
                format!("e{},{}", i + 1, j + 1)
            }
        };
        let labels = (0..n * n).map(|k| label(k / n, k % n)).collect();
        let table = (0..n.pow(4))
            .map(|ij| {
                let (a, b) = (ij / (n * n), ij % (n * n));
                if a % n == b / n {
                    vec![((a / n) * n + b % n, R::one())]
                } else {
                    vec![]
                }
            })
            .collect();
        let unit = (0..n).map(|i| (i * n + i, R::one())).collect();
        let alg = Self::build(format!("M{n}"), AlgebraKind::Matrix(n), labels, table, unit)?;
        alg.verify(DEFAULT_SEED)?;
        Ok(alg)
    }

    /// The group algebra with basis the sorted elements of `g`.
    pub fn group_algebra(g: &GroupDescriptor, budget: u128) -> Result<(Self, Vec<GroupElement>)> {
        let elements = g.elements(budget)?;
        let n = elements.len();
        check_budget("group algebra table", (n * n) as u128, budget.saturating_mul(4))?;
        let index: HashMap<&GroupElement, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let table = (0..n * n)
            .map(|ij| {
                let p = g.mul_unchecked(&elements[ij / n], &elements[ij % n]);
                vec![(index[&p], R::one())]
            })
            .collect();
        let labels = elements.iter().map(ToString::to_string).collect();
        let unit = vec![(index[&g.identity()], R::one())];
        let alg = Self::build(format!("k{}", g.name()), AlgebraKind::Group(g.clone()), labels, table, unit)?;
        alg.verify(DEFAULT_SEED)?;
        Ok((alg, elements))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.0.kind
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    /// Product of basis elements `i` and `j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, R)] {
        &self.0.table[i * self.dim() + j]
    }

    pub fn basis(&self, i: usize) -> Element<R> {
        assert!(i < self.dim(), "basis index {i} out of range");
        Element::from_map(self.clone(), BTreeMap::from([(i, R::one())]))
    }

    pub fn zero(&self) -> Element<R> {
        Element::from_map(self.clone(), BTreeMap::new())
    }

    pub fn unit(&self) -> Element<R> {
        Element::from_map(self.clone(), self.0.unit.iter().cloned().collect())
    }

    pub fn scalar(&self, c: &R) -> Element<R> {
        self.unit().scale(c)
    }

    pub fn element(&self, terms: impl IntoIterator<Item = (usize, R)>) -> Result<Element<R>> {
        let mut acc = BTreeMap::new();
        for (k, c) in terms {
            if k >= self.dim() {
                return Err(CoreError::InvalidInput(format!("basis index {k} out of range")));
            }
            add_into(&mut acc, k, c);
        }
        Ok(Element::from_map(self.clone(), acc))
    }

    pub fn from_dense(&self, coeffs: &[R]) -> Result<Element<R>> {
        if coeffs.len() != self.dim() {
            return Err(CoreError::InvalidInput(format!(
                "{} coefficients for dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        self.element(coeffs.iter().cloned().enumerate())
    }

    /// The same basis and labels with every structure constant mapped
    /// through a ring morphism.
    pub fn map_scalars<S: Ring>(&self, name: impl Into<String>, mut f: impl FnMut(&R) -> Result<S>) -> Result<Algebra<S>> {
        let mut map = |v: &Sparse<R>| -> Result<Sparse<S>> {
            v.iter().map(|(k, c)| Ok((*k, f(c)?))).collect()
        };
        let table = self.0.table.iter().map(&mut map).collect::<Result<Vec<_>>>()?;
        let unit = map(&self.0.unit)?;
        let alg = Algebra::build(name.into(), self.0.kind.clone(), self.0.labels.clone(), table, unit)?;
        alg.verify(DEFAULT_SEED)?;
        Ok(alg)
    }

    /// Dense structure constants of `b_i b_j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim()];
        for (k, c) in self.basis_product(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Dimension of the span of all products of the given elements
    /// (including the unit); equals `dim` iff they generate.
    pub fn generated_span_dim(&self, generators: &[Element<R>]) -> Result<usize>
    where
        R: FractionField,
    {
        let mut basis_rows: Vec<Vec<R>> = vec![];
        let mut frontier = vec![self.unit()];
        let mut rank = 0;
        while let Some(x) = frontier.pop() {
            let mut candidate = basis_rows.clone();
            candidate.push(x.to_dense());
            let r = crate::linalg::rank(&candidate, self.dim());
            if r > rank {
                rank = r;
                basis_rows = candidate;
                for g in generators {
                    frontier.push(x.mul(g)?);
                }
                if rank == self.dim() {
                    break;
                }
            }
        }
        Ok(rank)
    }

    /// A basis of `{z : z a = a z for every a in elems}` (the whole basis when
    /// `elems` is empty).
    pub fn commutant(&self, elems: &[Element<R>]) -> Result<Vec<Element<R>>>
    where
        R: FractionField,
    {
        let d = self.dim();
        let all: Vec<Element<R>>;
        let elems = if elems.is_empty() {
            all = (0..d).map(|i| self.basis(i)).collect();
            &all
        } else {
            elems
        };
        check_budget("commutant system", (elems.len() * d * d) as u128, 2_000_000)?;
        let mut rows = Vec::new();
        for a in elems {
            // column k holds the coefficients of b_k a - a b_k
            let cols: Vec<Vec<R>> = (0..d)
                .map(|k| {
                    let b = self.basis(k);
                    Ok(b.mul(a)?.sub(&a.mul(&b)?)?.to_dense())
                })
                .collect::<Result<_>>()?;
            for l in 0..d {
                let row: Vec<R> = (0..d).map(|k| cols[k][l].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        nullspace(&rows, d).into_iter().map(|v| self.from_dense(&v)).collect()
    }

    pub fn center_basis(&self) -> Result<Vec<Element<R>>>
    where
        R: FractionField,
    {
        self.commutant(&[])
    }
}

/// An element of an [`Algebra`]: a sparse map from basis index to scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<R: Ring> {
    alg: Algebra<R>,
    coeffs: BTreeMap<usize, R>,
}

impl<R: Ring> Element<R> {
    fn from_map(alg: Algebra<R>, coeffs: BTreeMap<usize, R>) -> Self {
        debug_assert!(coeffs.values().all(|c| !c.is_zero()));
        Element { alg, coeffs }
    }

    pub fn algebra(&self) -> &Algebra<R> {
        &self.alg
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(&i).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_dense(&self) -> Vec<R> {
        (0..self.alg.dim()).map(|i| self.coeff(i)).collect()
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(CoreError::DescriptorMismatch(format!("{} vs {}", self.alg.name(), other.alg.name())))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut acc = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            add_into(&mut acc, *k, c.clone());
        }
        Ok(Element::from_map(self.alg.clone(), acc))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Element::from_map(self.alg.clone(), self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect())
    }

    pub fn scale(&self, s: &R) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, c)| (*k, c.mul(s)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Element::from_map(self.alg.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut acc = BTreeMap::new();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let ab = a.mul(b);
                for (k, c) in self.alg.basis_product(*i, *j) {
                    add_into(&mut acc, *k, ab.mul(c));
                }
            }
        }
        Ok(Element::from_map(self.alg.clone(), acc))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.alg.unit(), |acc, _| acc.mul(self).expect("same algebra"))
    }

    /// `Some(c)` when the element is `c` times the unit.
    pub fn as_scalar(&self) -> Option<R> {
        let unit = self.alg.unit();
        let (&k, _) = unit.coeffs.iter().find(|(_, u)| u.is_one())?;
        let c = self.coeff(k);
        (*self == unit.scale(&c)).then_some(c)
    }

    /// The same coefficients in another algebra with the same basis.
    pub fn transport<S: Ring>(&self, target: &Algebra<S>, mut f: impl FnMut(&R) -> Result<S>) -> Result<Element<S>> {
        if target.dim() != self.alg.dim() {
            return Err(CoreError::DescriptorMismatch(format!("{} vs {}", self.alg.name(), target.name())));
        }
        target.element(self.coeffs.iter().map(|(k, c)| Ok((*k, f(c)?))).collect::<Result<Vec<_>>>()?)
    }

    /// `(label, scalar)` pairs in basis order, for serialization.
    pub fn labelled_terms(&self) -> Vec<(String, String)> {
        self.coeffs
            .iter()
            .map(|(k, c)| (self.alg.label(*k).to_string(), c.to_string()))
            .collect()
    }
}

/// Writes `c*label` terms joined by ` + `, parenthesizing compound scalars.
pub(crate) fn write_terms<'a, R: Ring>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a R)>,
) -> fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        let s = c.to_string();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if !rest.contains([' ', '-', '+']) => (true, rest.to_string()),
            _ => (false, s),
        };
        let compound = body.contains(' ') || (body.contains('/') && !body.chars().all(|ch| ch.is_ascii_digit() || ch == '/'));
        if !first {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        } else if neg {
            write!(f, "-")?;
        }
        match (label.as_str(), body.as_str()) {
            ("1", _) if compound && !first => write!(f, "({body})")?,
            ("1", _) => write!(f, "{body}")?,
            (_, "1") => write!(f, "{label}")?,
            _ if compound => write!(f, "({body})*{label}")?,
            _ => write!(f, "{body}*{label}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<R: Ring> fmt::Display for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|(k, c)| (self.alg.label(*k).to_string(), c)))
    }
}

impl<R: Ring> fmt::Debug for Element<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sepdeform_scalar::{parse_laurent, Integer, Rat, ZLaurent};

    #[test]
    fn cubic_reduction() {
        let t: ZLaurent = parse_laurent("t").unwrap();
        let f = UniPoly::new(vec![ZLaurent::from_i64(-1), t.neg(), ZLaurent::zero(), ZLaurent::one()], 'x');
        let a = Algebra::quotient("A_t", &f).unwrap();
        let x = a.basis(1);
        let x2 = a.basis(2);
        assert_eq!(x2.mul(&x).unwrap().to_string(), "1 + t*x");
        assert_eq!(x2.mul(&x2).unwrap().to_string(), "x + t*x^2");
    }

    #[test]
    fn group_algebra_square() {
        let (a, _) = Algebra::<Integer>::group_algebra(&GroupDescriptor::Cyclic(2), 100).unwrap();
        let one_plus_a = a.unit().add(&a.basis(1)).unwrap();
        assert_eq!(one_plus_a.pow(2), a.from_dense(&[Integer::from(2), Integer::from(2)]).unwrap());
    }

    #[test]
    fn centers() {
        assert_eq!(Algebra::<Rat>::matrix(2).unwrap().center_basis().unwrap().len(), 1);
        for (g, k) in [(GroupDescriptor::Symmetric(3), 3), (GroupDescriptor::Hyperoctahedral(2), 5)] {
            let (a, _) = Algebra::<Rat>::group_algebra(&g, 1000).unwrap();
            assert_eq!(a.center_basis().unwrap().len(), k);
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Algebra::<Integer>::matrix(2).unwrap();
        let b = Algebra::<Integer>::matrix(2).unwrap();
        assert!(matches!(a.unit().mul(&b.unit()), Err(CoreError::DescriptorMismatch(_))));
    }
}
