//! Block decompositions of smash products, wreath products and the
//! rational group algebras of `B_n` and `D_n`, with dimension audits.

mod orbits;
mod units;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{check_budget, CoreError, Result};
use crate::group::{orbit_stabilizer, ActionHom, GroupDescriptor, GroupElement, Perm, ENUMERATION_BUDGET};

pub use orbits::*;
pub use units::*;

/// Largest number of multi-indices a wreath decomposition enumerates.
pub const MULTI_INDEX_BUDGET: u128 = 1 << 20;

pub fn factorial(n: usize) -> u128 {
    (2..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`, by dynamic programming.
pub fn partition_count(n: usize) -> u128 {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p[n]
}

/// Degree of the irreducible representation of `S_n` labelled by `shape`
/// (hook length formula).
pub fn hook_degree(shape: &[usize]) -> u128 {
    let n: usize = shape.iter().sum();
    let mut hooks = 1u128;
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= (row - j + leg) as u128;
        }
    }
    factorial(n) / hooks
}

/// Irreducible degrees of `S_n`, one per partition.
pub fn symmetric_degrees(n: usize) -> Vec<u128> {
    partitions(n).iter().map(|s| hook_degree(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isotropy {
    #[serde(rename = "type")]
    pub kind: String,
    pub order: u128,
}

/// `M_m(inner) ⊗ k G_I`, of dimension `m^2 · dim(inner) · |G_I|`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockSummand {
    pub matrix_size: u128,
    pub inner: String,
    pub inner_dim: u128,
    pub isotropy: Isotropy,
    pub dimension: u128,
    /// Orbit representative, when the summand comes from an orbit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representative: Option<String>,
    /// Degrees of the simple components over a splitting field, if known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u128>>,
    /// Further decomposition of the isotropy algebra.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<Box<Decomposition>>,
}

impl BlockSummand {
    fn new(matrix_size: u128, inner: impl Into<String>, inner_dim: u128, isotropy: Isotropy) -> Self {
        let dimension = matrix_size * matrix_size * inner_dim * isotropy.order;
        BlockSummand {
            matrix_size,
            inner: inner.into(),
            inner_dim,
            isotropy,
            dimension,
            representative: None,
            degrees: None,
            expansion: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub name: String,
    pub summands: Vec<BlockSummand>,
    pub total: u128,
    pub expected_total: u128,
    /// `total == expected_total`, and the squared degrees add up to the
    /// total whenever degrees are known.
    pub audit: bool,
    /// Number of simple components, when every summand's degrees are known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_count: Option<usize>,
    /// Sorted degrees of all simple components, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u128>>,
}

impl Decomposition {
    fn assemble(name: impl Into<String>, summands: Vec<BlockSummand>, expected_total: u128) -> Self {
        let total = summands.iter().map(|s| s.dimension).sum();
        let degrees: Option<Vec<u128>> = summands
            .iter()
            .map(|s| s.degrees.clone())
            .collect::<Option<Vec<_>>>()
            .map(|d| {
                let mut d: Vec<u128> = d.into_iter().flatten().collect();
                d.sort_unstable();
                d
            });
        let squares_ok = degrees.as_ref().is_none_or(|d| d.iter().map(|x| x * x).sum::<u128>() == total);
        let summand_ok = summands.iter().all(|s| {
            s.degrees.as_ref().is_none_or(|d| d.iter().map(|x| x * x).sum::<u128>() == s.dimension)
                && s.expansion.as_ref().is_none_or(|e| e.audit && e.total == s.inner_dim * s.isotropy.order)
        });
        Decomposition {
            name: name.into(),
            block_count: degrees.as_ref().map(Vec::len),
            degrees,
            audit: total == expected_total && squares_ok && summand_ok,
            summands,
            total,
            expected_total,
        }
    }
}

/// `A # kG` for `A = k^n` with `G` permuting the idempotents: one summand
/// `M_{|O|}(k) ⊗ k G_p` per orbit `O` of a point `p`.
pub fn smash_decompose(action: &ActionHom) -> Result<Decomposition> {
    action.verify(ENUMERATION_BUDGET)?;
    let g = action.group();
    let mut summands = Vec::new();
    for orbit in action.orbits() {
        let (orbit, stab) = orbit_stabilizer(action, orbit[0], ENUMERATION_BUDGET)?;
        let iso = Isotropy { kind: stabilizer_kind(g, &stab), order: stab.len() as u128 };
        let mut s = BlockSummand::new(orbit.len() as u128, "k", 1, iso);
        s.representative = Some(orbit[0].to_string());
        summands.push(s);
    }
    Ok(Decomposition::assemble(
        format!("k^{} # k{}", action.points(), g.name()),
        summands,
        action.points() as u128 * g.order(),
    ))
}

fn stabilizer_kind(g: &GroupDescriptor, stab: &[GroupElement]) -> String {
    if stab.len() as u128 == g.order() {
        g.name()
    } else if stab.len() == 1 {
        "1".into()
    } else {
        format!("order {}", stab.len())
    }
}

/// A group of permutations of the tensor positions `1..=n`.
fn position_perm(g: &GroupDescriptor, x: &GroupElement, n: usize) -> Result<Perm> {
    let bad = || CoreError::InvalidInput(format!("{} does not act on {n} tensor positions", g.name()));
    match (g, x) {
        (GroupDescriptor::Symmetric(k), GroupElement::Perm(p)) if *k == n => Ok(p.clone()),
        (GroupDescriptor::Cyclic(1), _) => Ok(Perm::identity(n)),
        (GroupDescriptor::Cyclic(r), GroupElement::Cyclic { k, .. }) if *r as usize == n => {
            Perm::from_images(&(0..n).map(|i| (i + *k as usize) % n + 1).collect::<Vec<_>>())
        }
        (GroupDescriptor::Dihedral(m), GroupElement::Dihedral { rot, flip, .. }) if *m as usize == n && n >= 3 => {
            let images: Vec<usize> = (0..n)
                .map(|i| {
                    let j = if *flip { (n - i) % n } else { i };
                    (j + *rot as usize) % n + 1
                })
                .collect();
            Perm::from_images(&images)
        }
        _ => Err(bad()),
    }
}

/// Generators and elements (in enumeration order) of `g` as permutations
/// of positions; elements only when `enumerate`.
pub fn position_group(g: &GroupDescriptor, n: usize, enumerate: bool) -> Result<(Vec<Perm>, Option<Vec<Perm>>)> {
    g.validate()?;
    let gens = g.generators().iter().map(|x| position_perm(g, x, n)).collect::<Result<Vec<_>>>()?;
    let elements = if enumerate {
        Some(g.elements(ENUMERATION_BUDGET)?.iter().map(|x| position_perm(g, x, n)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    Ok((gens, elements))
}

/// `(π I)_{π(k)} = I_k`.
pub fn act_on_index(pi: &Perm, index: &[usize]) -> Vec<usize> {
    let mut out = vec![0; index.len()];
    for (k, &i) in index.iter().enumerate() {
        out[pi.apply(k + 1) - 1] = i;
    }
    out
}

fn encode(index: &[usize], base: usize) -> usize {
    index.iter().fold(0, |acc, &i| acc * base + i)
}

fn decode(mut code: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = code % base;
        code /= base;
    }
    out
}

pub fn format_index(index: &[usize]) -> String {
    let parts: Vec<String> = index.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

/// An orbit of multi-indices with its stabilizer order.
#[derive(Clone, Debug)]
pub struct IndexOrbit {
    pub representative: Vec<usize>,
    pub size: usize,
    pub stabilizer_order: u128,
    pub stabilizer_kind: String,
}

/// Orbits of `G ≤ S_n` on `{0..blocks}^n`, ordered by least member.
pub fn index_orbits(blocks: usize, n: usize, g: &GroupDescriptor) -> Result<Vec<IndexOrbit>> {
    if blocks == 0 || n == 0 {
        return Err(CoreError::InvalidInput("need at least one block and one position".into()));
    }
    let count = (blocks as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_budget("multi-indices", count, MULTI_INDEX_BUDGET)?;
    let symmetric = matches!(g, GroupDescriptor::Symmetric(k) if *k == n);
    let (gens, elements) = position_group(g, n, !symmetric)?;
    let count = count as usize;
    let mut seen = vec![false; count];
    let mut out = Vec::new();
    for start in 0..count {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut size = 0usize;
        while let Some(c) = queue.pop_front() {
            size += 1;
            let idx = decode(c, blocks, n);
            for pi in &gens {
                let d = encode(&act_on_index(pi, &idx), blocks);
                if !std::mem::replace(&mut seen[d], true) {
                    queue.push_back(d);
                }
            }
        }
        let representative = decode(start, blocks, n);
        let (stabilizer_order, stabilizer_kind) = if symmetric {
            // the Young subgroup of label-preserving permutations fixes the
            // index; equal orders make it the whole stabilizer
            let counts: Vec<usize> = (0..blocks).map(|b| representative.iter().filter(|&&i| i == b).count()).collect();
            let young: u128 = counts.iter().map(|&c| factorial(c)).product();
            if young * size as u128 != g.order() {
                return Err(CoreError::RelationFailure(format!(
                    "stabilizer of {} is not the Young subgroup",
                    format_index(&representative)
                )));
            }
            let kind = counts.iter().filter(|&&c| c > 0).map(|c| format!("S{c}")).collect::<Vec<_>>().join("×");
            (young, kind)
        } else {
            let fix = elements
                .as_ref()
                .expect("enumerated")
                .iter()
                .filter(|pi| act_on_index(pi, &representative) == representative)
                .count() as u128;
            if fix * size as u128 != g.order() {
                return Err(CoreError::RelationFailure("orbit-stabilizer count mismatch".into()));
            }
            let kind = if fix == 1 { "1".to_string() } else if fix == g.order() { g.name() } else { format!("order {fix}") };
            (fix, kind)
        };
        out.push(IndexOrbit { representative, size, stabilizer_order, stabilizer_kind });
    }
    Ok(out)
}

fn wreath_summands(block_dims: &[u128], n: usize, g: &GroupDescriptor) -> Result<Vec<(Vec<usize>, BlockSummand)>> {
    let orbits = index_orbits(block_dims.len(), n, g)?;
    Ok(orbits
        .into_iter()
        .map(|o| {
            let inner_dim: u128 = o.representative.iter().map(|&i| block_dims[i]).product();
            let inner = o.representative.iter().map(|i| format!("A{}", i + 1)).collect::<Vec<_>>().join("⊗");
            let mut s = BlockSummand::new(
                o.size as u128,
                inner,
                inner_dim,
                Isotropy { kind: o.stabilizer_kind, order: o.stabilizer_order },
            );
            s.representative = Some(format_index(&o.representative));
            (o.representative, s)
        })
        .collect())
}

/// `A ≀ G` for `A` a sum of central separable blocks of the given
/// dimensions: one summand `M_{(G:G_I)}(A(I)) ⊗ k G_I` per orbit.
pub fn wreath_decompose(block_dims: &[u128], n: usize, g: &GroupDescriptor) -> Result<Decomposition> {
    let summands = wreath_summands(block_dims, n, g)?.into_iter().map(|(_, s)| s).collect();
    let dim: u128 = block_dims.iter().sum();
    Ok(Decomposition::assemble(format!("A≀{}", g.name()), summands, dim.pow(n as u32) * g.order()))
}

fn product_degrees(matrix: u128, a: &[u128], b: &[u128]) -> Vec<u128> {
    a.iter().flat_map(|x| b.iter().map(move |y| matrix * x * y)).collect()
}

/// `QB_n = ⊕_m M_{C(n,m)}(Q) ⊗ QS_m ⊗ QS_{n-m}`, obtained from the orbits
/// of `S_n` on `{e, f}^n`.
pub fn qbn_blocks(n: usize) -> Result<Decomposition> {
    if n == 0 {
        return Err(CoreError::InvalidInput("B_n needs n >= 1".into()));
    }
    let mut summands = Vec::new();
    for (idx, mut s) in wreath_summands(&[1, 1], n, &GroupDescriptor::Symmetric(n))? {
        let m = idx.iter().filter(|&&i| i == 1).count();
        s.inner = "Q".into();
        s.isotropy.kind = format!("S{m}×S{}", n - m);
        s.degrees = Some(product_degrees(s.matrix_size, &symmetric_degrees(m), &symmetric_degrees(n - m)));
        summands.push(s);
    }
    Ok(Decomposition::assemble(format!("QB{n}"), summands, (1u128 << n) * factorial(n)))
}

/// `Q(S_r ≀ C_2)`, expanded through the blocks of `QS_r`.
pub fn symmetric_wreath_c2(r: usize) -> Result<Decomposition> {
    let degs = symmetric_degrees(r);
    let dims: Vec<u128> = degs.iter().map(|d| d * d).collect();
    let mut summands = Vec::new();
    for (idx, mut s) in wreath_summands(&dims, 2, &GroupDescriptor::Symmetric(2))? {
        let (a, b) = (degs[idx[0]], degs[idx[1]]);
        s.degrees = Some(if idx[0] == idx[1] { vec![a * a, a * a] } else { vec![2 * a * b] });
        summands.push(s);
    }
    Ok(Decomposition::assemble(format!("Q(S{r}≀C2)"), summands, 2 * factorial(r).pow(2)))
}

/// Total dimension of the middle algebra read literally as one copy of
/// `S_r(λ)` per summand of each diagonal pair (two per `λ`) and
/// `M_2 ⊗ S_r(λ) ⊗ S_r(μ)` per unordered pair `λ < μ`.
pub fn literal_middle_dimension(r: usize) -> u128 {
    let dims: Vec<u128> = symmetric_degrees(r).iter().map(|d| d * d).collect();
    let diagonal: u128 = dims.iter().map(|d| 2 * d).sum();
    let mut off = 0;
    for i in 0..dims.len() {
        for j in i + 1..dims.len() {
            off += 4 * dims[i] * dims[j];
        }
    }
    diagonal + off
}

/// `QD_n`: `M_{C(n,m)}(Q) ⊗ QS_{n-m} ⊗ QS_m` for `m < n/2`, plus for even
/// `n = 2r` the block `M_{C(2r-1,r)}(Q) ⊗ Q(S_r ≀ C_2)`.
pub fn qdn_blocks(n: usize) -> Result<Decomposition> {
    if n < 2 {
        return Err(CoreError::InvalidInput("D_n needs n >= 2".into()));
    }
    let mut summands = Vec::new();
    let top = if n % 2 == 1 { n / 2 } else { n / 2 - 1 };
    for m in 0..=top {
        let matrix = binomial(n, m);
        let iso = Isotropy { kind: format!("S{}×S{m}", n - m), order: factorial(n - m) * factorial(m) };
        let mut s = BlockSummand::new(matrix, "Q", 1, iso);
        s.degrees = Some(product_degrees(matrix, &symmetric_degrees(n - m), &symmetric_degrees(m)));
        summands.push(s);
    }
    if n.is_multiple_of(2) {
        let r = n / 2;
        let matrix = binomial(2 * r - 1, r);
        let middle = symmetric_wreath_c2(r)?;
        let iso = Isotropy { kind: format!("S{r}≀C2"), order: 2 * factorial(r).pow(2) };
        let mut s = BlockSummand::new(matrix, "Q", 1, iso);
        s.degrees = middle.degrees.as_ref().map(|d| d.iter().map(|x| matrix * x).collect());
        s.expansion = Some(Box::new(middle));
        summands.push(s);
    }
    Ok(Decomposition::assemble(format!("QD{n}"), summands, (1u128 << (n - 1)) * factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_data() {
        assert_eq!(partition_count(5), 7);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(symmetric_degrees(4), vec![1, 3, 2, 3, 1]);
        assert_eq!(binomial(10, 3), 120);
    }

    #[test]
    fn section3_smash() {
        let act = ActionHom::new(GroupDescriptor::Cyclic(2), 4, vec![vec![0, 2, 1, 3]]).unwrap();
        let d = smash_decompose(&act).unwrap();
        let dims: Vec<u128> = d.summands.iter().map(|s| s.dimension).collect();
        assert_eq!(dims, vec![2, 4, 2]);
        assert!(d.audit);
    }

    #[test]
    fn qs2_wreath() {
        let d = wreath_decompose(&[1, 1], 2, &GroupDescriptor::Cyclic(2)).unwrap();
        let sizes: Vec<u128> = d.summands.iter().map(|s| s.matrix_size).collect();
        assert_eq!(sizes, vec![1, 2, 1]);
        assert_eq!(d.total, 8);
        assert!(d.audit);
    }

    #[test]
    fn small_qbn_qdn() {
        let b2 = qbn_blocks(2).unwrap();
        assert_eq!(b2.summands.iter().map(|s| s.dimension).collect::<Vec<_>>(), vec![2, 4, 2]);
        let d3 = qdn_blocks(3).unwrap();
        assert_eq!(d3.degrees.as_deref(), Some(&[1, 1, 2, 3, 3][..]));
        let d4 = qdn_blocks(4).unwrap();
        assert_eq!(d4.total, 192);
        assert_eq!(d4.summands.last().unwrap().dimension, 72);
        assert_eq!(d4.block_count, Some(13));
        assert_eq!(qdn_blocks(5).unwrap().block_count, Some(18));
        assert!(d4.audit && d3.audit);
        assert_eq!(literal_middle_dimension(3), 48);
    }
}
