//! The action of `S_{n+1}` on `{0,1}^n` in which `(i, n+1)` keeps a string
//! whose `i`-th entry is 0 and otherwise complements every other entry.
//! Entry 0 stands for the idempotent `e`, entry 1 for `f`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{ActionHom, GroupDescriptor, Perm};
use crate::error::{CoreError, Result};

/// Largest `n` accepted by the exhaustive checks (`2^n` strings).
pub const MAX_BITS: usize = 20;

/// A word in `{0,1}^n`; entry `i` (one-indexed) is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: u32,
    len: u8,
}

impl BitString {
    pub fn new(bits: u32, len: usize) -> Result<Self> {
        if len > MAX_BITS || (len < 32 && bits >> len != 0) {
            return Err(CoreError::InvalidInput(format!("{bits:#b} does not fit in {len} entries")));
        }
        Ok(BitString { bits, len: len as u8 })
    }

    pub fn from_entries(entries: &[u8]) -> Result<Self> {
        let mut bits = 0;
        for (k, &b) in entries.iter().enumerate() {
            match b {
                0 => {}
                1 => bits |= 1 << k,
                _ => return Err(CoreError::InvalidInput(format!("entry {b} is not 0 or 1"))),
            }
        }
        BitString::new(bits, entries.len())
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Entry `i`, one-indexed.
    pub fn entry(&self, i: usize) -> u8 {
        ((self.bits >> (i - 1)) & 1) as u8
    }

    /// Number of entries equal to 0 (factors `e`).
    pub fn zeros(&self) -> usize {
        self.len() - self.bits.count_ones() as usize
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            write!(f, "{}", self.entry(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BitString {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(CoreError::InvalidInput(format!("{c:?} is not a 0/1 entry"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BitString::from_entries(&entries)
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_BITS {
        Err(CoreError::InvalidInput(format!("n = {n} outside 1..={MAX_BITS}")))
    } else {
        Ok(())
    }
}

fn mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

fn tau_bits(n: usize, i: usize, bits: u32) -> u32 {
    let b = 1u32 << (i - 1);
    if bits & b == 0 {
        bits
    } else {
        (bits ^ mask(n)) | b
    }
}

/// The operator of `tau_i = (i, n+1)`; `i = n + 1` is the identity.
pub fn theorem12_operator(n: usize, i: usize, s: &BitString) -> Result<BitString> {
    check_n(n)?;
    if s.len() != n {
        return Err(CoreError::InvalidInput(format!("string {s} has length {} not {n}", s.len())));
    }
    if i == 0 || i > n + 1 {
        return Err(CoreError::InvalidInput(format!("tau_{i} outside 1..={}", n + 1)));
    }
    if i == n + 1 {
        return Ok(*s);
    }
    BitString::new(tau_bits(n, i, s.bits), n)
}

/// Point images of the Coxeter generators `s_1, ..., s_n` of `S_{n+1}`:
/// `s_i` swaps entries `i, i+1` for `i < n`, and `s_n = tau_n`.
pub fn generator_images(n: usize) -> Result<Vec<Vec<u32>>> {
    check_n(n)?;
    let size = 1u32 << n;
    Ok((1..=n)
        .map(|i| {
            (0..size)
                .map(|bits| {
                    if i < n {
                        let (a, b) = ((bits >> (i - 1)) & 1, (bits >> i) & 1);
                        if a == b {
                            bits
                        } else {
                            bits ^ (0b11 << (i - 1))
                        }
                    } else {
                        tau_bits(n, n, bits)
                    }
                })
                .collect()
        })
        .collect())
}

pub fn string_action(n: usize) -> Result<ActionHom> {
    ActionHom::new(GroupDescriptor::Symmetric(n + 1), 1 << n, generator_images(n)?)
}

/// The operator on strings of a permutation of `{1, ..., n+1}`, through a
/// reduced word.
pub fn perm_operator(n: usize, images: &[Vec<u32>], w: &Perm) -> Vec<u32> {
    let mut out: Vec<u32> = (0..1u32 << n).collect();
    // w = s_{i1} ... s_{ik} acts by applying s_{ik} first
    for &i in w.reduced_word().iter().rev() {
        for p in out.iter_mut() {
            *p = images[i - 1][*p as usize];
        }
    }
    out
}

fn is_identity(op: &[u32]) -> bool {
    op.iter().enumerate().all(|(p, &q)| p as u32 == q)
}

#[derive(Clone, Debug, Serialize)]
pub struct StringActionCertificate {
    pub n: usize,
    pub strings: usize,
    /// Number of Coxeter relations checked pointwise.
    pub relations: usize,
    pub faithful: bool,
    /// Order of the image group when it was enumerated.
    pub image_order: Option<u128>,
}

/// Checks the Coxeter presentation of `S_{n+1}` on every string and decides
/// faithfulness.  The kernel is normal; every nontrivial normal subgroup of
/// `S_m` (`m >= 3`) contains `(1,2,3)` or, for `m = 4`, `(1,2)(3,4)`, so the
/// representation is faithful iff neither acts trivially.
pub fn theorem12_verify(n: usize) -> Result<StringActionCertificate> {
    let images = generator_images(n)?;
    let size = 1usize << n;
    let mut relations = 0;
    for i in 0..n {
        for j in i..n {
            let m = match j - i {
                0 => 1,
                1 => 3,
                _ => 2,
            };
            for p in 0..size as u32 {
                let mut q = p;
                for _ in 0..m {
                    q = images[j][images[i][q as usize] as usize];
                }
                if q != p {
                    return Err(CoreError::RelationFailure(format!(
                        "(s{} s{})^{m} moves {}",
                        i + 1,
                        j + 1,
                        BitString::new(p, n)?
                    )));
                }
            }
            relations += 1;
        }
    }
    let m = n + 1;
    let faithful = if m == 2 {
        !is_identity(&images[0])
    } else {
        let mut witnesses = vec![Perm::from_cycles(m, &[vec![1, 2, 3]])?];
        if m == 4 {
            witnesses.push(Perm::from_cycles(m, &[vec![1, 2], vec![3, 4]])?);
        }
        witnesses.iter().all(|w| !is_identity(&perm_operator(n, &images, w)))
    };
    let image_order = (n <= 3).then(|| closure(&images).len() as u128);
    if let Some(order) = image_order {
        let expected: u128 = (2..=m as u128).product();
        if faithful != (order == expected) {
            return Err(CoreError::RelationFailure(format!(
                "kernel test says faithful = {faithful} but the image has order {order}"
            )));
        }
    }
    Ok(StringActionCertificate { n, strings: size, relations, faithful, image_order })
}

/// All permutations generated by `gens`, as image vectors.
fn closure(gens: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let points = gens.first().map_or(0, Vec::len);
    let id: Vec<u32> = (0..points as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y: Vec<u32> = g.iter().map(|&p| x[p as usize]).collect();
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

#[derive(Clone, Debug, Serialize)]
pub enum SymmetricWitness {
    /// The generated group was enumerated.
    Enumerated { order: u128 },
    /// Every generator is an affine map of `F_2^n`, so the group lies in
    /// `AGL(n, 2)`, of the given order.
    Affine { bound: u128 },
}

#[derive(Clone, Debug, Serialize)]
pub struct FullSymmetricCertificate {
    pub n: usize,
    pub points: usize,
    pub full: bool,
    pub witness: SymmetricWitness,
}

/// Elements enumerated before falling back to the affine bound.
const CLOSURE_BUDGET: usize = 400_000;

/// Whether the operators together with the single-entry complements
/// generate the symmetric group on all `2^n` strings.
pub fn full_symmetric_check(n: usize) -> Result<FullSymmetricCertificate> {
    let mut gens = generator_images(n)?;
    let size = 1u32 << n;
    for i in 0..n {
        gens.push((0..size).map(|p| p ^ (1 << i)).collect());
    }
    let points = size as usize;
    let sym_order = (2..=points as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    if gens.iter().all(|g| is_affine(g, n)) {
        let bound = agl_order(n);
        if sym_order.is_none_or(|s| bound < s) {
            return Ok(FullSymmetricCertificate { n, points, full: false, witness: SymmetricWitness::Affine { bound } });
        }
    }
    if let Some(group) = bounded_closure(&gens, CLOSURE_BUDGET) {
        let order = group.len() as u128;
        return Ok(FullSymmetricCertificate {
            n,
            points,
            full: Some(order) == sym_order,
            witness: SymmetricWitness::Enumerated { order },
        });
    }
    Err(CoreError::BudgetExceeded { what: "permutation group closure", size: sym_order.unwrap_or(u128::MAX), limit: CLOSURE_BUDGET as u128 })
}

fn bounded_closure(gens: &[Vec<u32>], budget: usize) -> Option<HashSet<Vec<u32>>> {
    let points = gens.first().map_or(0, Vec::len);
    let id: Vec<u32> = (0..points as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y: Vec<u32> = g.iter().map(|&p| x[p as usize]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > budget {
                    return None;
                }
                stack.push(y);
            }
        }
    }
    Some(seen)
}

/// `g(s) = A s + b` over `F_2` for some matrix `A` and vector `b`.
fn is_affine(g: &[u32], n: usize) -> bool {
    let b = g[0];
    let cols: Vec<u32> = (0..n).map(|j| g[1 << j] ^ b).collect();
    g.iter().enumerate().all(|(s, &image)| {
        let linear = (0..n).filter(|j| s >> j & 1 == 1).fold(0, |acc, j| acc ^ cols[j]);
        image == b ^ linear
    })
}

fn agl_order(n: usize) -> u128 {
    let big = 1u128 << n;
    (0..n).fold(big, |acc, i| acc * (big - (1u128 << i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn operator_examples() {
        assert_eq!(theorem12_operator(2, 2, &bs("00")).unwrap(), bs("00"));
        assert_eq!(theorem12_operator(2, 2, &bs("01")).unwrap(), bs("11"));
        assert_eq!(theorem12_operator(2, 1, &bs("10")).unwrap(), bs("11"));
        assert_eq!(theorem12_operator(2, 3, &bs("01")).unwrap(), bs("01"));
        assert!(theorem12_operator(2, 4, &bs("01")).is_err());
    }

    #[test]
    fn small_certificates() {
        let c1 = theorem12_verify(1).unwrap();
        assert!(!c1.faithful);
        let c2 = theorem12_verify(2).unwrap();
        assert!(c2.faithful);
        assert_eq!(c2.image_order, Some(6));
        assert!(theorem12_verify(3).unwrap().faithful);
        string_action(3).unwrap().verify(1000).unwrap();
    }

    #[test]
    fn bitstring_round_trip() {
        let s = bs("0110");
        assert_eq!(s.to_string(), "0110");
        assert_eq!(s.zeros(), 2);
        assert!("012".parse::<BitString>().is_err());
    }
}

#[cfg(test)]
mod full_symmetric_tests {
    use super::*;

    #[test]
    fn complements_generate_everything_only_for_small_n() {
        for n in 1..=2 {
            assert!(full_symmetric_check(n).unwrap().full, "n = {n}");
        }
        for n in 3..=6 {
            let c = full_symmetric_check(n).unwrap();
            assert!(!c.full);
            assert!(matches!(c.witness, SymmetricWitness::Affine { .. }));
        }
        assert_eq!(agl_order(3), 1344);
    }
}
