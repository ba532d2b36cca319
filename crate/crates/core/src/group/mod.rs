//! Finite groups given by explicit elements: cyclic, dihedral, symmetric,
//! hyperoctahedral `B_n = C_2 wr S_n`, the Weyl groups `D_n`, and direct
//! products, with conjugacy classes and verified permutation actions.

mod action;
mod perm;
pub mod strings;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use action::{orbit_stabilizer, ActionHom};
pub use perm::{parse_word, Perm, MAX_DEGREE, MAX_WORD_LEN};

use crate::error::{check_budget, CoreError, Result};

/// Default bound on the number of elements any enumeration may visit.
pub const ENUMERATION_BUDGET: u128 = 100_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupElement {
    Perm(Perm),
    Cyclic { k: u32, r: u32 },
    /// `rho^rot tau^flip` in the dihedral group of order `2m`.
    Dihedral { rot: u32, flip: bool, m: u32 },
    /// `(c_1, ..., c_n) | sigma` with `c_i` in `C_2 = {0, 1}`.
    Signed { signs: Vec<u8>, perm: Perm },
    Product(Vec<GroupElement>),
}

impl GroupElement {
    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            GroupElement::Perm(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Cyclic { k, .. } => write!(f, "x^{k}"),
            GroupElement::Dihedral { rot, flip, .. } => {
                write!(f, "r^{rot}")?;
                if *flip {
                    write!(f, "*s")?;
                }
                Ok(())
            }
            GroupElement::Signed { signs, perm } => {
                let parts: Vec<String> = signs.iter().map(ToString::to_string).collect();
                write!(f, "({})|{perm}", parts.join(","))
            }
            GroupElement::Product(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join("; "))
            }
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupDescriptor {
    Cyclic(u32),
    /// The dihedral group of order `2m`.
    Dihedral(u32),
    Symmetric(usize),
    /// `B_n = C_2 wr S_n`.
    Hyperoctahedral(usize),
    /// The index-two subgroup of `B_n` with an even number of sign changes.
    WeylD(usize),
    Product(Vec<GroupDescriptor>),
}

fn factorial(n: usize) -> u128 {
    (2..=n as u128).product()
}

impl GroupDescriptor {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(CoreError::InvalidInput(msg));
        match self {
            GroupDescriptor::Cyclic(0) => bad("C_0 is not a group".into()),
            GroupDescriptor::Dihedral(0) => bad("dihedral group needs m >= 1".into()),
            GroupDescriptor::Symmetric(n) | GroupDescriptor::Hyperoctahedral(n) | GroupDescriptor::WeylD(n)
                if *n == 0 || *n > 32 =>
            {
                bad(format!("degree {n} outside 1..=32"))
            }
            GroupDescriptor::Product(parts) => parts.iter().try_for_each(GroupDescriptor::validate),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> u128 {
        match self {
            GroupDescriptor::Cyclic(r) => *r as u128,
            GroupDescriptor::Dihedral(m) => 2 * *m as u128,
            GroupDescriptor::Symmetric(n) => factorial(*n),
            GroupDescriptor::Hyperoctahedral(n) => (1u128 << n) * factorial(*n),
            GroupDescriptor::WeylD(n) => (1u128 << (n - 1)) * factorial(*n),
            GroupDescriptor::Product(parts) => parts.iter().map(GroupDescriptor::order).product(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupDescriptor::Cyclic(r) => format!("C{r}"),
            GroupDescriptor::Dihedral(m) => format!("Dih{m}"),
            GroupDescriptor::Symmetric(n) => format!("S{n}"),
            GroupDescriptor::Hyperoctahedral(n) => format!("B{n}"),
            GroupDescriptor::WeylD(n) => format!("D{n}"),
            GroupDescriptor::Product(parts) => parts.iter().map(GroupDescriptor::name).collect::<Vec<_>>().join("x"),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupDescriptor::Cyclic(r) => GroupElement::Cyclic { k: 0, r: *r },
            GroupDescriptor::Dihedral(m) => GroupElement::Dihedral { rot: 0, flip: false, m: *m },
            GroupDescriptor::Symmetric(n) => GroupElement::Perm(Perm::identity(*n)),
            GroupDescriptor::Hyperoctahedral(n) | GroupDescriptor::WeylD(n) => GroupElement::Signed {
                signs: vec![0; *n],
                perm: Perm::identity(*n),
            },
            GroupDescriptor::Product(parts) => GroupElement::Product(parts.iter().map(GroupDescriptor::identity).collect()),
        }
    }

    /// A generating set; for `S_n` these are the Coxeter generators in order.
    pub fn generators(&self) -> Vec<GroupElement> {
        match self {
            GroupDescriptor::Cyclic(r) => {
                if *r == 1 {
                    vec![]
                } else {
                    vec![GroupElement::Cyclic { k: 1, r: *r }]
                }
            }
            GroupDescriptor::Dihedral(m) => vec![
                GroupElement::Dihedral { rot: 1 % m, flip: false, m: *m },
                GroupElement::Dihedral { rot: 0, flip: true, m: *m },
            ],
            GroupDescriptor::Symmetric(n) => (1..*n)
                .map(|i| GroupElement::Perm(Perm::simple(*n, i).expect("valid generator")))
                .collect(),
            GroupDescriptor::Hyperoctahedral(n) => {
                let mut gens = signed_simple(*n);
                let mut signs = vec![0; *n];
                signs[0] = 1;
                gens.push(GroupElement::Signed { signs, perm: Perm::identity(*n) });
                gens
            }
            GroupDescriptor::WeylD(n) => {
                let mut gens = signed_simple(*n);
                if *n >= 2 {
                    let mut signs = vec![0; *n];
                    signs[0] = 1;
                    signs[1] = 1;
                    gens.push(GroupElement::Signed {
                        signs,
                        perm: Perm::simple(*n, 1).expect("n >= 2"),
                    });
                }
                gens
            }
            GroupDescriptor::Product(parts) => {
                let ids: Vec<GroupElement> = parts.iter().map(GroupDescriptor::identity).collect();
                let mut gens = Vec::new();
                for (k, part) in parts.iter().enumerate() {
                    for g in part.generators() {
                        let mut v = ids.clone();
                        v[k] = g;
                        gens.push(GroupElement::Product(v));
                    }
                }
                gens
            }
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        match (self, x) {
            (GroupDescriptor::Cyclic(r), GroupElement::Cyclic { k, r: r2 }) => r == r2 && k < r,
            (GroupDescriptor::Dihedral(m), GroupElement::Dihedral { rot, m: m2, .. }) => m == m2 && rot < m,
            (GroupDescriptor::Symmetric(n), GroupElement::Perm(p)) => p.degree() == *n,
            (GroupDescriptor::Hyperoctahedral(n), GroupElement::Signed { signs, perm }) => {
                signs.len() == *n && perm.degree() == *n && signs.iter().all(|&c| c < 2)
            }
            (GroupDescriptor::WeylD(n), GroupElement::Signed { signs, perm }) => {
                signs.len() == *n
                    && perm.degree() == *n
                    && signs.iter().all(|&c| c < 2)
                    && signs.iter().map(|&c| c as usize).sum::<usize>() % 2 == 0
            }
            (GroupDescriptor::Product(parts), GroupElement::Product(xs)) => {
                parts.len() == xs.len() && parts.iter().zip(xs).all(|(g, x)| g.contains(x))
            }
            _ => false,
        }
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(CoreError::InvalidInput(format!("{x} is not an element of {}", self.name())))
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupDescriptor::Cyclic(r), GroupElement::Cyclic { k: x, .. }, GroupElement::Cyclic { k: y, .. }) => {
                GroupElement::Cyclic { k: (x + y) % r, r: *r }
            }
            (
                GroupDescriptor::Dihedral(m),
                GroupElement::Dihedral { rot: a1, flip: f1, .. },
                GroupElement::Dihedral { rot: a2, flip: f2, .. },
            ) => {
                // r^a s^f r^b = r^(a + (-1)^f b) s^f
                let b = if *f1 { (m - a2) % m } else { *a2 };
                GroupElement::Dihedral { rot: (a1 + b) % m, flip: f1 ^ f2, m: *m }
            }
            (GroupDescriptor::Symmetric(_), GroupElement::Perm(p), GroupElement::Perm(q)) => GroupElement::Perm(p.compose(q)),
            (
                GroupDescriptor::Hyperoctahedral(_) | GroupDescriptor::WeylD(_),
                GroupElement::Signed { signs: a, perm: s },
                GroupElement::Signed { signs: b, perm: t },
            ) => {
                // (a, s)(b, t) = (a + s(b), s t) with s(b)_i = b_{s^-1(i)}
                let sinv = s.inverse();
                let signs = (0..a.len())
                    .map(|i| (a[i] + b[sinv.zero_based()[i] as usize]) % 2)
                    .collect();
                GroupElement::Signed { signs, perm: s.compose(t) }
            }
            (GroupDescriptor::Product(parts), GroupElement::Product(xs), GroupElement::Product(ys)) => GroupElement::Product(
                parts
                    .iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(g, (x, y))| g.mul_unchecked(x, y))
                    .collect(),
            ),
            _ => unreachable!("element kinds checked by caller"),
        }
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        Ok(self.inverse_unchecked(x))
    }

    pub(crate) fn inverse_unchecked(&self, x: &GroupElement) -> GroupElement {
        match (self, x) {
            (GroupDescriptor::Cyclic(r), GroupElement::Cyclic { k, .. }) => GroupElement::Cyclic { k: (r - k) % r, r: *r },
            (GroupDescriptor::Dihedral(m), GroupElement::Dihedral { rot, flip, .. }) => {
                if *flip {
                    x.clone()
                } else {
                    GroupElement::Dihedral { rot: (m - rot) % m, flip: false, m: *m }
                }
            }
            (GroupDescriptor::Symmetric(_), GroupElement::Perm(p)) => GroupElement::Perm(p.inverse()),
            (GroupDescriptor::Hyperoctahedral(_) | GroupDescriptor::WeylD(_), GroupElement::Signed { signs, perm }) => {
                // (a, s)^-1 = (s^-1(a), s^-1)
                let signs = (0..signs.len()).map(|i| signs[perm.zero_based()[i] as usize]).collect();
                GroupElement::Signed { signs, perm: perm.inverse() }
            }
            (GroupDescriptor::Product(parts), GroupElement::Product(xs)) => {
                GroupElement::Product(parts.iter().zip(xs).map(|(g, x)| g.inverse_unchecked(x)).collect())
            }
            _ => unreachable!("element kinds checked by caller"),
        }
    }

    /// All elements, sorted, found by closure of the generators.  Fails if the
    /// order exceeds `budget`.
    pub fn elements(&self, budget: u128) -> Result<Vec<GroupElement>> {
        self.validate()?;
        check_budget("group enumeration", self.order(), budget)?;
        let gens = self.generators();
        let id = self.identity();
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.mul_unchecked(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<GroupElement> = seen.into_iter().collect();
        out.sort();
        if out.len() as u128 != self.order() {
            return Err(CoreError::RelationFailure(format!(
                "{} generated {} elements, expected {}",
                self.name(),
                out.len(),
                self.order()
            )));
        }
        Ok(out)
    }

    /// Conjugacy classes, each sorted, listed in order of their least element.
    pub fn conjugacy_classes(&self, budget: u128) -> Result<Vec<Vec<GroupElement>>> {
        let elements = self.elements(budget)?;
        let gens = self.generators();
        let gen_invs: Vec<GroupElement> = gens.iter().map(|g| self.inverse_unchecked(g)).collect();
        let index: HashMap<&GroupElement, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for (g, gi) in gens.iter().zip(&gen_invs) {
                    let y = self.mul_unchecked(&self.mul_unchecked(g, &elements[i]), gi);
                    let j = index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members.into_iter().map(|i| elements[i].clone()).collect());
        }
        Ok(classes)
    }

    /// Parse an element in the notation used by `Display`.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        let bad = || CoreError::InvalidInput(format!("cannot parse {text:?} as an element of {}", self.name()));
        let x = match self {
            GroupDescriptor::Cyclic(r) => {
                let k = text.strip_prefix("x^").and_then(|k| k.parse::<u32>().ok()).ok_or_else(bad)?;
                GroupElement::Cyclic { k, r: *r }
            }
            GroupDescriptor::Dihedral(m) => {
                let (rot, flip) = match text.strip_suffix("*s") {
                    Some(r) => (r, true),
                    None => (text, false),
                };
                let rot = rot.strip_prefix("r^").and_then(|k| k.parse::<u32>().ok()).ok_or_else(bad)?;
                GroupElement::Dihedral { rot, flip, m: *m }
            }
            GroupDescriptor::Symmetric(n) => GroupElement::Perm(Perm::parse(text, *n)?),
            GroupDescriptor::Hyperoctahedral(n) | GroupDescriptor::WeylD(n) => {
                let (signs, perm) = text.split_once('|').ok_or_else(bad)?;
                let signs = signs
                    .trim()
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(bad)?
                    .split(',')
                    .map(|c| c.trim().parse::<u8>().map_err(|_| bad()))
                    .collect::<Result<Vec<u8>>>()?;
                GroupElement::Signed { signs, perm: Perm::parse(perm, *n)? }
            }
            GroupDescriptor::Product(_) => return Err(bad()),
        };
        self.check(&x)?;
        Ok(x)
    }
}

fn signed_simple(n: usize) -> Vec<GroupElement> {
    (1..n)
        .map(|i| GroupElement::Signed {
            signs: vec![0; n],
            perm: Perm::simple(n, i).expect("valid generator"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_classes() {
        for (g, classes) in [
            (GroupDescriptor::Symmetric(3), 3),
            (GroupDescriptor::Cyclic(4), 4),
            (GroupDescriptor::Hyperoctahedral(2), 5),
            (GroupDescriptor::Dihedral(4), 5),
            (GroupDescriptor::WeylD(3), 5),
        ] {
            assert_eq!(g.elements(ENUMERATION_BUDGET).unwrap().len() as u128, g.order());
            assert_eq!(g.conjugacy_classes(ENUMERATION_BUDGET).unwrap().len(), classes, "{}", g.name());
        }
    }

    #[test]
    fn wreath_rule() {
        let g = GroupDescriptor::Hyperoctahedral(2);
        let a = g.parse_element("(1,0)|()").unwrap();
        let s = g.parse_element("(0,0)|(1,2)").unwrap();
        // sigma moves the sign at position 1 to position 2
        assert_eq!(g.mul(&s, &a).unwrap(), g.parse_element("(0,1)|(1,2)").unwrap());
        assert_eq!(g.mul(&a, &s).unwrap(), g.parse_element("(1,0)|(1,2)").unwrap());
        assert!(GroupDescriptor::WeylD(2).parse_element("(1,0)|()").is_err());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            GroupDescriptor::Symmetric(9).elements(1000),
            Err(CoreError::BudgetExceeded { .. })
        ));
    }
}
