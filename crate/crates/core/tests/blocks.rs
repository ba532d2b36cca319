use std::collections::HashSet;

use sepdeform_core::blocks::{
    dn_orbit_data, index_orbits, middle_orbit_check, literal_middle_dimension, matrix_unit_check, partition_count,
    qbn_blocks, qdn_blocks, smash_decompose, symmetric_degrees, symmetric_wreath_c2, wreath_decompose,
};
use sepdeform_core::group::{ActionHom, GroupDescriptor, GroupElement, ENUMERATION_BUDGET};

/// Class count by direct conjugation, independent of the kernel's own
/// class enumeration.
fn brute_force_classes(g: &GroupDescriptor) -> usize {
    let elems = g.elements(ENUMERATION_BUDGET).unwrap();
    let inverses: Vec<GroupElement> = elems.iter().map(|x| g.inverse(x).unwrap()).collect();
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut classes = 0;
    for x in &elems {
        if seen.contains(x) {
            continue;
        }
        classes += 1;
        for (y, yi) in elems.iter().zip(&inverses) {
            seen.insert(g.mul(&g.mul(y, x).unwrap(), yi).unwrap());
        }
    }
    classes
}

fn sorted(mut v: Vec<u128>) -> Vec<u128> {
    v.sort_unstable();
    v
}

#[test]
fn qbn_matches_class_counts() {
    for n in 1..=4 {
        let d = qbn_blocks(n).unwrap();
        assert!(d.audit);
        assert_eq!(d.block_count, Some(brute_force_classes(&GroupDescriptor::Hyperoctahedral(n))), "n = {n}");
    }
    for n in 5..=10 {
        assert!(qbn_blocks(n).unwrap().audit);
    }
}

#[test]
fn qb2_has_three_summands() {
    let d = qbn_blocks(2).unwrap();
    let dims: Vec<u128> = d.summands.iter().map(|s| s.dimension).collect();
    assert_eq!(sorted(dims), vec![2, 2, 4]);
    assert_eq!(d.total, 8);
    assert_eq!(d.block_count, Some(5));
}

#[test]
fn qdn_matches_class_counts() {
    for n in 3..=5 {
        let d = qdn_blocks(n).unwrap();
        assert!(d.audit, "n = {n}");
        assert_eq!(d.block_count, Some(brute_force_classes(&GroupDescriptor::WeylD(n))), "n = {n}");
    }
}

#[test]
fn qd3_is_qs4() {
    let d = qdn_blocks(3).unwrap();
    assert_eq!(d.degrees, Some(vec![1, 1, 2, 3, 3]));
    assert_eq!(d.degrees, Some(sorted(symmetric_degrees(4))));
    assert_eq!(d.total, 24);
}

#[test]
fn qd4_totals() {
    let d = qdn_blocks(4).unwrap();
    assert_eq!(d.total, 192);
    let dims: Vec<u128> = d.summands.iter().map(|s| s.dimension).collect();
    assert_eq!(sorted(dims), vec![24, 72, 96]);
    let middle = d.summands.iter().find(|s| s.expansion.is_some()).unwrap();
    assert_eq!((middle.matrix_size, middle.isotropy.order), (3, 8));
    assert_eq!(qdn_blocks(5).unwrap().total, 1920);
}

#[test]
fn middle_block_follows_the_wreath_count() {
    // two copies of S_r(λ)⊗S_r(λ) per λ, not one copy of S_r(λ)
    let w = symmetric_wreath_c2(3).unwrap();
    assert!(w.audit);
    assert_eq!(w.total, 72);
    assert_eq!(literal_middle_dimension(3), 48);
    assert_eq!(literal_middle_dimension(2), 8);
}

#[test]
fn partition_counts() {
    let p: Vec<u128> = (0..=10).map(partition_count).collect();
    assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for n in 1..=7 {
        let fact: u128 = (1..=n as u128).product();
        assert_eq!(symmetric_degrees(n).iter().map(|d| d * d).sum::<u128>(), fact);
    }
}

#[test]
fn smash_examples() {
    // C2 swapping the middle two of the four idempotents ee, ef, fe, ff
    let swap = ActionHom::new(GroupDescriptor::Cyclic(2), 4, vec![vec![0, 2, 1, 3]]).unwrap();
    let d = smash_decompose(&swap).unwrap();
    let mut shape: Vec<(u128, u128)> = d.summands.iter().map(|s| (s.matrix_size, s.isotropy.order)).collect();
    shape.sort_unstable();
    assert_eq!(shape, vec![(1, 2), (1, 2), (2, 1)]);
    assert!(d.audit);
    let regular = ActionHom::new(GroupDescriptor::Cyclic(3), 3, vec![vec![1, 2, 0]]).unwrap();
    let d = smash_decompose(&regular).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert_eq!((d.summands[0].matrix_size, d.summands[0].isotropy.order), (3, 1));
}

#[test]
fn wreath_examples() {
    let single = wreath_decompose(&[4], 3, &GroupDescriptor::Symmetric(3)).unwrap();
    assert_eq!(single.summands.len(), 1);
    assert_eq!(single.total, 4u128.pow(3) * 6);
    let qs2 = wreath_decompose(&[1, 1], 2, &GroupDescriptor::Cyclic(2)).unwrap();
    assert_eq!(qs2.total, 8);
    assert_eq!(qs2.summands.len(), 3);
    let orbits = index_orbits(2, 4, &GroupDescriptor::Symmetric(4)).unwrap();
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.size).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 4, 4, 6]);
}

#[test]
fn orbit_data() {
    // the action is trivial for n = 1, so the orbit formulas do not apply
    assert!(!dn_orbit_data(1).unwrap().ok);
    for n in 2..=8 {
        let d = dn_orbit_data(n).unwrap();
        assert!(d.ok, "n = {n}");
        let fact: u128 = (1..=n as u128 + 1).product();
        assert!(d.orbits.iter().all(|o| o.stabilizer_order * o.size as u128 == fact));
    }
    let d2 = dn_orbit_data(2).unwrap();
    let top = d2.orbits.iter().find(|o| o.m == 2).unwrap();
    assert_eq!((top.size, top.stabilizer_order), (1, 6));
    let d3 = dn_orbit_data(3).unwrap();
    let mid = d3.orbits.iter().find(|o| o.middle).unwrap();
    assert_eq!((mid.size, mid.stabilizer_order), (3, 8));
    assert_eq!(mid.isotropy_type, "S2≀C2");
}

#[test]
fn rho_identities() {
    let expected = [8, 72, 1152];
    for r in 1..=3 {
        let c = middle_orbit_check(r).unwrap();
        assert!(c.ok, "r = {r}");
        assert_eq!(c.stabilizer_order, expected[r - 1]);
    }
    assert!(middle_orbit_check(4).is_err());
}

#[test]
fn explicit_matrix_units() {
    let off = matrix_unit_check(&[1, 1], &[0, 1], &GroupDescriptor::Cyclic(2)).unwrap();
    assert!(off.ok);
    assert_eq!(off.orbit_size, 2);
    let diag = matrix_unit_check(&[2], &[0, 0], &GroupDescriptor::Cyclic(2)).unwrap();
    assert!(diag.ok);
    assert_eq!((diag.orbit_size, diag.isotropy_order), (1, 2));
    for idx in [[0, 0, 0], [0, 0, 1], [0, 1, 1]] {
        let c = matrix_unit_check(&[1, 1], &idx, &GroupDescriptor::Symmetric(3)).unwrap();
        assert!(c.ok, "{idx:?}");
    }
    let cyc = matrix_unit_check(&[1, 1], &[0, 0, 1], &GroupDescriptor::Cyclic(3)).unwrap();
    assert!(cyc.ok);
    assert_eq!(cyc.orbit_size, 3);
}
