use sepdeform_core::group::strings::{theorem12_operator, theorem12_verify, BitString};
use sepdeform_core::group::{orbit_stabilizer, ActionHom, GroupDescriptor, Perm, ENUMERATION_BUDGET};

#[test]
fn lengths_and_words() {
    let w0 = Perm::parse("(1,3)", 3).unwrap();
    assert_eq!(w0.coxeter_length(), 3);
    let word = w0.reduced_word();
    assert!(word == [1, 2, 1] || word == [2, 1, 2]);
    assert_eq!(Perm::from_word(3, &word).unwrap(), w0);
    let w4 = Perm::from_images(&[4, 3, 2, 1]).unwrap();
    assert_eq!(w4.reduced_word().len(), 6);
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = [
        GroupDescriptor::Symmetric(3),
        GroupDescriptor::Symmetric(4),
        GroupDescriptor::Hyperoctahedral(2),
        GroupDescriptor::Hyperoctahedral(3),
        GroupDescriptor::WeylD(4),
        GroupDescriptor::Dihedral(4),
    ]
    .iter()
    .map(|g| g.conjugacy_classes(ENUMERATION_BUDGET).unwrap().len())
    .collect();
    assert_eq!(counts, vec![3, 5, 5, 10, 13, 5]);
}

#[test]
fn element_notation_round_trips() {
    let b2 = GroupDescriptor::Hyperoctahedral(2);
    for x in b2.elements(ENUMERATION_BUDGET).unwrap() {
        assert_eq!(b2.parse_element(&x.to_string()).unwrap(), x);
    }
    assert!(b2.parse_element("(0,1)|(1,2,3)").is_err());
    let s4 = GroupDescriptor::Symmetric(4);
    for x in s4.elements(ENUMERATION_BUDGET).unwrap() {
        assert_eq!(s4.parse_element(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn natural_orbit() {
    let s3 = GroupDescriptor::Symmetric(3);
    let images: Vec<Vec<u32>> = s3
        .generators()
        .iter()
        .map(|g| (0..3).map(|i| g.as_perm().unwrap().apply(i + 1) as u32 - 1).collect())
        .collect();
    let act = ActionHom::new(s3, 3, images).unwrap();
    let (orbit, stab) = orbit_stabilizer(&act, 0, ENUMERATION_BUDGET).unwrap();
    assert_eq!((orbit.len(), stab.len()), (3, 2));
}

fn bits(entries: &[u8]) -> BitString {
    BitString::from_entries(entries).unwrap()
}

#[test]
fn complement_operators() {
    assert_eq!(theorem12_operator(2, 2, &bits(&[0, 0])).unwrap(), bits(&[0, 0]));
    assert_eq!(theorem12_operator(2, 2, &bits(&[0, 1])).unwrap(), bits(&[1, 1]));
    assert_eq!(theorem12_operator(2, 1, &bits(&[1, 0])).unwrap(), bits(&[1, 1]));
}

#[test]
fn faithfulness() {
    assert!(!theorem12_verify(1).unwrap().faithful);
    let c2 = theorem12_verify(2).unwrap();
    assert!(c2.faithful);
    assert_eq!(c2.image_order, Some(6));
    let c3 = theorem12_verify(3).unwrap();
    assert!(c3.faithful);
    assert_eq!(c3.strings, 8);
    for n in 4..=10 {
        assert!(theorem12_verify(n).unwrap().faithful, "n = {n}");
    }
}
