//! Replays the checked-in fuzz corpus through the properties the fuzz
//! targets assert, so the seeds run under the ordinary test harness.

use std::fs;
use std::path::PathBuf;

use sepdeform_core::algebra::AlgebraSpec;
use sepdeform_core::group::GroupDescriptor;
use sepdeform_core::hecke::Hecke;
use sepdeform_scalar::{parse_laurent, parse_ratfunc, Integer, Laurent, RationalFunction};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds in {}", dir.display());
    files.into_iter().map(|p| fs::read(p).unwrap()).collect()
}

fn text(data: &[u8]) -> &str {
    std::str::from_utf8(data).unwrap()
}

#[test]
fn laurent_seeds() {
    let mut parsed = 0;
    for s in seeds("parse_laurent") {
        if let Ok(p) = parse_laurent::<Integer>(text(&s)) {
            let again: Laurent<Integer> = parse_laurent(&p.to_string()).unwrap();
            assert_eq!(again, p);
            parsed += 1;
        }
    }
    assert!(parsed >= 8);
}

#[test]
fn ratfunc_seeds() {
    let mut parsed = 0;
    for s in seeds("parse_ratfunc") {
        if let Ok(f) = parse_ratfunc::<Integer>(text(&s)) {
            let again: RationalFunction<Integer> = parse_ratfunc(&f.to_string()).unwrap();
            assert_eq!(again, f);
            parsed += 1;
        }
    }
    assert!(parsed >= 7);
}

#[test]
fn group_element_seeds() {
    let mut parsed = 0;
    for s in seeds("group_element") {
        let (&tag, rest) = s.split_first().unwrap();
        let n = (tag as usize >> 3) % 8 + 1;
        let group = match tag % 5 {
            0 => GroupDescriptor::Cyclic(n as u32),
            1 => GroupDescriptor::Dihedral(n as u32),
            2 => GroupDescriptor::Symmetric(n),
            3 => GroupDescriptor::Hyperoctahedral(n),
            _ => GroupDescriptor::WeylD(n),
        };
        if let Ok(g) = group.parse_element(text(rest)) {
            assert_eq!(group.parse_element(&g.to_string()).unwrap(), g);
            assert_eq!(group.mul(&g, &group.inverse(&g).unwrap()).unwrap(), group.identity());
            parsed += 1;
        }
    }
    assert!(parsed >= 8);
}

#[test]
fn hecke_word_seeds() {
    let mut parsed = 0;
    for s in seeds("hecke_word") {
        let (&tag, rest) = s.split_first().unwrap();
        let h = Hecke::generic(tag as usize % 5 + 1).unwrap();
        parsed += usize::from(h.parse(text(rest)).is_ok());
    }
    assert!(parsed >= 7);
}

#[test]
fn algebra_spec_seeds() {
    let mut built = 0;
    for s in seeds("algebra_spec") {
        if let Ok(spec) = AlgebraSpec::from_json(text(&s)) {
            assert_eq!(AlgebraSpec::from_json(&spec.to_json()).unwrap(), spec);
            built += usize::from(spec.build().is_ok());
        }
    }
    assert!(built >= 4);
}
