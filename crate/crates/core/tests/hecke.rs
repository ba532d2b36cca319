use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepdeform_core::algebra::Algebra;
use sepdeform_core::group::{GroupDescriptor, Perm, ENUMERATION_BUDGET};
use sepdeform_core::hecke::{specialize_q1, Hecke};
use sepdeform_scalar::quantum::{quantum_factorial, quantum_integer};
use sepdeform_scalar::{parse_laurent, Integer, ZLaurent};

fn l(text: &str) -> ZLaurent {
    parse_laurent(text).unwrap()
}

#[test]
fn quantum_numbers() {
    let q = l("q");
    let q2 = l("q^2");
    assert_eq!(quantum_integer(2, &q2), l("1 + q^2"));
    assert_eq!(quantum_integer(3, &q), l("1 + q + q^2"));
    assert_eq!(quantum_factorial(2, &q2), l("1 + q^2"));
    assert_eq!(quantum_factorial(3, &q2), l("(1 + q^2)*(1 + q^2 + q^4)"));
}

#[test]
fn rules_in_h3() {
    let h = Hecke::generic(3).unwrap();
    let s1 = h.parse("s1").unwrap();
    let s1s2 = h.parse("s1 s2").unwrap();
    let gap = l("q - q^-1");
    assert_eq!(h.multiply(&s1, &s1).unwrap(), h.one().add(&s1.scale(&gap)).unwrap());
    let expected = s1s2.scale(&gap).add(&h.parse("s2").unwrap()).unwrap();
    assert_eq!(h.multiply(&s1, &s1s2).unwrap(), expected);
}

#[test]
fn lengths_add_on_random_pairs() {
    let h = Hecke::generic(4).unwrap();
    let perms = h.permutations().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 50 {
        let v = &perms[rng.gen_range(0..24)];
        let w = &perms[rng.gen_range(0..24)];
        let vw = v.compose(w);
        if vw.coxeter_length() != v.coxeter_length() + w.coxeter_length() {
            continue;
        }
        let prod = h.multiply(&h.basis(v).unwrap(), &h.basis(w).unwrap()).unwrap();
        assert_eq!(prod, h.basis(&vw).unwrap());
        checked += 1;
    }
}

#[test]
fn q_one_is_the_group_ring() {
    let h = Hecke::generic(3).unwrap();
    let (zs3, elems) = Algebra::<Integer>::group_algebra(&GroupDescriptor::Symmetric(3), ENUMERATION_BUDGET).unwrap();
    for v in &elems {
        for w in &elems {
            let (pv, pw): (&Perm, &Perm) = (v.as_perm().unwrap(), w.as_perm().unwrap());
            let got = specialize_q1(&h.multiply(&h.basis(pv).unwrap(), &h.basis(pw).unwrap()).unwrap(), &zs3).unwrap();
            let want = zs3.basis(zs3.index_of(&pv.compose(pw).to_string()).unwrap());
            assert_eq!(got, want);
        }
    }
}
