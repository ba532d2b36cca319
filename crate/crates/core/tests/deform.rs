use sepdeform_core::deform::{
    c3_s_idempotent, c3_t_idempotent, cyclic_deformation, cyclic_polynomial, deformed_action, deformed_c2_idempotents,
    section11_matrices, section3_build, split_cyclic_polynomial, symmetric_dihedral_deformation, to_rational,
    Section3Recipe,
};
use sepdeform_core::algebra::Algebra;
use sepdeform_core::separability::verify_idempotent;
use sepdeform_scalar::{parse_laurent, parse_ratfunc, Integer, UniPoly, ZLaurent};

fn l(text: &str) -> ZLaurent {
    parse_laurent(text).unwrap()
}

#[test]
fn discriminants() {
    assert_eq!(cyclic_polynomial(3).unwrap().discriminant().unwrap(), l("4*t^3 - 27"));
    assert_eq!(cyclic_polynomial(2).unwrap().discriminant().unwrap(), l("t^2 + 4"));
    let s = l("s");
    let sform = UniPoly::new(vec![l("-1"), s.clone(), l("-s"), l("1")], 'x');
    assert_eq!(sform.discriminant().unwrap(), l("(s + 1)*(s - 3)^3"));
    assert_eq!(l("4*t^3 - 27").reduce_mod::<3>().to_string(), "t^3");
}

#[test]
fn cubic_products() {
    let a = cyclic_deformation(3).unwrap();
    let x2 = a.basis(2);
    assert_eq!(x2.mul(&a.basis(1)).unwrap().to_string(), "1 + t*x");
    assert_eq!(x2.mul(&x2).unwrap().to_string(), "x + t*x^2");
}

#[test]
fn displayed_idempotents() {
    let a = to_rational(&cyclic_deformation(3).unwrap()).unwrap();
    assert!(verify_idempotent(&a, &c3_t_idempotent(&a).unwrap()).unwrap().all());
    let s = l("s");
    let sform = UniPoly::new(vec![l("-1"), s.clone(), l("-s"), l("1")], 'x');
    let b = to_rational(&Algebra::quotient("s-form", &sform).unwrap()).unwrap();
    assert!(verify_idempotent(&b, &c3_s_idempotent(&b).unwrap()).unwrap().all());
}

#[test]
fn split_forms() {
    let f3 = split_cyclic_polynomial::<3>().unwrap();
    assert_eq!(f3.coefficient(0).to_string(), l("-(1 + t)^3").to_string());
    let f2 = split_cyclic_polynomial::<2>().unwrap();
    assert_eq!(f2.coefficient(0).to_string(), "-t^2 - 2*t - 1");
    assert!(symmetric_dihedral_deformation::<3>().unwrap().base_point_is_group_algebra);
    assert!(symmetric_dihedral_deformation::<5>().unwrap().base_point_is_group_algebra);
}

#[test]
fn c2_idempotents() {
    let (_, checks) = deformed_c2_idempotents().unwrap();
    assert!(checks.all());
}

#[test]
fn section3_recipes() {
    let (_, q) = section3_build(Section3Recipe::Quadratic, false).unwrap();
    assert!(q.passed());
    assert_eq!(q.tempering_exponent, Some(1));
    let (_, h) = section3_build(Section3Recipe::Hecke, false).unwrap();
    assert_eq!(h.tempering_exponent, Some(2));
}

#[test]
fn section11_values() {
    let r = section11_matrices().unwrap();
    assert!(r.y_inverse_matches && r.p23_commutes_with_y);
    let entry = parse_ratfunc::<Integer>("2*(q^3 + q)/(1 + q^2)^2").unwrap().to_string();
    assert_eq!(r.p24_conjugate[2][3], entry);
    assert_eq!(r.mismatches.len(), 1);
    assert_eq!((r.mismatches[0].row, r.mismatches[0].col), (4, 4));
    assert!(r.mod2_then_t0_is_n && r.q1_limit_is_p34);
    assert!(r.w_conjugates_p23 && r.w_conjugates_n_to_p34 && r.s3_relations);
}

#[test]
fn general_action() {
    for n in 1..=3 {
        let (_, rep) = deformed_action(n).unwrap();
        assert!(rep.coxeter_relations && rep.factor_permutations_undeformed && rep.q1_monomial, "n = {n}");
    }
}
