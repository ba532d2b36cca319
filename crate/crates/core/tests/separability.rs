use sepdeform_core::algebra::{Algebra, Tensor};
use sepdeform_core::group::{GroupDescriptor, Perm, ENUMERATION_BUDGET};
use sepdeform_core::hecke::Hecke;
use sepdeform_core::separability::{
    classical_group_idempotent, denominator_support, solve_idempotent, verify_idempotent, SolveOutcome,
};
use sepdeform_scalar::{parse_laurent, FractionField, Integer, Rat, Ring, Zp};

#[test]
fn matrix_algebra_certificates() {
    let m2 = Algebra::<Rat>::matrix(2).unwrap();
    // Σ_i e_i1 ⊗ e_1i
    let e = Tensor::from_terms(vec![m2.clone(), m2.clone()], [(vec![0, 0], Rat::one()), (vec![2, 1], Rat::one())]).unwrap();
    assert!(verify_idempotent(&m2, &e).unwrap().all());
    let gens: Vec<_> = (0..4).map(|i| m2.basis(i)).collect();
    let cert = solve_idempotent(&m2, &gens).unwrap();
    assert!(cert.certificate().unwrap().flags.all());
}

#[test]
fn classical_s3() {
    let (qs3, elems) = Algebra::<Rat>::group_algebra(&GroupDescriptor::Symmetric(3), ENUMERATION_BUDGET).unwrap();
    let e = classical_group_idempotent(&qs3, &elems).unwrap();
    assert!(verify_idempotent(&qs3, &e).unwrap().all());
}

#[test]
fn modular_c2_is_inseparable() {
    let (f2c2, _) = Algebra::<Zp<2>>::group_algebra(&GroupDescriptor::Cyclic(2), ENUMERATION_BUDGET).unwrap();
    let gens = vec![f2c2.basis(1)];
    assert!(matches!(solve_idempotent(&f2c2, &gens).unwrap(), SolveOutcome::Inconsistent));
}

#[test]
fn h2_denominator() {
    let (alg, _) = Hecke::generic(2).unwrap().to_algebra(|c| Ok(Rat::from_domain(c))).unwrap();
    let s = alg.index_of(&format!("T{}", Perm::simple(2, 1).unwrap())).unwrap();
    let out = solve_idempotent(&alg, &[alg.basis(s)]).unwrap();
    let cert = out.certificate().unwrap();
    let sup = denominator_support(&cert.denominator, &[parse_laurent("1 + q^2").unwrap()]);
    assert_eq!(sup.cofactor, "1");
    assert!(sup.divides_power.is_some());
}

#[test]
fn integer_scalars_verify() {
    let m3 = Algebra::<Integer>::matrix(3).unwrap();
    let e = Tensor::from_terms(
        vec![m3.clone(), m3.clone()],
        (0..3).map(|i| (vec![i * 3, i], Integer::from(1))),
    )
    .unwrap();
    assert!(verify_idempotent(&m3, &e).unwrap().all());
}
