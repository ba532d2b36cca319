//! Separability idempotents: `e = Σ x_i ⊗ y_i` with `Σ x_i y_i = 1` and
//! `a e = e a`, found by exact linear algebra.

use serde::Serialize;
use sepdeform_scalar::{Domain, FractionField, Integer, Rat, RationalFunction, Ring, Zp};

use crate::algebra::{Algebra, Element, Tensor};
use crate::error::{check_budget, CoreError, Result};
use crate::linalg::{solve, LinearSolution};

/// Largest number of unknowns (`dim^2`) the solver accepts.
pub const MAX_UNKNOWNS: u128 = 2500;

/// The linear system for `e = Σ c_ij b_i ⊗ b_j`; unknown `c_ij` has index
/// `i * dim + j`.  The first `dim` rows encode `μ(e) = 1`, then `dim^2` rows
/// per generator encode `(g ⊗ 1) e = e (1 ⊗ g)`.
#[derive(Clone, Debug)]
pub struct SeparabilitySystem<F> {
    pub dim: usize,
    pub generators: usize,
    pub rows: Vec<Vec<F>>,
    pub rhs: Vec<F>,
}

pub fn build_system<F: FractionField>(alg: &Algebra<F>, generators: &[Element<F>]) -> Result<SeparabilitySystem<F>> {
    let d = alg.dim();
    check_budget("separability unknowns", (d * d) as u128, MAX_UNKNOWNS)?;
    let n = d * d;
    let mut rows = Vec::with_capacity(d + generators.len() * n);
    let mut rhs = Vec::with_capacity(rows.capacity());
    for l in 0..d {
        let mut row = vec![F::zero(); n];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in alg.basis_product(i, j) {
                    if *k == l {
                        row[i * d + j] = c.clone();
                    }
                }
            }
        }
        rows.push(row);
        rhs.push(alg.unit().coeff(l));
    }
    for g in generators {
        if g.algebra() != alg {
            return Err(CoreError::DescriptorMismatch("generator from another algebra".into()));
        }
        let left: Vec<Vec<F>> = (0..d).map(|i| g.mul(&alg.basis(i)).map(|x| x.to_dense())).collect::<Result<_>>()?;
        let right: Vec<Vec<F>> = (0..d).map(|j| alg.basis(j).mul(g).map(|x| x.to_dense())).collect::<Result<_>>()?;
        for k in 0..d {
            for l in 0..d {
                let mut row = vec![F::zero(); n];
                // (g b_i) ⊗ b_j contributes at (k, j = l)
                for i in 0..d {
                    row[i * d + l].add_assign_ref(&left[i][k]);
                }
                // b_i ⊗ (b_j g) contributes at (i = k, l)
                for j in 0..d {
                    row[k * d + j].sub_assign_ref(&right[j][l]);
                }
                rows.push(row);
                rhs.push(F::zero());
            }
        }
    }
    Ok(SeparabilitySystem { dim: d, generators: generators.len(), rows, rhs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// `Σ x_i y_i = 1`
    pub unit: bool,
    /// `a e = e a` for every basis element `a`
    pub central: bool,
    /// `e e = e` in `A ⊗ A^op`
    pub idempotent: bool,
}

impl Flags {
    pub fn all(&self) -> bool {
        self.unit && self.central && self.idempotent
    }
}

pub fn verify_idempotent<R: Ring>(alg: &Algebra<R>, e: &Tensor<R>) -> Result<Flags> {
    if e.arity() != 2 || e.parts().iter().any(|p| p != alg) {
        return Err(CoreError::DescriptorMismatch("e must lie in A ⊗ A".into()));
    }
    let unit = e.multiply_out()? == alg.unit();
    let mut central = true;
    for i in 0..alg.dim() {
        let a = alg.basis(i);
        if e.act_left(&a, 0)? != e.act_right(&a, 1)? {
            central = false;
            break;
        }
    }
    let idempotent = e.mul_twisted(e, &[false, true])? == *e;
    Ok(Flags { unit, central, idempotent })
}

/// A verified separability idempotent.
#[derive(Clone, Debug)]
pub struct IdempotentCertificate<F: FractionField> {
    pub element: Tensor<F>,
    pub flags: Flags,
    /// Least common multiple of the coefficient denominators.
    pub denominator: F::Domain,
    /// Unknowns left free by the echelon form (set to zero).
    pub free_unknowns: usize,
    pub rows: usize,
}

#[derive(Clone, Debug)]
pub enum SolveOutcome<F: FractionField> {
    Separable(IdempotentCertificate<F>),
    /// No separability idempotent over the field.
    Inconsistent,
}

impl<F: FractionField> SolveOutcome<F> {
    pub fn certificate(&self) -> Option<&IdempotentCertificate<F>> {
        match self {
            SolveOutcome::Separable(c) => Some(c),
            SolveOutcome::Inconsistent => None,
        }
    }
}

/// Solves for a separability idempotent using centrality with respect to
/// `generators` only, after checking that they generate `alg`.
pub fn solve_idempotent<F: FractionField>(alg: &Algebra<F>, generators: &[Element<F>]) -> Result<SolveOutcome<F>> {
    let span = alg.generated_span_dim(generators)?;
    if span != alg.dim() {
        return Err(CoreError::NotGenerating { span, dim: alg.dim() });
    }
    let system = build_system(alg, generators)?;
    let d = system.dim;
    match solve(&system.rows, &system.rhs) {
        LinearSolution::Inconsistent => Ok(SolveOutcome::Inconsistent),
        LinearSolution::Consistent { values, free } => {
            let parts = vec![alg.clone(), alg.clone()];
            let element = Tensor::from_terms(parts, values.iter().enumerate().map(|(k, c)| (vec![k / d, k % d], c.clone())))?;
            let flags = verify_idempotent(alg, &element)?;
            if !flags.all() {
                return Err(CoreError::RelationFailure(format!("solver output fails verification: {flags:?}")));
            }
            let denominator = F::common_denominator(&values);
            Ok(SolveOutcome::Separable(IdempotentCertificate {
                element,
                flags,
                denominator,
                free_unknowns: free.len(),
                rows: system.rows.len(),
            }))
        }
    }
}

/// Least common denominator of the coefficients of `e`.
pub fn tensor_denominator<F: FractionField>(e: &Tensor<F>) -> F::Domain {
    let coeffs: Vec<F> = e.terms().map(|(_, c)| c.clone()).collect();
    F::common_denominator(&coeffs)
}

#[derive(Clone, Debug, Serialize)]
pub struct DenominatorReport {
    pub lcm: String,
    /// Multiplicity of each reference factor in the lcm.
    pub factors: Vec<(String, u32)>,
    /// What remains after dividing out the reference factors.
    pub cofactor: String,
    /// Smallest `k` with `lcm | reference^k`, if found.
    pub divides_power: Option<u32>,
}

/// Factors `den` against the given reference factors and decides whether it
/// divides a power of their product.
pub fn denominator_support<D: Domain>(den: &D, reference_factors: &[D]) -> DenominatorReport {
    let mut rest = den.clone();
    let mut factors = Vec::new();
    for f in reference_factors {
        let mut k = 0;
        if !f.is_unit() && !f.is_zero() {
            while let Some(q) = rest.exact_div(f) {
                rest = q;
                k += 1;
            }
        }
        factors.push((f.to_string(), k));
    }
    let reference = reference_factors.iter().fold(D::one(), |acc, f| acc.mul(f));
    let divides_power = if rest.is_unit() {
        Some(factors.iter().map(|(_, k)| *k).max().unwrap_or(0))
    } else {
        let mut power = reference.clone();
        (1..=8u32).find(|_| {
            let ok = power.exact_div(&rest).is_some();
            power = power.mul(&reference);
            ok
        })
        .map(|k| k.max(factors.iter().map(|(_, e)| *e).max().unwrap_or(0)))
    };
    DenominatorReport {
        lcm: den.to_string(),
        factors,
        cofactor: rest.to_string(),
        divides_power,
    }
}

/// A rational algebra and idempotent reduced to `F_p(vars)`, with the flags
/// of the reduced idempotent; fails if some coefficient has a pole mod `p`.
#[allow(clippy::type_complexity)]
pub fn reduce_mod<const P: u64>(
    alg: &Algebra<Rat>,
    e: &Tensor<Rat>,
) -> Result<(Algebra<RationalFunction<Zp<P>>>, Tensor<RationalFunction<Zp<P>>>, Flags)> {
    let red = |c: &Rat| -> Result<RationalFunction<Zp<P>>> { Ok(c.reduce_mod::<P>()?) };
    let alg_p = alg.map_scalars(format!("{} mod {P}", alg.name()), red)?;
    let e_p = e.transport(vec![alg_p.clone(), alg_p.clone()], red)?;
    let flags = verify_idempotent(&alg_p, &e_p)?;
    Ok((alg_p, e_p, flags))
}

/// `(1/|G|) Σ g ⊗ g^-1` in a rational group algebra whose basis is the
/// sorted group elements.
pub fn classical_group_idempotent(alg: &Algebra<Rat>, elements: &[crate::group::GroupElement]) -> Result<Tensor<Rat>> {
    let crate::algebra::AlgebraKind::Group(g) = alg.kind() else {
        return Err(CoreError::InvalidInput(format!("{} is not a group algebra", alg.name())));
    };
    let inv_order = Rat::from_fraction(&Rat::one().numerator(), &sepdeform_scalar::ZLaurent::from_i64(elements.len() as i64))
        .expect("nonzero order");
    let mut terms = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        let xi = g.inverse(x)?;
        let j = elements.binary_search(&xi).map_err(|_| CoreError::InvalidInput("element list is not sorted".into()))?;
        terms.push((vec![i, j], inv_order.clone()));
    }
    Tensor::from_terms(vec![alg.clone(), alg.clone()], terms)
}

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_domain(&sepdeform_scalar::ZLaurent::constant(Integer::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupDescriptor;
    use sepdeform_scalar::{parse_ratfunc, UniPoly};

    #[test]
    fn rational_c3() {
        let f = UniPoly::new(vec![rat(-1), rat(0), rat(0), rat(1)], 'x');
        let a = Algebra::quotient("QC3", &f).unwrap();
        let out = solve_idempotent(&a, &[a.basis(1)]).unwrap();
        let cert = out.certificate().unwrap();
        let third: Rat = parse_ratfunc("1/3").unwrap();
        let expected = Tensor::from_terms(
            vec![a.clone(), a.clone()],
            [(vec![0, 0], third.clone()), (vec![1, 2], third.clone()), (vec![2, 1], third)],
        )
        .unwrap();
        assert_eq!(cert.element, expected);
    }

    #[test]
    fn modular_group_algebras_are_not_separable() {
        type F2 = RationalFunction<Zp<2>>;
        let (a, _) = Algebra::<F2>::group_algebra(&GroupDescriptor::Cyclic(2), 10).unwrap();
        assert!(matches!(solve_idempotent(&a, &[a.basis(1)]).unwrap(), SolveOutcome::Inconsistent));
    }

    #[test]
    fn classical_idempotent_of_s3() {
        let (a, els) = Algebra::<Rat>::group_algebra(&GroupDescriptor::Symmetric(3), 10).unwrap();
        let e = classical_group_idempotent(&a, &els).unwrap();
        assert!(verify_idempotent(&a, &e).unwrap().all());
    }

    #[test]
    fn non_generating_rejected() {
        let a = Algebra::<Rat>::matrix(2).unwrap();
        assert!(matches!(
            solve_idempotent(&a, &[a.basis(0)]),
            Err(CoreError::NotGenerating { .. })
        ));
    }
}
