use serde::Serialize;
use sepdeform_scalar::{parse_ratfunc, Cyclotomic, Integer, Laurent, Rat, Ring, UniPoly, ZLaurent};

use crate::algebra::{Algebra, Element, Tensor};
use crate::error::{check_budget, CoreError, Result};

/// `(p, m)` with `r = p^m`, or `None`.
pub fn prime_power(r: usize) -> Option<(usize, u32)> {
    if r < 2 {
        return None;
    }
    let p = (2..=r).find(|d| r.is_multiple_of(*d))?;
    let mut m = 0;
    let mut k = r;
    while k.is_multiple_of(p) {
        k /= p;
        m += 1;
    }
    (k == 1).then_some((p, m))
}

/// `x^r - t x - 1` over `Z[t]`.
pub fn cyclic_polynomial(r: usize) -> Result<UniPoly<ZLaurent>> {
    if r < 2 {
        return Err(CoreError::InvalidInput(format!("cyclic deformation needs r >= 2, got {r}")));
    }
    let mut coeffs = vec![ZLaurent::zero(); r + 1];
    coeffs[0] = ZLaurent::from_i64(-1);
    coeffs[1] = coeffs[1].sub(&Laurent::var('t'));
    coeffs[r] = ZLaurent::one();
    Ok(UniPoly::new(coeffs, 'x'))
}

/// `Z[x, t]/(x^r - t x - 1)`.
pub fn cyclic_deformation(r: usize) -> Result<Algebra<ZLaurent>> {
    Algebra::quotient(format!("Z[x,t]/(x^{r}-tx-1)"), &cyclic_polynomial(r)?)
}

/// The same structure constants over the fraction field.
pub fn to_rational(alg: &Algebra<ZLaurent>) -> Result<Algebra<Rat>> {
    alg.map_scalars(format!("{} over Q(vars)", alg.name()), |c| Ok(Rat::from_laurent(c.clone())))
}

/// Structure constants with every variable set to zero, as integers.
pub fn at_origin(alg: &Algebra<ZLaurent>, vars: &[char]) -> Result<Algebra<Integer>> {
    let bindings: Vec<(char, ZLaurent)> = vars.iter().map(|&v| (v, ZLaurent::zero())).collect();
    alg.map_scalars(format!("{} at 0", alg.name()), |c| {
        let v = c.specialize_laurent(&bindings)?;
        v.as_constant()
            .ok_or_else(|| CoreError::InvalidInput(format!("{c} keeps variables after specialization")))
    })
}

/// Whether `alg` has exactly the structure constants of `k[x]/(x^r - 1)`
/// (equivalently of `kC_r` on the basis `1, x, ..., x^{r-1}`).
pub fn is_cyclic_group_table<R: Ring>(alg: &Algebra<R>) -> bool {
    let r = alg.dim();
    (0..r).all(|i| (0..r).all(|j| alg.basis_product(i, j) == [((i + j) % r, R::one())]))
}

fn check_prime_power<const R: usize>() -> Result<(usize, u32)> {
    prime_power(R).ok_or_else(|| CoreError::InvalidInput(format!("{R} is not a prime power")))
}

type CycLaurent<const R: usize> = Laurent<Cyclotomic<R>>;

fn eta<const R: usize>(k: i64) -> CycLaurent<R> {
    Laurent::constant(Cyclotomic::root_power(k))
}

fn linear<const R: usize>(root: CycLaurent<R>) -> UniPoly<CycLaurent<R>> {
    UniPoly::new(vec![root.neg(), CycLaurent::<R>::one()], 'x')
}

/// `Π_{i=0}^{r-1} (x - η^i (1 + t))` over `(Z[η]/Φ_r)[t]`.
pub fn split_cyclic_polynomial<const R: usize>() -> Result<UniPoly<CycLaurent<R>>> {
    check_prime_power::<R>()?;
    let one_t = CycLaurent::<R>::one().add(&Laurent::var('t'));
    Ok(UniPoly::product((0..R as i64).map(|i| linear(eta::<R>(i).mul(&one_t))), 'x'))
}

pub fn split_cyclic_deformation<const R: usize>() -> Result<Algebra<CycLaurent<R>>> {
    Algebra::quotient(format!("O[x,t]/f, r={R}"), &split_cyclic_polynomial::<R>()?)
}

/// The symmetric polynomial: for odd `p`, `Π_{|i| <= (r-1)/2} (x - η^i q^i)`;
/// for `p = 2`, `(x - q)(x - q^-1) Π_{i=1}^{r/2-1} (x - q^{2i} η^i)(x - q^{-2i} η^{-i})`.
pub fn symmetric_dihedral_polynomial<const R: usize>() -> Result<UniPoly<CycLaurent<R>>> {
    let (p, _) = check_prime_power::<R>()?;
    let r = R as i64;
    let q = |e: i64| -> CycLaurent<R> { Laurent::var_pow('q', e as i32) };
    let factors: Vec<UniPoly<CycLaurent<R>>> = if p == 2 {
        let mut f = vec![linear(q(1)), linear(q(-1))];
        for i in 1..r / 2 {
            f.push(linear(q(2 * i).mul(&eta::<R>(i))));
            f.push(linear(q(-2 * i).mul(&eta::<R>(-i))));
        }
        f
    } else {
        let h = (r - 1) / 2;
        (-h..=h).map(|i| linear(q(i).mul(&eta::<R>(i)))).collect()
    };
    Ok(UniPoly::product(factors, 'x'))
}

/// `f(x) = (-x)^r f(x^-1)`, i.e. `f_{r-k} = (-1)^r f_k`.
pub fn is_symmetric<R: Ring>(f: &UniPoly<R>) -> bool {
    let Some(r) = f.degree() else { return false };
    (0..=r).all(|k| {
        let c = f.coefficient(k);
        let mirrored = if r % 2 == 1 { c.neg() } else { c };
        f.coefficient(r - k) == mirrored
    })
}

#[derive(Clone, Debug)]
pub struct SymmetricDihedral<const R: usize> {
    pub polynomial: UniPoly<CycLaurent<R>>,
    pub algebra: Algebra<CycLaurent<R>>,
    /// Images of the basis `1, x, ..., x^{r-1}` under `x -> x^-1`.
    pub involution: Vec<Element<CycLaurent<R>>>,
    /// Whether `q = 1` gives `x^r - 1`.
    pub base_point_is_group_algebra: bool,
}

/// The symmetric deformation with its involution `x -> x^-1`, checked to be
/// an algebra automorphism of order two.
pub fn symmetric_dihedral_deformation<const R: usize>() -> Result<SymmetricDihedral<R>> {
    let f = symmetric_dihedral_polynomial::<R>()?;
    if !is_symmetric(&f) {
        return Err(CoreError::RelationFailure(format!("{f} is not symmetric under x -> 1/x")));
    }
    let algebra = Algebra::quotient(format!("O[q,q^-1][x]/f, r={R}"), &f)?;
    // f = x g(x) + f_0 with f_0 = ±1, so x^-1 = -g(x) / f_0
    let f0 = f.coefficient(0);
    let sign = if f0.is_one() {
        CycLaurent::<R>::one().neg()
    } else if f0.neg().is_one() {
        CycLaurent::<R>::one()
    } else {
        return Err(CoreError::RelationFailure(format!("constant term {f0} is not ±1")));
    };
    let x_inv = algebra.element((0..R).map(|k| (k, f.coefficient(k + 1).mul(&sign))))?;
    let involution: Vec<Element<CycLaurent<R>>> = (0..R as u32).map(|k| x_inv.pow(k)).collect();
    if !algebra.basis(1).mul(&x_inv)?.eq(&algebra.unit()) {
        return Err(CoreError::RelationFailure("x * x^-1 is not 1".into()));
    }
    let apply = |y: &Element<CycLaurent<R>>| -> Result<Element<CycLaurent<R>>> {
        y.terms().try_fold(algebra.zero(), |acc, (k, c)| acc.add(&involution[k].scale(c)))
    };
    for i in 0..R {
        if apply(&involution[i])? != algebra.basis(i) {
            return Err(CoreError::RelationFailure("x -> x^-1 does not square to the identity".into()));
        }
        for j in 0..R {
            let lhs = apply(&algebra.basis(i).mul(&algebra.basis(j))?)?;
            if lhs != involution[i].mul(&involution[j])? {
                return Err(CoreError::RelationFailure("x -> x^-1 is not multiplicative".into()));
            }
        }
    }
    let at_one = f
        .coefficients()
        .iter()
        .map(|c| c.specialize_laurent(&[('q', CycLaurent::<R>::one())]))
        .collect::<Result<Vec<_>, _>>()?;
    let mut target = vec![CycLaurent::<R>::zero(); R + 1];
    target[0] = CycLaurent::<R>::one().neg();
    target[R] = CycLaurent::<R>::one();
    let base_point_is_group_algebra = at_one == target;
    Ok(SymmetricDihedral { polynomial: f, algebra, involution, base_point_is_group_algebra })
}

/// A separability idempotent with cleared denominators: `E = S e` where
/// `e = Σ_k e_k ⊗ e_k` for the Lagrange idempotents `e_k` of the roots.
#[derive(Clone, Debug)]
pub struct ClearedIdempotent<const R: usize> {
    pub algebra: Algebra<CycLaurent<R>>,
    pub element: Tensor<CycLaurent<R>>,
    /// `S = Π_k c_k^2`, `c_k = Π_{j != k} (a_k - a_j)`.
    pub scale: CycLaurent<R>,
    /// `S` equals the square of the discriminant of the polynomial.
    pub scale_is_discriminant_squared: bool,
    /// `μ(E) = S`.
    pub unit: bool,
    /// `a E = E a` for every basis element `a`.
    pub central: bool,
    /// `E E = S E` in `A ⊗ A^op`, via `P_k P_l = δ_kl c_k P_k` for the
    /// Lagrange numerators `P_k`, since `E = Σ_k (S / c_k^2) P_k ⊗ P_k`.
    pub idempotent: bool,
}

impl<const R: usize> ClearedIdempotent<R> {
    pub fn ok(&self) -> bool {
        self.unit && self.central && self.idempotent
    }
}

fn cleared_idempotent<const R: usize>(f: &UniPoly<CycLaurent<R>>, roots: &[CycLaurent<R>]) -> Result<ClearedIdempotent<R>> {
    let algebra = Algebra::quotient(format!("O[x]/f, r={R}"), f)?;
    let x = algebra.basis(1);
    let one = algebra.unit();
    let mut numerators = Vec::with_capacity(roots.len());
    let mut c = Vec::with_capacity(roots.len());
    for (k, a) in roots.iter().enumerate() {
        let mut p = one.clone();
        let mut ck = CycLaurent::<R>::one();
        for (j, b) in roots.iter().enumerate() {
            if j != k {
                p = p.mul(&x.sub(&one.scale(b))?)?;
                ck = ck.mul(&a.sub(b));
            }
        }
        numerators.push(p);
        c.push(ck);
    }
    let parts = vec![algebra.clone(), algebra.clone()];
    let mut element = Tensor::zero(parts);
    for k in 0..roots.len() {
        let w = (0..roots.len()).filter(|&l| l != k).fold(CycLaurent::<R>::one(), |acc, l| acc.mul(&c[l]));
        let term = Tensor::pure(&[numerators[k].clone(), numerators[k].clone()]).scale(&w.mul(&w));
        element = element.add(&term)?;
    }
    let prod = c.iter().fold(CycLaurent::<R>::one(), |acc, ck| acc.mul(ck));
    let scale = prod.mul(&prod);
    let scale_is_discriminant_squared = f.discriminant().is_ok_and(|d| d.mul(&d) == scale);
    let unit = element.multiply_out()? == one.scale(&scale);
    let mut central = true;
    for i in 0..algebra.dim() {
        let a = algebra.basis(i);
        central &= element.act_left(&a, 0)? == element.act_right(&a, 1)?;
    }
    let mut idempotent = true;
    for (k, pk) in numerators.iter().enumerate() {
        for (l, pl) in numerators.iter().enumerate() {
            let want = if k == l { pk.scale(&c[k]) } else { algebra.zero() };
            idempotent &= pk.mul(pl)? == want;
        }
    }
    Ok(ClearedIdempotent { algebra, element, scale, scale_is_discriminant_squared, unit, central, idempotent })
}

/// The cleared idempotent of the split form, roots `η^i (1 + t)`.
pub fn split_cyclic_idempotent<const R: usize>() -> Result<ClearedIdempotent<R>> {
    let f = split_cyclic_polynomial::<R>()?;
    let one_t = CycLaurent::<R>::one().add(&Laurent::var('t'));
    let roots: Vec<CycLaurent<R>> = (0..R as i64).map(|i| eta::<R>(i).mul(&one_t)).collect();
    cleared_idempotent(&f, &roots)
}

/// Largest `r` for [`symmetric_dihedral_idempotent`]; coefficient growth in
/// `q` makes larger cases take minutes.
pub const MAX_SYMMETRIC_IDEMPOTENT_R: usize = 5;

/// The cleared idempotent of the symmetric form.
pub fn symmetric_dihedral_idempotent<const R: usize>() -> Result<ClearedIdempotent<R>> {
    check_budget("symmetric idempotent degree", R as u128, MAX_SYMMETRIC_IDEMPOTENT_R as u128)?;
    let f = symmetric_dihedral_polynomial::<R>()?;
    let (p, _) = check_prime_power::<R>()?;
    let r = R as i64;
    let q = |e: i64| -> CycLaurent<R> { Laurent::var_pow('q', e as i32) };
    let roots: Vec<CycLaurent<R>> = if p == 2 {
        let mut v = vec![q(1), q(-1)];
        for i in 1..r / 2 {
            v.push(q(2 * i).mul(&eta::<R>(i)));
            v.push(q(-2 * i).mul(&eta::<R>(-i)));
        }
        v
    } else {
        let h = (r - 1) / 2;
        (-h..=h).map(|i| q(i).mul(&eta::<R>(i))).collect()
    };
    cleared_idempotent(&f, &roots)
}

/// `x^3 - s x^2 + s x - 1` over `Z[s]`.
pub fn s_form_polynomial() -> UniPoly<ZLaurent> {
    let s: ZLaurent = Laurent::var('s');
    UniPoly::new(vec![ZLaurent::from_i64(-1), s.clone(), s.neg(), ZLaurent::one()], 'x')
}

fn rat(text: &str) -> Rat {
    parse_ratfunc(text).expect("fixed formula parses")
}

fn c3_tensor(alg: &Algebra<Rat>, prefactor: &str, entries: &[((usize, usize), &str)]) -> Result<Tensor<Rat>> {
    if alg.dim() != 3 {
        return Err(CoreError::InvalidInput(format!("{} is not three-dimensional", alg.name())));
    }
    let pre = rat(prefactor);
    Tensor::from_terms(
        vec![alg.clone(), alg.clone()],
        entries.iter().map(|&((i, j), c)| (vec![i, j], rat(c).mul(&pre))),
    )
}

/// The displayed idempotent for `x^3 - t x - 1` with `d = 4t^3 - 27`.
pub fn c3_t_idempotent(alg: &Algebra<Rat>) -> Result<Tensor<Rat>> {
    c3_tensor(
        alg,
        "1/(4*t^3 - 27)",
        &[
            ((0, 0), "-9 + 4*t^3"),
            ((1, 1), "2*t^2"),
            ((2, 2), "6*t"),
            ((0, 1), "6*t"),
            ((1, 0), "6*t"),
            ((0, 2), "-4*t^2"),
            ((2, 0), "-4*t^2"),
            ((1, 2), "-9"),
            ((2, 1), "-9"),
        ],
    )
}

/// The displayed idempotent for `x^3 - s x^2 + s x - 1` with
/// `Δ = (s+1)(s-3)^3`.
pub fn c3_s_idempotent(alg: &Algebra<Rat>) -> Result<Tensor<Rat>> {
    c3_tensor(
        alg,
        "1/((s + 1)*(s - 3)^3)",
        &[
            ((0, 0), "(s - 3)*(s^3 - 3*s^2 + s + 3)"),
            ((1, 1), "2*s*(s - 2)*(s + 1)*(s - 3)"),
            ((2, 2), "2*s*(s - 3)"),
            ((0, 1), "-s*(s - 2)*(s + 1)*(s - 3)"),
            ((1, 0), "-s*(s - 2)*(s + 1)*(s - 3)"),
            ((0, 2), "s*(s - 1)*(s - 3)"),
            ((2, 0), "s*(s - 1)*(s - 3)"),
            ((1, 2), "-(2*s - 3)*(s + 1)*(s - 3)"),
            ((2, 1), "-(2*s - 3)*(s + 1)*(s - 3)"),
        ],
    )
}

/// `(1/3)(1⊗1 + x⊗x^2 + x^2⊗x)`.
pub fn c3_classical_idempotent(alg: &Algebra<Rat>) -> Result<Tensor<Rat>> {
    c3_tensor(alg, "1/3", &[((0, 0), "1"), ((1, 2), "1"), ((2, 1), "1")])
}

/// Expansion of the symmetric `r = 3` polynomial as `x^3 - s x^2 + s' x - 1`.
#[derive(Clone, Debug, Serialize)]
pub struct SFormReport {
    /// `s` read off the `x^2` coefficient.
    pub s: String,
    /// The `x` coefficient.
    pub s_linear: String,
    /// Whether the polynomial has the shape `x^3 - s x^2 + s x - 1`.
    pub has_s_shape: bool,
    /// The value `ω^2 (q^-1 - q^3)` for comparison.
    pub stated_s: String,
    pub matches_stated: bool,
}

pub fn s_form_report() -> Result<SFormReport> {
    let f = symmetric_dihedral_polynomial::<3>()?;
    let s = f.coefficient(2).neg();
    let s_linear = f.coefficient(1);
    let has_s_shape = f.coefficient(3).is_one() && f.coefficient(0).neg().is_one() && s == s_linear;
    let w2 = eta::<3>(2);
    let stated = w2.mul(&Laurent::var_pow('q', -1).sub(&Laurent::var_pow('q', 3)));
    Ok(SFormReport {
        s: s.to_string(),
        s_linear: s_linear.to_string(),
        has_s_shape,
        stated_s: stated.to_string(),
        matches_stated: stated == s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
    }

    #[test]
    fn cubic_reductions() {
        let a = cyclic_deformation(3).unwrap();
        assert_eq!(a.basis(2).mul(&a.basis(1)).unwrap().to_string(), "1 + t*x");
        assert_eq!(a.basis(2).mul(&a.basis(2)).unwrap().to_string(), "x + t*x^2");
        assert!(is_cyclic_group_table(&at_origin(&a, &['t']).unwrap()));
    }

    #[test]
    fn split_base_point() {
        let f = split_cyclic_polynomial::<3>().unwrap();
        let at0: Vec<_> = f
            .coefficients()
            .iter()
            .map(|c| c.specialize_laurent(&[('t', Laurent::zero())]).unwrap().to_string())
            .collect();
        assert_eq!(at0, vec!["-1", "0", "0", "1"]);
        assert_eq!(f.coefficient(0).to_string(), "-t^3 - 3*t^2 - 3*t - 1");
        let f2 = split_cyclic_polynomial::<2>().unwrap();
        assert_eq!(f2.coefficient(1).to_string(), "0");
    }

    #[test]
    fn cleared_idempotents() {
        let s3 = split_cyclic_idempotent::<3>().unwrap();
        assert!(s3.ok() && s3.scale_is_discriminant_squared);
        let s4 = split_cyclic_idempotent::<4>().unwrap();
        assert!(s4.ok());
        let d5 = symmetric_dihedral_idempotent::<5>().unwrap();
        assert!(d5.ok() && d5.scale_is_discriminant_squared);
        assert!(symmetric_dihedral_idempotent::<2>().unwrap().ok());
    }

    #[test]
    fn symmetric_forms() {
        let d3 = symmetric_dihedral_deformation::<3>().unwrap();
        assert!(d3.base_point_is_group_algebra);
        let d4 = symmetric_dihedral_deformation::<4>().unwrap();
        assert!(!d4.base_point_is_group_algebra);
        let rep = s_form_report().unwrap();
        assert!(rep.has_s_shape);
        assert!(!rep.matches_stated);
    }
}
