//! The deformed `C_2` idempotents and the matrices of the deformed
//! `S_{n+1}` action on `(k C_2)^{⊗n}`.

use serde::Serialize;
use sepdeform_scalar::{parse_ratfunc, Rat, Ring, UniPoly, Zp};

use crate::algebra::{Algebra, Element};
use crate::error::{CoreError, Result};
use crate::group::strings::generator_images;
use crate::linalg::Matrix;

fn rat(text: &str) -> Rat {
    parse_ratfunc(text).expect("fixed formula parses")
}

/// `Q(q)[a]/(a^2 - (q - q^-1) a - 1)` with `e = (1 + q a)/(1 + q^2)` and
/// `f = (q^2 - q a)/(1 + q^2)`.
#[derive(Clone, Debug)]
pub struct C2Idempotents {
    pub algebra: Algebra<Rat>,
    pub e: Element<Rat>,
    pub f: Element<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct C2Checks {
    pub sum_is_one: bool,
    pub e_idempotent: bool,
    pub f_idempotent: bool,
    pub orthogonal: bool,
    /// `q = 1` gives `e = (1 + a)/2`, `f = (1 - a)/2`.
    pub classical_limit: bool,
}

impl C2Checks {
    pub fn all(&self) -> bool {
        self.sum_is_one && self.e_idempotent && self.f_idempotent && self.orthogonal && self.classical_limit
    }
}

pub fn deformed_c2_idempotents() -> Result<(C2Idempotents, C2Checks)> {
    let rel = UniPoly::new(vec![rat("-1"), rat("-(q - 1/q)"), Rat::one()], 'a');
    let algebra = Algebra::quotient("Q(q)C2 deformed", &rel)?;
    let e = algebra.element([(0, rat("1/(1 + q^2)")), (1, rat("q/(1 + q^2)"))])?;
    let f = algebra.element([(0, rat("q^2/(1 + q^2)")), (1, rat("-q/(1 + q^2)"))])?;
    let at_one = |x: &Element<Rat>| -> Result<Vec<Rat>> {
        x.to_dense().iter().map(|c| Ok(c.specialize(&[('q', Rat::one())])?)).collect()
    };
    let half = rat("1/2");
    let checks = C2Checks {
        sum_is_one: e.add(&f)? == algebra.unit(),
        e_idempotent: e.mul(&e)? == e,
        f_idempotent: f.mul(&f)? == f,
        orthogonal: e.mul(&f)?.is_zero() && f.mul(&e)?.is_zero(),
        classical_limit: at_one(&e)? == [half.clone(), half.clone()] && at_one(&f)? == [half.clone(), half.neg()],
    };
    if !checks.all() {
        return Err(CoreError::RelationFailure(format!("deformed C2 idempotents: {checks:?}")));
    }
    Ok((C2Idempotents { algebra, e, f }, checks))
}

/// `X = (1/(1+q^2)) [[1, q^2], [q, -q]]`: columns are `e, f` in the basis `1, a`.
pub fn x_matrix() -> Matrix<Rat> {
    Matrix::from_rows(vec![
        vec![rat("1/(1 + q^2)"), rat("q^2/(1 + q^2)")],
        vec![rat("q/(1 + q^2)"), rat("-q/(1 + q^2)")],
    ])
    .expect("2x2")
}

fn kron_power(m: &Matrix<Rat>, n: usize) -> Matrix<Rat> {
    (1..n).fold(m.clone(), |acc, _| acc.kron(m))
}

fn rows<R: Ring>(rows: &[&[R]]) -> Matrix<R> {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("rectangular")
}

fn parse_matrix(entries: &[[&str; 4]; 4], prefactor: &str) -> Matrix<Rat> {
    let pre = rat(prefactor);
    Matrix::from_rows(entries.iter().map(|r| r.iter().map(|c| rat(c).mul(&pre)).collect()).collect()).expect("4x4")
}

/// The displayed `Y^{-1}`.
pub fn displayed_y_inverse() -> Matrix<Rat> {
    parse_matrix(
        &[
            ["1", "q", "q", "q^2"],
            ["1", "-1/q", "q", "-1"],
            ["1", "q", "-1/q", "-1"],
            ["1", "-1/q", "-1/q", "1/q^2"],
        ],
        "1",
    )
}

/// The displayed `Y P_24 Y^{-1}`.
pub fn displayed_p24_conjugate() -> Matrix<Rat> {
    parse_matrix(
        &[
            ["(1 + q^2)^2", "0", "q^5 - q", "1 - q^4"],
            ["0", "(1 + q^2)^2", "1 - q^4", "q^3 - 1/q"],
            ["0", "0", "1 - q^4", "2*(q^3 + q)"],
            ["0", "0", "2*(q^3 + q)", "1 - q^4"],
        ],
        "1/(1 + q^2)^2",
    )
}

fn perm_matrix<R: Ring>(one_based_images: &[usize]) -> Matrix<R> {
    Matrix::permutation(&one_based_images.iter().map(|i| i - 1).collect::<Vec<_>>())
}

pub fn n_matrix<R: Ring>() -> Matrix<R> {
    let (o, z) = (R::one(), R::zero());
    rows(&[
        &[o.clone(), z.clone(), o.clone(), o.clone()],
        &[z.clone(), o.clone(), o.clone(), o.clone()],
        &[z.clone(), z.clone(), o.clone(), z.clone()],
        &[z.clone(), z.clone(), z.clone(), o.clone()],
    ])
}

pub fn w_matrix<R: Ring>() -> Matrix<R> {
    let (o, z) = (R::one(), R::zero());
    rows(&[
        &[o.clone(), o.clone(), o.clone(), o.clone()],
        &[z.clone(), z.clone(), o.clone(), z.clone()],
        &[z.clone(), o.clone(), z.clone(), z.clone()],
        &[z.clone(), o.clone(), o.clone(), o.clone()],
    ])
}

/// An entry where the computed and displayed matrices disagree (one-based).
#[derive(Clone, Debug, Serialize)]
pub struct EntryMismatch {
    pub matrix: &'static str,
    pub row: usize,
    pub col: usize,
    pub computed: String,
    pub displayed: String,
}

fn compare(name: &'static str, computed: &Matrix<Rat>, displayed: &Matrix<Rat>, out: &mut Vec<EntryMismatch>) -> bool {
    let before = out.len();
    for ((r, c), x) in computed.entries() {
        let y = &displayed[(r, c)];
        if x != y {
            out.push(EntryMismatch { matrix: name, row: r + 1, col: c + 1, computed: x.to_string(), displayed: y.to_string() });
        }
    }
    out.len() == before
}

fn to_strings<R: Ring>(m: &Matrix<R>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// `q -> 1`.
pub fn at_q_one(m: &Matrix<Rat>) -> Result<Matrix<Rat>> {
    m.try_map(|c| c.specialize(&[('q', Rat::one())]).map_err(CoreError::from))
}

/// `q = 1 + t`, reduce mod 2, then `t -> 0`.
pub fn mod2_then_t0(m: &Matrix<Rat>) -> Result<Matrix<Zp<2>>> {
    m.try_map(|c| {
        let c = c.specialize(&[('q', rat("1 + t"))])?.reduce_mod::<2>()?;
        let c = c.specialize(&[('t', Ring::zero())])?;
        c.as_constant()
            .ok_or_else(|| CoreError::InvalidInput(format!("{c} is not constant after t -> 0")))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Section11Report {
    pub y: Vec<Vec<String>>,
    pub y_inverse: Vec<Vec<String>>,
    pub p24_conjugate: Vec<Vec<String>>,
    pub y_inverse_matches: bool,
    pub p23_commutes_with_y: bool,
    pub p24_conjugate_matches: bool,
    pub mismatches: Vec<EntryMismatch>,
    /// `q -> 1` of the computed `Y P_24 Y^{-1}` is `P_34`.
    pub q1_limit_is_p34: bool,
    /// The same for the displayed matrix.
    pub displayed_q1_limit_is_p34: bool,
    pub mod2_then_t0: Vec<Vec<String>>,
    pub mod2_then_t0_is_n: bool,
    pub displayed_mod2_then_t0_is_n: bool,
    pub w_conjugates_p23: bool,
    pub w_conjugates_n_to_p34: bool,
    /// Images of `(1,2), (2,3)` satisfy the `S_3` relations identically in `q`.
    pub s3_relations: bool,
}

impl Section11Report {
    pub fn passed(&self) -> bool {
        self.y_inverse_matches
            && self.p23_commutes_with_y
            && self.p24_conjugate_matches
            && self.q1_limit_is_p34
            && self.mod2_then_t0_is_n
            && self.w_conjugates_p23
            && self.w_conjugates_n_to_p34
            && self.s3_relations
    }
}

fn conjugate(y: &Matrix<Rat>, m: &Matrix<Rat>, y_inv: &Matrix<Rat>) -> Result<Matrix<Rat>> {
    y.mul(m)?.mul(y_inv)
}

/// The `n = 2` computation compared with the displayed matrices.
pub fn section11_matrices() -> Result<Section11Report> {
    let y = kron_power(&x_matrix(), 2);
    let y_inv = y.inverse().ok_or_else(|| CoreError::RelationFailure("Y is singular".into()))?;
    let p23: Matrix<Rat> = perm_matrix(&[1, 3, 2, 4]);
    let p24: Matrix<Rat> = perm_matrix(&[1, 4, 3, 2]);
    let p34: Matrix<Rat> = perm_matrix(&[1, 2, 4, 3]);
    let conj = conjugate(&y, &p24, &y_inv)?;
    let mut mismatches = Vec::new();
    let y_inverse_matches = compare("Y^-1", &y_inv, &displayed_y_inverse(), &mut mismatches);
    let p24_conjugate_matches = compare("Y P24 Y^-1", &conj, &displayed_p24_conjugate(), &mut mismatches);
    let p23_commutes_with_y = p23.mul(&y)? == y.mul(&p23)?;
    let reduced = mod2_then_t0(&conj)?;
    let n2: Matrix<Zp<2>> = n_matrix();
    let w2: Matrix<Zp<2>> = w_matrix();
    let w2_inv = w2.inverse().ok_or_else(|| CoreError::RelationFailure("W is singular mod 2".into()))?;
    let p23_2: Matrix<Zp<2>> = perm_matrix(&[1, 3, 2, 4]);
    let p34_2: Matrix<Zp<2>> = perm_matrix(&[1, 2, 4, 3]);
    let a = conjugate(&y, &p23, &y_inv)?;
    let s3_relations = {
        let id = Matrix::<Rat>::identity(4);
        let aba = a.mul(&conj)?.mul(&a)?;
        let bab = conj.mul(&a)?.mul(&conj)?;
        a.mul(&a)? == id && conj.mul(&conj)? == id && aba == bab
    };
    Ok(Section11Report {
        y: to_strings(&y),
        y_inverse: to_strings(&y_inv),
        p24_conjugate: to_strings(&conj),
        y_inverse_matches,
        p23_commutes_with_y,
        p24_conjugate_matches,
        mismatches,
        q1_limit_is_p34: at_q_one(&conj)? == p34,
        displayed_q1_limit_is_p34: at_q_one(&displayed_p24_conjugate())? == p34,
        mod2_then_t0: to_strings(&reduced),
        mod2_then_t0_is_n: reduced == n2,
        displayed_mod2_then_t0_is_n: mod2_then_t0(&displayed_p24_conjugate())? == n2,
        w_conjugates_p23: conjugate_f2(&w2, &p23_2, &w2_inv)? == p23_2,
        w_conjugates_n_to_p34: conjugate_f2(&w2, &n2, &w2_inv)? == p34_2,
        s3_relations,
    })
}

fn conjugate_f2(w: &Matrix<Zp<2>>, m: &Matrix<Zp<2>>, w_inv: &Matrix<Zp<2>>) -> Result<Matrix<Zp<2>>> {
    w.mul(m)?.mul(w_inv)
}

/// Largest `n` for the general action matrices.
pub const MAX_ACTION_N: usize = 4;

/// Matrices of the Coxeter generators `s_1, ..., s_n` of `S_{n+1}` on the
/// basis of tensor words in `1, a` (first factor most significant).
#[derive(Clone, Debug)]
pub struct ActionMatrixSet {
    pub n: usize,
    /// In the basis of tensor words in `e, f`.
    pub idempotent_basis: Vec<Matrix<Rat>>,
    /// In the basis of tensor words in `1, a`.
    pub group_basis: Vec<Matrix<Rat>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionReport {
    pub n: usize,
    pub coxeter_relations: bool,
    /// `s_i` for `i < n` commute with `Y` (the factor permutations are
    /// undeformed).
    pub factor_permutations_undeformed: bool,
    /// At `q = 1` every matrix is a signed permutation matrix.
    pub q1_monomial: bool,
}

/// Index of a string (entry `i` is bit `i - 1`) in lexicographic order with
/// entry 1 most significant.
fn lex_index(n: usize, bits: u32) -> usize {
    (0..n).fold(0, |acc, i| (acc << 1) | ((bits >> i) & 1) as usize)
}

pub fn deformed_action(n: usize) -> Result<(ActionMatrixSet, ActionReport)> {
    if n == 0 || n > MAX_ACTION_N {
        return Err(CoreError::InvalidInput(format!("n = {n} outside 1..={MAX_ACTION_N}")));
    }
    let x = x_matrix();
    let x_inv = x.inverse().ok_or_else(|| CoreError::RelationFailure("X is singular".into()))?;
    let y = kron_power(&x, n);
    let y_inv = kron_power(&x_inv, n);
    if !y.mul(&y_inv)?.is_identity() {
        return Err(CoreError::RelationFailure("X^{⊗n} inverse".into()));
    }
    let size = 1usize << n;
    let idempotent_basis: Vec<Matrix<Rat>> = generator_images(n)?
        .iter()
        .map(|img| {
            let mut images = vec![0; size];
            for (p, &q) in img.iter().enumerate() {
                images[lex_index(n, p as u32)] = lex_index(n, q);
            }
            Matrix::permutation(&images)
        })
        .collect();
    let group_basis = idempotent_basis
        .iter()
        .map(|m| conjugate(&y, m, &y_inv))
        .collect::<Result<Vec<_>>>()?;
    let id = Matrix::<Rat>::identity(size);
    let order = |m: &Matrix<Rat>, k: u32| -> Result<bool> { Ok((0..k).try_fold(id.clone(), |acc, _| acc.mul(m))? == id) };
    let mut coxeter_relations = true;
    for i in 0..n {
        coxeter_relations &= order(&group_basis[i], 2)?;
        for j in i + 1..n {
            let prod = group_basis[i].mul(&group_basis[j])?;
            coxeter_relations &= order(&prod, if j == i + 1 { 3 } else { 2 })?;
        }
    }
    let mut factor_permutations_undeformed = true;
    for m in &idempotent_basis[..n - 1] {
        factor_permutations_undeformed &= m.mul(&y)? == y.mul(m)?;
    }
    let mut q1_monomial = true;
    for m in &group_basis {
        let m1 = at_q_one(m)?;
        q1_monomial &= (0..size).all(|r| m1.row(r).iter().filter(|c| !c.is_zero()).count() == 1);
    }
    let report = ActionReport { n, coxeter_relations, factor_permutations_undeformed, q1_monomial };
    Ok((ActionMatrixSet { n, idempotent_basis, group_basis }, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_idempotents() {
        let (_, checks) = deformed_c2_idempotents().unwrap();
        assert!(checks.all());
    }

    #[test]
    fn n2_report() {
        let rep = section11_matrices().unwrap();
        assert!(rep.y_inverse_matches && rep.p23_commutes_with_y);
        assert!(rep.q1_limit_is_p34 && rep.mod2_then_t0_is_n);
        assert!(rep.w_conjugates_p23 && rep.w_conjugates_n_to_p34 && rep.s3_relations);
        // the displayed (4,4) entry has the wrong sign
        assert!(!rep.p24_conjugate_matches);
        assert_eq!(rep.mismatches.len(), 1);
        assert_eq!((rep.mismatches[0].row, rep.mismatches[0].col), (4, 4));
    }

    #[test]
    fn action_relations() {
        for n in 1..=3 {
            let (_, rep) = deformed_action(n).unwrap();
            assert!(rep.coxeter_relations && rep.factor_permutations_undeformed && rep.q1_monomial, "{rep:?}");
        }
    }
}
