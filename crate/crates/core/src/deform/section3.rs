//! The two-stage deformation of `F_2[C_2 ≀ C_2]`.
//!
//! Stage one deforms each `C_2` factor so that `F_2 C_2` splits into two
//! orthogonal idempotents `e, f`.  Stage two deforms the summands fixed by
//! the swap: `[(I)σ]^2 = u (I)σ + (1 + u) I` for `I = e⊗e, f⊗f`.

use serde::Serialize;
use sepdeform_scalar::{Domain, Field, Laurent, RationalFunction, Ring, Zp};

use crate::algebra::{Algebra, Element};
use crate::error::{CoreError, Result};
use crate::group::GroupDescriptor;
use crate::linalg::Matrix;
use crate::separability::{solve_idempotent, SolveOutcome};

pub type F2 = Zp<2>;
pub type F2Poly = Laurent<F2>;
pub type F2Rat = RationalFunction<F2>;

/// How the factor `F_2 C_2` is deformed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section3Recipe {
    /// `a^2 = t a + 1 + t`, `e = (1 + a)/t`.
    Quadratic,
    /// `a^2 = (q - q^-1) a + 1` with `q = 1 + t`, `e = (1 + q a)/(1 + q^2)`.
    Hecke,
}

fn t() -> F2Rat {
    F2Rat::var('t')
}

fn q() -> F2Rat {
    F2Rat::one().add(&t())
}

fn inv(x: &F2Rat) -> F2Rat {
    x.inv().expect("nonzero by construction")
}

impl Section3Recipe {
    /// `(c_0, c_1)` with `a^2 = c_1 a + c_0`.
    pub fn relation(self) -> (F2Rat, F2Rat) {
        match self {
            Section3Recipe::Quadratic => (F2Rat::one().add(&t()), t()),
            Section3Recipe::Hecke => (F2Rat::one(), q().sub(&inv(&q()))),
        }
    }

    /// Coordinates of `e` in the basis `1, a`.
    pub fn idempotent_e(self) -> [F2Rat; 2] {
        match self {
            Section3Recipe::Quadratic => [inv(&t()), inv(&t())],
            Section3Recipe::Hecke => {
                let d = inv(&F2Rat::one().add(&q().mul(&q())));
                [d.clone(), q().mul(&d)]
            }
        }
    }

    /// Denominators allowed besides the deformation parameters: none for
    /// the quadratic recipe, powers of `q = 1 + t` for the Hecke recipe.
    fn allowed_denominator(self) -> Option<F2Poly> {
        match self {
            Section3Recipe::Quadratic => None,
            Section3Recipe::Hecke => Some(F2Poly::one().add(&Laurent::var('t'))),
        }
    }
}

const BASE: [&str; 2] = ["1", "a"];
const IDEM: [&str; 2] = ["e", "f"];

fn labels(names: [&str; 2]) -> Vec<String> {
    (0..8)
        .map(|k| {
            let (s, i, j) = (k / 4, (k % 4) / 2, k % 2);
            let pure = format!("{}⊗{}", names[i], names[j]);
            match (s, i, j) {
                (0, _, _) => pure,
                (_, 0, 0) if names == BASE => "σ".into(),
                _ => format!("({pure})σ"),
            }
        })
        .collect()
}

fn swap(i: usize) -> usize {
    (i % 2) * 2 + i / 2
}

/// The algebra on the basis `(x⊗y)σ^k` with `x, y ∈ {e, f}`, index
/// `4k + 2x + y`.  Requires `u` among the scalars.
pub fn idempotent_basis_algebra(u: &F2Rat) -> Result<Algebra<F2Rat>> {
    let one_u = F2Rat::one().add(u);
    let mut table = Vec::with_capacity(64);
    for p in 0..8 {
        for r in 0..8 {
            let (k, i) = (p / 4, p % 4);
            let (l, j) = (r / 4, r % 4);
            let moved = if k == 1 { swap(j) } else { j };
            let entry = if moved != i {
                vec![]
            } else if k == 1 && l == 1 && swap(i) == i {
                vec![(4 + i, u.clone()), (i, one_u.clone())]
            } else {
                vec![(((k + l) % 2) * 4 + i, F2Rat::one())]
            };
            table.push(entry);
        }
    }
    let unit = (0..4).map(|i| (i, F2Rat::one())).collect();
    Algebra::new("A≀C2 (idempotent basis)", labels(IDEM), table, unit)
}

/// Columns are the idempotent basis in the coordinates `(b_i⊗b_j)σ^k`.
pub fn change_of_basis(recipe: Section3Recipe) -> Matrix<F2Rat> {
    let e = recipe.idempotent_e();
    let f = [F2Rat::one().add(&e[0]), e[1].clone()];
    let m = Matrix::from_rows(vec![vec![e[0].clone(), f[0].clone()], vec![e[1].clone(), f[1].clone()]])
        .expect("2x2");
    let m2 = m.kron(&m);
    let mut t = Matrix::zeros(8, 8);
    for ((r, c), x) in m2.entries() {
        t[(r, c)] = x.clone();
        t[(r + 4, c + 4)] = x.clone();
    }
    t
}

/// The deformed algebra on the original basis `(b_i⊗b_j)σ^k`, `b = 1, a`.
pub fn original_basis_algebra(recipe: Section3Recipe, u: &F2Rat) -> Result<(Algebra<F2Rat>, Algebra<F2Rat>)> {
    let idem = idempotent_basis_algebra(u)?;
    let t_mat = change_of_basis(recipe);
    let t_inv = t_mat
        .inverse()
        .ok_or_else(|| CoreError::RelationFailure("change of basis is singular".into()))?;
    let to_idem = |p: usize| -> Result<Element<F2Rat>> { idem.from_dense(&(0..8).map(|r| t_inv[(r, p)].clone()).collect::<Vec<_>>()) };
    let mut table = Vec::with_capacity(64);
    for p in 0..8 {
        let x = to_idem(p)?;
        for r in 0..8 {
            let prod = x.mul(&to_idem(r)?)?.to_dense();
            table.push(
                (0..8)
                    .map(|row| (row, (0..8).fold(F2Rat::zero(), |acc, c| acc.add(&t_mat[(row, c)].mul(&prod[c])))))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
        }
    }
    let orig = Algebra::new(format!("F2(t,u)[C2≀C2], {recipe:?}"), labels(BASE), table, vec![(0, F2Rat::one())])?;
    Ok((idem, orig))
}

/// Whether `c` lies in `F_2[t, v]`, after also allowing `allowed` in the
/// denominator.
fn integral(c: &F2Rat, allowed: Option<&F2Poly>) -> bool {
    let mut den = c.den().clone();
    if let Some(a) = allowed {
        while let Some(rest) = den.exact_div(a) {
            den = rest;
        }
    }
    den.as_constant().is_some() && c.num().is_polynomial()
}

#[derive(Clone, Debug, Serialize)]
pub struct Section3Report {
    pub recipe: Section3Recipe,
    /// `σ*σ = (e+f)⊗(e+f) + u(e⊗e + f⊗f)(1 + σ)` in the idempotent basis.
    pub sigma_square_idempotent_basis: bool,
    /// `σ*σ` on the original basis, as computed.
    pub sigma_square: String,
    /// `σ*σ - 1⊗1` equals `t^-1 u (a⊗1 + 1⊗a + t 1⊗1)(1 + σ)` (quadratic
    /// recipe) or `t^-2 u (q a⊗1 + q 1⊗a + t^2 1⊗1)(1 + σ)` (Hecke).
    pub sigma_square_display: bool,
    /// Matrix-unit relations for `e⊗f, f⊗e, (e⊗f)σ, (f⊗e)σ`.
    pub matrix_units: bool,
    /// Smallest `k` such that `u = t^k v` makes every structure constant
    /// integral.
    pub tempering_exponent: Option<u32>,
    /// The structure constants after that substitution do not involve
    /// negative powers (or, for the Hecke recipe, denominators other than
    /// powers of `1 + t`).
    pub integral: bool,
    /// At `t = 0` (hence `u = 0`) the table is that of `F_2[C_2 ≀ C_2]`.
    pub base_point_is_group_algebra: bool,
    /// Solver verdict over `F_2(t, v)` with generators `a⊗1, 1⊗a, σ`.
    pub separable: Option<bool>,
    pub idempotent_denominator: Option<String>,
}

/// The original-basis algebra with `u = t^k v`, over `F_2(t, v)`.
pub fn two_parameter_algebra(recipe: Section3Recipe, k: u32) -> Result<Algebra<F2Rat>> {
    let u = t().pow(k).mul(&F2Rat::var('v'));
    let (_, orig) = original_basis_algebra(recipe, &u)?;
    Ok(orig)
}

fn sigma_square_checks(recipe: Section3Recipe) -> Result<(bool, String, bool, bool)> {
    let u = F2Rat::var('u');
    let (idem, orig) = original_basis_algebra(recipe, &u)?;
    let sigma_i = idem.element((4..8).map(|i| (i, F2Rat::one())))?;
    let diag = idem.element([(0, F2Rat::one()), (3, F2Rat::one())])?;
    let one_plus_sigma = idem.unit().add(&sigma_i)?;
    let expected = idem.unit().add(&diag.mul(&one_plus_sigma)?.scale(&u))?;
    let in_idem = sigma_i.mul(&sigma_i)? == expected;

    let sigma = orig.basis(4);
    let square = sigma.mul(&sigma)?;
    // 1⊗a is index 1, a⊗1 is index 2
    let inner = match recipe {
        Section3Recipe::Quadratic => orig.element([(1, F2Rat::one()), (2, F2Rat::one()), (0, t())])?.scale(&u.mul(&inv(&t()))),
        Section3Recipe::Hecke => orig
            .element([(1, q()), (2, q()), (0, t().mul(&t()))])?
            .scale(&u.mul(&inv(&t().mul(&t())))),
    };
    let display = orig.unit().add(&inner.mul(&orig.unit().add(&sigma)?)?)?;
    let in_orig = square == display;

    let e = |i: usize| idem.basis(i);
    let units = [[e(1), e(5)], [e(6), e(2)]];
    let mut matrix_units = true;
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    let prod = units[a][b].mul(&units[c][d])?;
                    let want = if b == c { units[a][d].clone() } else { idem.zero() };
                    matrix_units &= prod == want;
                }
            }
        }
    }
    let sum = units[0][0].add(&units[1][1])?;
    matrix_units &= sum.mul(&units[0][1])? == units[0][1] && units[1][0].mul(&sum)? == units[1][0];
    Ok((in_idem, square.to_string(), in_orig, matrix_units))
}

fn group_table_matches(alg: &Algebra<F2Rat>) -> Result<bool> {
    // C2 ≀ C2 = B2, with `b_i⊗b_j` the sign vector `(i, j)`
    let g = GroupDescriptor::Hyperoctahedral(2);
    let a1 = g.parse_element("(0,1)|()")?;
    let a2 = g.parse_element("(1,0)|()")?;
    let s = g.parse_element("(0,0)|(1,2)")?;
    let idx = |k: usize| -> Result<crate::group::GroupElement> {
        let mut x = g.identity();
        if k % 4 / 2 == 1 {
            x = g.mul(&x, &a2)?;
        }
        if k % 2 == 1 {
            x = g.mul(&x, &a1)?;
        }
        if k / 4 == 1 {
            x = g.mul(&x, &s)?;
        }
        Ok(x)
    };
    let elements = (0..8).map(idx).collect::<Result<Vec<_>>>()?;
    let zero = [('t', F2Rat::zero()), ('v', F2Rat::zero()), ('u', F2Rat::zero())];
    for i in 0..8 {
        for j in 0..8 {
            let target = g.mul(&elements[i], &elements[j])?;
            let k = elements.iter().position(|x| *x == target).expect("closed");
            let got: Vec<(usize, F2Rat)> = alg
                .basis_product(i, j)
                .iter()
                .map(|(l, c)| Ok((*l, c.specialize(&zero)?)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if got != [(k, F2Rat::one())] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds and audits the deformation; the solver step is skipped when
/// `solve` is false.
pub fn section3_build(recipe: Section3Recipe, solve: bool) -> Result<(Algebra<F2Rat>, Section3Report)> {
    let (sigma_square_idempotent_basis, sigma_square, sigma_square_display, matrix_units) = sigma_square_checks(recipe)?;
    let allowed = recipe.allowed_denominator();
    let mut tempering_exponent = None;
    for k in 0..=4 {
        let alg = two_parameter_algebra(recipe, k)?;
        let ok = (0..64).all(|ij| alg.basis_product(ij / 8, ij % 8).iter().all(|(_, c)| integral(c, allowed.as_ref())));
        if ok {
            tempering_exponent = Some(k);
            break;
        }
    }
    let k = tempering_exponent.unwrap_or(1);
    let alg = two_parameter_algebra(recipe, k)?;
    let integral = tempering_exponent.is_some();
    let base_point_is_group_algebra = integral && group_table_matches(&alg)?;
    let (separable, idempotent_denominator) = if solve {
        let gens = [alg.basis(2), alg.basis(1), alg.basis(4)];
        match solve_idempotent(&alg, &gens)? {
            SolveOutcome::Separable(c) => (Some(true), Some(c.denominator.to_string())),
            SolveOutcome::Inconsistent => (Some(false), None),
        }
    } else {
        (None, None)
    };
    let report = Section3Report {
        recipe,
        sigma_square_idempotent_basis,
        sigma_square,
        sigma_square_display,
        matrix_units,
        tempering_exponent,
        integral,
        base_point_is_group_algebra,
        separable,
        idempotent_denominator,
    };
    Ok((alg, report))
}

impl Section3Report {
    pub fn passed(&self) -> bool {
        self.sigma_square_idempotent_basis
            && self.sigma_square_display
            && self.matrix_units
            && self.integral
            && self.base_point_is_group_algebra
            && self.separable != Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_recipe_is_tempered_by_t() {
        let (_, rep) = section3_build(Section3Recipe::Quadratic, false).unwrap();
        assert!(rep.sigma_square_idempotent_basis && rep.sigma_square_display && rep.matrix_units);
        assert_eq!(rep.tempering_exponent, Some(1));
        assert!(rep.base_point_is_group_algebra);
    }

    #[test]
    fn hecke_recipe_needs_t_squared() {
        let (_, rep) = section3_build(Section3Recipe::Hecke, false).unwrap();
        assert!(rep.sigma_square_display && rep.matrix_units);
        assert_eq!(rep.tempering_exponent, Some(2));
        assert!(rep.base_point_is_group_algebra);
    }

    #[test]
    fn solver_certifies_quadratic_recipe() {
        let (_, rep) = section3_build(Section3Recipe::Quadratic, true).unwrap();
        assert_eq!(rep.separable, Some(true));
    }
}
