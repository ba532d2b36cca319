//! Multivariate gcd over `Z` and prime fields, and fraction normalization.
//!
//! Monomials are units of the Laurent ring, so every gcd here is taken
//! after removing monomial content and is normalized to a polynomial with
//! no monomial factor and a normalized leading coefficient.

use crate::laurent::Laurent;
use crate::monomial::Monomial;
use crate::ring::{Domain, GcdCoefficient, Ring};

/// Remove monomial content and scale the leading coefficient to normal form.
pub fn normalize<C: GcdCoefficient>(a: &Laurent<C>) -> Laurent<C> {
    if a.is_zero() {
        return Laurent::zero();
    }
    let stripped = a.mul_monomial(&a.monomial_content().inv());
    let u = stripped.leading_coefficient().normalizing_unit();
    stripped.scale(&u)
}

pub fn gcd<C: GcdCoefficient>(a: &Laurent<C>, b: &Laurent<C>) -> Laurent<C> {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let a = a.mul_monomial(&a.monomial_content().inv());
    let b = b.mul_monomial(&b.monomial_content().inv());
    if a.is_unit() || b.is_unit() {
        return Laurent::one();
    }
    let (va, vb) = (a.vars(), b.vars());
    if let Some(&x) = va.difference(&vb).next() {
        return gcd_with_coefficients(&a, x, b);
    }
    if let Some(&x) = vb.difference(&va).next() {
        return gcd_with_coefficients(&b, x, a);
    }
    let vars: Vec<u8> = va.union(&vb).copied().collect();
    let Some(&v) = vars.first() else {
        let g = a.constant_term().gcd(&b.constant_term());
        return normalize(&Laurent::constant(g));
    };
    if vars.len() == 1 {
        let g = dense_gcd(to_dense(&a, v), to_dense(&b, v));
        return normalize(&Laurent::from_terms(
            g.into_iter().enumerate().map(|(k, c)| (Monomial::var_pow(v, k as i32), c)),
        ));
    }
    let (da, db) = (a.max_degree_in(v), b.max_degree_in(v));
    if da == 0 {
        return gcd(&a, &content_in(&b, v));
    }
    if db == 0 {
        return gcd(&content_in(&a, v), &b);
    }
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd(&ca, &cb);
    if image_gcd_is_constant(&a, &b, v) {
        return normalize(&c);
    }
    let mut p = a.exact_div(&ca).expect("content divides");
    let mut r = b.exact_div(&cb).expect("content divides");
    if p.max_degree_in(v) < r.max_degree_in(v) {
        std::mem::swap(&mut p, &mut r);
    }
    let g = loop {
        if r.max_degree_in(v) == 0 {
            break Laurent::one();
        }
        let rem = pseudo_rem(&p, &r, v);
        if rem.is_zero() {
            break r;
        }
        p = r;
        r = primitive_part(&rem, v);
    };
    normalize(&Ring::mul(&c, &g))
}

/// Whether some specialization of the variables other than `v` preserving
/// both leading coefficients has a gcd of degree zero in `v`; the true gcd
/// then has degree zero in `v` as well.
fn image_gcd_is_constant<C: GcdCoefficient>(a: &Laurent<C>, b: &Laurent<C>, v: u8) -> bool {
    const POINTS: [i64; 6] = [2, 3, -2, 5, -3, 7];
    for (k, _) in POINTS.iter().enumerate() {
        let point = |var: u8| C::from_i64(POINTS[(k + var as usize) % POINTS.len()]);
        let (ia, ib) = (eval_others(a, v, &point), eval_others(b, v, &point));
        if ia.len() != a.max_degree_in(v) as usize + 1 || ib.len() != b.max_degree_in(v) as usize + 1 {
            continue;
        }
        return dense_gcd(ia, ib).len() == 1;
    }
    false
}

fn eval_others<C: GcdCoefficient>(a: &Laurent<C>, v: u8, point: &impl Fn(u8) -> C) -> Vec<C> {
    let mut out = vec![C::zero(); a.max_degree_in(v) as usize + 1];
    for (m, c) in a.terms() {
        let mut x = c.clone();
        for &(var, e) in m.pairs() {
            if var != v {
                x = x.mul(&point(var).pow(e as u32));
            }
        }
        out[m.exponent(v) as usize].add_assign_ref(&x);
    }
    trim(out)
}

fn to_dense<C: GcdCoefficient>(a: &Laurent<C>, v: u8) -> Vec<C> {
    let mut out = vec![C::zero(); a.max_degree_in(v) as usize + 1];
    for (m, c) in a.terms() {
        out[m.exponent(v) as usize] = c.clone();
    }
    out
}

fn trim<C: GcdCoefficient>(mut a: Vec<C>) -> Vec<C> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn dense_content<C: GcdCoefficient>(a: &[C]) -> C {
    a.iter().fold(C::zero(), |g, c| if g.is_unit() { g } else { g.gcd(c) })
}

fn dense_primitive<C: GcdCoefficient>(a: Vec<C>) -> Vec<C> {
    let c = dense_content(&a);
    if c.is_unit() && c.is_one() {
        return a;
    }
    a.iter().map(|x| x.exact_div(&c).expect("content divides")).collect()
}

/// `lc(b)^k a mod b`; over a field `lc(b)` is first scaled to one.
fn dense_prem<C: GcdCoefficient>(mut a: Vec<C>, b: &[C]) -> Vec<C> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let field = C::characteristic() != 0;
    while a.len() > db {
        let top = a.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let shift = a.len() - db;
        if field {
            let f = top.exact_div(lcb).expect("field");
            for (k, c) in b[..db].iter().enumerate() {
                a[shift + k].sub_assign_ref(&f.mul(c));
            }
        } else {
            for x in a.iter_mut() {
                *x = x.mul(lcb);
            }
            for (k, c) in b[..db].iter().enumerate() {
                a[shift + k].sub_assign_ref(&top.mul(c));
            }
        }
    }
    trim(a)
}

/// Gcd of dense univariate polynomials (constant term first), up to a unit.
fn dense_gcd<C: GcdCoefficient>(a: Vec<C>, b: Vec<C>) -> Vec<C> {
    let (a, b) = (trim(a), trim(b));
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let c = dense_content(&a).gcd(&dense_content(&b));
    let (mut p, mut r) = (dense_primitive(a), dense_primitive(b));
    if p.len() < r.len() {
        std::mem::swap(&mut p, &mut r);
    }
    while r.len() > 1 {
        let rem = dense_prem(p, &r);
        p = r;
        if rem.is_empty() {
            return p.into_iter().map(|x| x.mul(&c)).collect();
        }
        r = dense_primitive(rem);
    }
    vec![c]
}

/// Gcd of the coefficients of `a` viewed as a polynomial in `v`.
pub fn content_in<C: GcdCoefficient>(a: &Laurent<C>, v: u8) -> Laurent<C> {
    let lo = a.min_degree_in(v);
    let hi = a.max_degree_in(v);
    let mut g = Laurent::zero();
    for e in (lo..=hi).rev() {
        let c = a.coefficient_in(v, e);
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `gcd(b, content_in(a, v))` for `b` free of `v`, stopping early at a unit.
fn gcd_with_coefficients<C: GcdCoefficient>(a: &Laurent<C>, v: u8, b: Laurent<C>) -> Laurent<C> {
    let mut g = b;
    for e in (a.min_degree_in(v)..=a.max_degree_in(v)).rev() {
        let c = a.coefficient_in(v, e);
        if !c.is_zero() {
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
    }
    normalize(&g)
}

fn primitive_part<C: GcdCoefficient>(a: &Laurent<C>, v: u8) -> Laurent<C> {
    let stripped = a.mul_monomial(&a.monomial_content().inv());
    let c = content_in(&stripped, v);
    stripped.exact_div(&c).expect("content divides")
}

/// A pseudo-remainder of `a` by `b` with respect to `v`: some
/// `lc(b)^k * a - s * b` of lower `v`-degree than `b`.
fn pseudo_rem<C: GcdCoefficient>(a: &Laurent<C>, b: &Laurent<C>, v: u8) -> Laurent<C> {
    let db = b.max_degree_in(v);
    let lcb = b.coefficient_in(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.max_degree_in(v) >= db {
        let dr = r.max_degree_in(v);
        let lcr = r.coefficient_in(v, dr);
        let shift = Monomial::var_pow(v, dr - db);
        let sub = Ring::mul(&lcr, b).mul_monomial(&shift);
        r = Ring::sub(&Ring::mul(&lcb, &r), &sub);
    }
    r
}

pub fn lcm<C: GcdCoefficient>(a: &Laurent<C>, b: &Laurent<C>) -> Laurent<C> {
    if a.is_zero() || b.is_zero() {
        return Laurent::zero();
    }
    let g = gcd(a, b);
    normalize(&Ring::mul(a, b).exact_div(&g).expect("gcd divides"))
}

/// Reduce `num/den` to lowest terms with a normalized denominator.
///
/// # Panics
/// If `den` is zero.
pub fn normalize_fraction<C: GcdCoefficient>(num: Laurent<C>, den: Laurent<C>) -> (Laurent<C>, Laurent<C>) {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return (Laurent::zero(), Laurent::one());
    }
    let g = gcd(&num, &den);
    let (num, den) = if g.is_one() {
        (num, den)
    } else {
        (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
    };
    let m = den.monomial_content().inv();
    let (num, den) = (num.mul_monomial(&m), den.mul_monomial(&m));
    let u = den.leading_coefficient().normalizing_unit();
    (num.scale(&u), den.scale(&u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_laurent;
    use crate::{Integer, Zp};

    fn z(s: &str) -> Laurent<Integer> {
        parse_laurent(s).unwrap()
    }

    #[test]
    fn univariate_gcd() {
        let g = gcd(&z("q^4 - 1"), &z("q^6 - 1"));
        assert_eq!(g, z("q^2 - 1"));
        assert_eq!(gcd(&z("6*q + 6"), &z("4*q^2 - 4")), z("2*q + 2"));
    }

    #[test]
    fn bivariate_gcd() {
        let a = z("(t + v)*(t*v - 1)*(v + 2)");
        let b = z("(t + v)*(t - 1)*(v + 2)^2");
        assert_eq!(gcd(&a, &b), z("t*v + 2*t + v^2 + 2*v"));
    }

    #[test]
    fn monomials_are_units() {
        assert!(gcd(&z("q^3"), &z("q^-2 + 1")).is_one());
        let (n, d) = normalize_fraction(z("q^3 + q"), z("-q^5 - q^3"));
        assert_eq!(n, z("-q^-2"));
        assert!(d.is_one());
    }

    #[test]
    fn mod_two_gcd() {
        let a: Laurent<Zp<2>> = parse_laurent("t^2 + 1").unwrap();
        let b: Laurent<Zp<2>> = parse_laurent("t + 1").unwrap();
        assert_eq!(gcd(&a, &b), b);
    }
}
