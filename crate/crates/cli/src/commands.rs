//! One function per subcommand, each returning a [`Report`].

use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sepdeform_core::algebra::{AlgebraSpec, Tensor};
use sepdeform_core::blocks::{dn_orbit_data, middle_orbit_check, qbn_blocks, qdn_blocks, Decomposition, MAX_MIDDLE_ORBIT_R};
use sepdeform_core::deform::{
    c3_t_idempotent, cyclic_deformation, cyclic_polynomial, section11_matrices, section3_build,
    split_cyclic_idempotent, symmetric_dihedral_deformation, symmetric_dihedral_idempotent, to_rational,
    ClearedIdempotent, Section3Recipe,
};
use sepdeform_core::group::strings::theorem12_verify;
use sepdeform_core::group::{GroupDescriptor, ENUMERATION_BUDGET};
use sepdeform_core::hecke::{Hecke, Side};
use sepdeform_core::separability::{denominator_support, solve_idempotent, IdempotentCertificate, SolveOutcome};
use sepdeform_core::suite::{run_all, Check, SuiteOptions};
use sepdeform_core::{CoreError, Result};
use sepdeform_scalar::{FractionField, Rat, Ring, ZLaurent};

use crate::report::{check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Bn,
    Dn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Recipe {
    Quadratic,
    Hecke,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payloads serialize")
}

fn tensor_terms<R: Ring>(e: &Tensor<R>) -> Value {
    Value::Array(
        e.labelled_terms()
            .into_iter()
            .map(|(labels, c)| json!({"basis": labels.join("⊗"), "coefficient": c}))
            .collect(),
    )
}

fn decomposition_lines(d: &Decomposition) -> Vec<String> {
    let mut lines = vec![format!("{} ≅", d.name)];
    for s in &d.summands {
        let rep = s.representative.as_deref().map(|r| format!("  [orbit of {r}]")).unwrap_or_default();
        lines.push(format!(
            "  ⊕ M_{}({}) ⊗ k[{}]  (isotropy order {}, dim {}){rep}",
            s.matrix_size, s.inner, s.isotropy.kind, s.isotropy.order, s.dimension
        ));
        if let Some(x) = &s.expansion {
            for e in &x.summands {
                lines.push(format!("      {} ⊃ M_{}({}) ⊗ k[{}]  (dim {})", x.name, e.matrix_size, e.inner, e.isotropy.kind, e.dimension));
            }
        }
    }
    lines.push(format!("total {} (expected {})", d.total, d.expected_total));
    if let Some(b) = d.block_count {
        lines.push(format!("simple blocks {b}"));
    }
    lines
}

pub fn decompose(family: Family, n: usize) -> Result<Report> {
    let (d, group) = match family {
        Family::Bn => (qbn_blocks(n)?, GroupDescriptor::Hyperoctahedral(n)),
        Family::Dn => (qdn_blocks(n)?, GroupDescriptor::WeylD(n)),
    };
    let mut checks = vec![check("dimension audit", d.audit, format!("{} = {}", d.total, d.expected_total))];
    if group.order() <= 2000 {
        let classes = group.conjugacy_classes(ENUMERATION_BUDGET)?.len();
        checks.push(check(
            format!("simple blocks = conjugacy classes of {}", group.name()),
            d.block_count == Some(classes),
            format!("{} vs {classes}", d.block_count.map_or("none".into(), |b| b.to_string())),
        ));
    }
    let name = match family {
        Family::Bn => "bn",
        Family::Dn => "dn",
    };
    let text = decomposition_lines(&d);
    Ok(Report::new(format!("decompose {name} --n {n}"), checks, to_value(&d), text))
}

fn certificate_payload(cert: &IdempotentCertificate<Rat>) -> (Value, Vec<String>) {
    let den = &cert.denominator;
    let numerator = cert.element.scale(&Rat::from_domain(den));
    let display = if den.is_one() {
        cert.element.to_string()
    } else {
        format!("1/({den}) * [{numerator}]")
    };
    let payload = json!({
        "denominator": den.to_string(),
        "numerator": tensor_terms(&numerator),
        "element": tensor_terms(&cert.element),
        "flags": cert.flags,
        "free_unknowns": cert.free_unknowns,
        "equations": cert.rows,
    });
    (payload, vec![format!("e = {display}")])
}

fn flag_checks(flags: sepdeform_core::separability::Flags) -> Vec<Check> {
    vec![
        check("μ(e) = 1", flags.unit, ""),
        check("a e = e a", flags.central, ""),
        check("e e = e in A ⊗ A^op", flags.idempotent, ""),
    ]
}

pub fn idempotent_cyclic(r: usize) -> Result<Report> {
    let f = cyclic_polynomial(r)?;
    let disc: ZLaurent = f.discriminant()?;
    let alg = to_rational(&cyclic_deformation(r)?)?;
    let command = format!("idempotent cyclic --r {r}");
    let SolveOutcome::Separable(cert) = solve_idempotent(&alg, &[alg.basis(1)])? else {
        let checks = vec![check("separable over Q(t)", false, "no separability idempotent")];
        return Ok(Report::new(command, checks, json!({"polynomial": f.to_string()}), vec![]));
    };
    let (mut payload, mut text) = certificate_payload(&cert);
    let sup = denominator_support(&cert.denominator, std::slice::from_ref(&disc));
    let mut checks = flag_checks(cert.flags);
    checks.push(check(
        "denominator divides a power of the discriminant",
        sup.divides_power.is_some(),
        format!("{} vs {disc}", sup.lcm),
    ));
    if r == 3 {
        let shown = c3_t_idempotent(&alg)?;
        checks.push(check("equals the 1/(4t^3 - 27) display", shown == cert.element, ""));
    }
    payload["polynomial"] = json!(f.to_string());
    payload["discriminant"] = json!(disc.to_string());
    text.insert(0, format!("A = Q(t)[x]/({f}), disc = {disc}"));
    Ok(Report::new(command, checks, payload, text))
}

fn cleared_report<const R: usize>(command: String, c: &ClearedIdempotent<R>, mut payload: Value, mut text: Vec<String>) -> Report {
    let checks = vec![
        check("μ(E) = S", c.unit, ""),
        check("a E = E a", c.central, ""),
        check("E E = S E in A ⊗ A^op", c.idempotent, ""),
        check("S = disc^2", c.scale_is_discriminant_squared, ""),
    ];
    payload["scale"] = json!(c.scale.to_string());
    payload["element"] = tensor_terms(&c.element);
    text.push(format!("S = {}", c.scale));
    text.push(format!("E = S e = {}", c.element));
    Report::new(command, checks, payload, text)
}

fn split_report<const R: usize>() -> Result<Report> {
    let c = split_cyclic_idempotent::<R>()?;
    let f = sepdeform_core::deform::split_cyclic_polynomial::<R>()?;
    let payload = json!({"polynomial": f.to_string()});
    Ok(cleared_report(format!("idempotent cyclic --r {R} --split"), &c, payload, vec![format!("f = {f}")]))
}

fn symmetric_report<const R: usize>() -> Result<Report> {
    let c = symmetric_dihedral_idempotent::<R>()?;
    let s = symmetric_dihedral_deformation::<R>()?;
    let payload = json!({
        "polynomial": s.polynomial.to_string(),
        "base_point_is_group_algebra": s.base_point_is_group_algebra,
        "inverse_of_x": s.involution.get(1).map(ToString::to_string),
    });
    let text = vec![
        format!("f = {}", s.polynomial),
        format!("x^-1 = {}", s.involution[1]),
        format!("q = 1 gives x^{R} - 1: {}", s.base_point_is_group_algebra),
    ];
    Ok(cleared_report(format!("idempotent cyclic --r {R} --symmetric"), &c, payload, text))
}

macro_rules! dispatch_prime_power {
    ($r:expr, $f:ident) => {
        match $r {
            2 => $f::<2>(),
            3 => $f::<3>(),
            4 => $f::<4>(),
            5 => $f::<5>(),
            7 => $f::<7>(),
            8 => $f::<8>(),
            9 => $f::<9>(),
            r => Err(CoreError::InvalidInput(format!("r = {r} is not a supported prime power (2, 3, 4, 5, 7, 8, 9)"))),
        }
    };
}

pub fn idempotent_split(r: usize) -> Result<Report> {
    dispatch_prime_power!(r, split_report)
}

pub fn idempotent_symmetric(r: usize) -> Result<Report> {
    dispatch_prime_power!(r, symmetric_report)
}

pub fn idempotent_algebra(path: &Path) -> Result<Report> {
    let text = fs::read_to_string(path).map_err(|e| CoreError::InvalidInput(format!("{}: {e}", path.display())))?;
    let spec = AlgebraSpec::from_json(&text)?;
    let (alg, gens) = spec.build()?;
    let command = format!("idempotent algebra --spec {}", path.display());
    let header = format!("{} (dimension {}, {} generators)", alg.name(), alg.dim(), gens.len());
    match solve_idempotent(&alg, &gens)? {
        SolveOutcome::Separable(cert) => {
            let (payload, mut lines) = certificate_payload(&cert);
            lines.insert(0, header);
            Ok(Report::new(command, flag_checks(cert.flags), payload, lines))
        }
        SolveOutcome::Inconsistent => Ok(Report::new(
            command,
            vec![check("separable", false, "no separability idempotent over the field")],
            json!({"dimension": alg.dim()}),
            vec![header],
        )),
    }
}

pub fn hecke_mul(n: usize, left: &str, right: &str) -> Result<Report> {
    let h = Hecke::generic(n)?;
    let x = h.parse(left)?;
    let y = h.parse(right)?;
    let prod = h.multiply(&x, &y)?;
    // the same product through right multiplication by generators
    let mut alt = h.zero();
    for (w, c) in y.terms() {
        let mut acc = x.clone();
        for &i in &w.reduced_word() {
            acc = h.multiply_by_generator(i, &acc, Side::Right)?;
        }
        alt = alt.add(&acc.scale(c))?;
    }
    let terms: Vec<Value> = prod.labelled_terms().into_iter().map(|(b, c)| json!({"basis": b, "coefficient": c})).collect();
    let payload = json!({"n": n, "left": x.to_string(), "right": y.to_string(), "product": terms});
    let text = vec![format!("({x}) · ({y}) = {prod}")];
    let checks = vec![check("left and right expansions agree", prod == alt, "")];
    Ok(Report::new(format!("hecke mul --n {n} --left {left:?} --right {right:?}"), checks, payload, text))
}

pub fn orbits(n: usize) -> Result<Report> {
    let hom = theorem12_verify(n)?;
    let data = dn_orbit_data(n)?;
    let mut checks = vec![
        check(format!("Coxeter relations of S_{} on {} strings", n + 1, hom.strings), true, format!("{} relations", hom.relations)),
        check("faithful", hom.faithful, if n == 1 { "the n = 1 action is trivial" } else { "" }),
        check("orbit sizes sum to 2^n", data.partition_ok, ""),
    ];
    let mut text = Vec::new();
    for o in &data.orbits {
        checks.push(check(
            format!("orbit of {}: size and isotropy", o.representative),
            o.ok,
            format!("size {}, isotropy {} of order {}", o.size, o.isotropy_type, o.stabilizer_order),
        ));
        text.push(format!(
            "{}  m = {}  size {} (expected {})  isotropy {} order {} (expected {}){}",
            o.representative,
            o.m,
            o.size,
            o.expected_size,
            o.isotropy_type,
            o.stabilizer_order,
            o.expected_stabilizer_order,
            if o.middle { "  middle" } else { "" }
        ));
    }
    let mut payload = json!({"homomorphism": hom, "orbits": data});
    if n % 2 == 1 && (1..=MAX_MIDDLE_ORBIT_R).contains(&(n / 2)) {
        let c = middle_orbit_check(n / 2)?;
        checks.push(check("ρ identities for the middle orbit", c.ok, format!("ρ = {}", c.rho)));
        payload["middle"] = to_value(&c);
    }
    Ok(Report::new(format!("orbits --n {n}"), checks, payload, text))
}

fn grid(name: &str, rows: &[Vec<String>]) -> Vec<String> {
    let mut lines = vec![format!("{name} =")];
    lines.extend(rows.iter().map(|r| format!("  [{}]", r.join(", "))));
    lines
}

pub fn matrices_section11() -> Result<Report> {
    let r = section11_matrices()?;
    let mism: Vec<String> = r
        .mismatches
        .iter()
        .map(|m| format!("({},{}) computed {} displayed {}", m.row, m.col, m.computed, m.displayed))
        .collect();
    let checks = vec![
        check("Y^-1 matches the display", r.y_inverse_matches, ""),
        check("Y P24 Y^-1 matches the display", r.p24_conjugate_matches, mism.join("; ")),
        check("P23 commutes with Y", r.p23_commutes_with_y, ""),
        check("q -> 1 limit of Y P24 Y^-1 is P34", r.q1_limit_is_p34, ""),
        check("mod 2 then t -> 0 gives N", r.mod2_then_t0_is_n, ""),
        check("W P23 W^-1 = P23", r.w_conjugates_p23, ""),
        check("W N W^-1 = P34", r.w_conjugates_n_to_p34, ""),
        check("S_3 relations", r.s3_relations, ""),
    ];
    let mut text = grid("Y", &r.y);
    text.extend(grid("Y^-1", &r.y_inverse));
    text.extend(grid("Y P24 Y^-1", &r.p24_conjugate));
    text.extend(grid("mod 2, t -> 0", &r.mod2_then_t0));
    Ok(Report::new("matrices section11".into(), checks, to_value(&r), text))
}

pub fn section3(recipe: Recipe) -> Result<Report> {
    let (rec, name) = match recipe {
        Recipe::Quadratic => (Section3Recipe::Quadratic, "quadratic"),
        Recipe::Hecke => (Section3Recipe::Hecke, "hecke"),
    };
    let (_, r) = section3_build(rec, true)?;
    let checks = vec![
        check("σ*σ in the idempotent basis", r.sigma_square_idempotent_basis, ""),
        check("σ*σ equals the displayed formula", r.sigma_square_display, ""),
        check("matrix units of the 4-dimensional summand", r.matrix_units, ""),
        check("integral after tempering", r.integral, format!("u = t^{} v", r.tempering_exponent.unwrap_or(0))),
        check("base point is F2[C2 wr C2]", r.base_point_is_group_algebra, ""),
        check("separable over F2(t, v)", r.separable == Some(true), r.idempotent_denominator.clone().unwrap_or_default()),
    ];
    let text = vec![format!("σ*σ = {}", r.sigma_square)];
    Ok(Report::new(format!("section3 --recipe {name}"), checks, to_value(&r), text))
}

pub fn verify_all(max_n: Option<usize>, seed: u64) -> Result<Report> {
    let outcomes = run_all(&SuiteOptions { max_n, seed });
    let checks = outcomes
        .iter()
        .map(|o| {
            let failed: Vec<String> = o.failed_checks().map(|c| format!("{} {}", c.name, c.detail).trim().to_string()).collect();
            let mut detail = failed.join("; ");
            if !o.within_time {
                detail = format!("over the {} ms limit; {detail}", o.limit_ms);
            }
            check(format!("criterion {:>2}: {}", o.id, o.title), o.passed, detail)
        })
        .collect();
    let text = outcomes
        .iter()
        .map(|o| format!("criterion {:>2}: {} checks, {} ms (limit {} ms)", o.id, o.checks.len(), o.elapsed_ms, o.limit_ms))
        .collect();
    let command = match max_n {
        Some(k) => format!("verify all --max-n {k}"),
        None => "verify all".into(),
    };
    Ok(Report::new(command, checks, to_value(&outcomes), text))
}
