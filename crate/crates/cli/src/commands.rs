use rayon::prelude::*;
use serde_json::{json, Value};

use burkhardt::algebra::binary::discriminant;
use burkhardt::algebra::gf::FiniteField;
use burkhardt::algebra::igusa::igusa_clebsch;
use burkhardt::algebra::{Field, FieldDesc, Ring};
use burkhardt::burkhardt::{node_census, JPlane};
use burkhardt::maps::{phi_eval, psi_eval};
use burkhardt::moduli::census::off_hessian_census;
use burkhardt::moduli::cover::{compare_with_curve, cubic_cover};
use burkhardt::moduli::curve::{curve_from_point, level3_decompositions, verify_order3_certificate, Decomposition};
use burkhardt::projective::ProjPoint;
use burkhardt::suite::{field_of_order, identities_suite, moduli_suite, zeta_suite, Check, OFF_HESSIAN_QS};
use burkhardt::zeta::{
    count_burkhardt, count_burkhardt_brute, extension, hessian_intersection_count, off_hessian_count,
    off_hessian_formula, zeta_burkhardt, zeta_desing, CountMode, EpsilonSymbol,
};
use burkhardt::{Error, Result};

/// A JSON report and whether everything it claims held.
pub struct Report {
    pub value: Value,
    pub ok: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, ok: true }
    }
}

fn elems<F: Field>(field: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|c| field.fmt_elem(c)).collect()
}

fn field_json(desc: &FieldDesc) -> Value {
    match desc {
        FieldDesc::Rationals => json!({"p": 0, "k": 1, "order": null}),
        FieldDesc::Finite(f) => json!({"p": f.p(), "k": f.degree(), "order": f.order(), "modulus": f.modulus()}),
    }
}

// verify

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    All,
    Identities,
    Zeta,
    Moduli,
}

pub fn verify(scope: Scope, qs: &[u64], max_order: u64, quiet: bool) -> Result<Report> {
    let mut checks: Vec<Check> = Vec::new();
    if matches!(scope, Scope::All | Scope::Identities) {
        checks.extend(identities_suite());
    }
    if matches!(scope, Scope::All | Scope::Zeta) {
        let oh: Vec<u64> = OFF_HESSIAN_QS.iter().copied().filter(|q| qs.contains(q) || *q == 16).collect();
        checks.extend(zeta_suite(qs, max_order, &oh)?);
    }
    if matches!(scope, Scope::All | Scope::Moduli) {
        checks.extend(moduli_suite()?);
    }
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let ok = failed.is_empty();
    let scope_name = format!("{scope:?}").to_lowercase();
    let listed: Vec<&Check> = if quiet { failed.clone() } else { checks.iter().collect() };
    let value = json!({
        "scope": scope_name,
        "passed": ok,
        "total": checks.len(),
        "failed": failed.len(),
        "checks": listed,
    });
    Ok(Report { value, ok })
}

// count

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    Burkhardt,
    OffHessian,
    Nodes,
    HessianIntersection,
}

pub fn count(q: u64, n: u32, kind: CountKind, brute: bool, cap: u128) -> Result<Report> {
    let base = field_of_order(q)?;
    let field = extension(&base, n)?;
    let order = field.order();
    let eps = EpsilonSymbol::new(order)?.eps;
    let (name, count, formula): (&str, i128, Option<i128>) = match kind {
        CountKind::Burkhardt => {
            let c = if brute { count_burkhardt_brute(&field, cap)? } else { count_burkhardt(&field)? };
            let z = zeta_burkhardt(q)?.count(n);
            ("burkhardt", c as i128, Some(i128::try_from(z).map_err(|_| Error::Precondition("count overflow".into()))?))
        }
        CountKind::OffHessian => {
            ("off_hessian", off_hessian_count(&field, CountMode::Brute, cap)?, Some(off_hessian_formula(order)?))
        }
        CountKind::Nodes => {
            let nodes = node_census(&field)?.len() as i128;
            ("nodes", nodes, Some(if eps == 1 { 45 } else { 7 }))
        }
        CountKind::HessianIntersection => {
            let c = hessian_intersection_count(&field, cap)? as i128;
            let total = i128::try_from(zeta_burkhardt(order)?.count(1)).map_err(|_| Error::Precondition("count overflow".into()))?;
            ("hessian_intersection", c, Some(total - off_hessian_formula(order)?))
        }
    };
    let agrees = formula.map(|f| f == count);
    let value = json!({
        "q": q,
        "n": n,
        "order": order,
        "kind": name,
        "count": count,
        "formula": formula,
        "agrees": agrees,
    });
    Ok(Report { value, ok: agrees.unwrap_or(true) })
}

// zeta

pub fn zeta(q: u64, desing: bool, terms: u32) -> Result<Report> {
    field_of_order(q)?;
    let z = if desing { zeta_desing(q)? } else { zeta_burkhardt(q)? };
    let counts: Vec<String> = (1..=terms).map(|n| z.count(n).to_string()).collect();
    let value = json!({
        "q": q,
        "eps": EpsilonSymbol::new(q)?.eps,
        "variety": if desing { "small resolution" } else { "burkhardt" },
        "zeta": z,
        "counts": counts,
    });
    Ok(Report::ok(value))
}

// param

pub fn param_phi<F: Field>(field: &F, t: &str) -> Result<Report> {
    let parts = t
        .split(':')
        .map(|s| s.trim().parse::<i64>().map(|v| field.from_i64(v)))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse { pos: 0, msg: format!("bad affine point {t:?}") })?;
    let y = phi_eval(field, &parts)?;
    let (back, rep) = psi_eval(field, &y)?;
    let expect = ProjPoint::new(field, std::iter::once(field.one()).chain(parts.iter().cloned()).collect())?;
    let roundtrip = back.normalized().coords() == expect.normalized().coords();
    let value = json!({
        "map": "phi",
        "input": elems(field, &parts),
        "output": y.normalized().to_string(),
        "psi_of_output": back.normalized().to_string(),
        "psi_representative": rep + 1,
        "roundtrip": roundtrip,
    });
    Ok(Report { value, ok: roundtrip })
}

pub fn param_psi<F: Field>(field: &F, y: &str) -> Result<Report> {
    let y = ProjPoint::parse(field, y)?;
    let (t, rep) = psi_eval(field, &y)?;
    let value = json!({
        "map": "psi",
        "input": y.normalized().to_string(),
        "output": t.normalized().to_string(),
        "psi_representative": rep + 1,
    });
    Ok(Report::ok(value))
}

// curve

fn decomposition_json<F: Field>(field: &F, sextic: &[F::Elem], d: &Decomposition<F>) -> Result<(Value, bool)> {
    let check = if field.characteristic() == 2 {
        None
    } else {
        Some(verify_order3_certificate(field, sextic, d)?)
    };
    let ok = check.as_ref().map_or(true, |c| c.passed());
    let v = json!({
        "label": d.label,
        "d": d.d,
        "h": elems(field, &d.h),
        "lambda": field.fmt_elem(&d.lambda),
        "g": elems(field, &d.g),
        "check": check,
        "passed": check.as_ref().map(|c| c.passed()),
    });
    Ok((v, ok))
}

pub fn curve<F: Field>(desc: &FieldDesc, field: &F, alpha: &str) -> Result<Report> {
    let alpha = ProjPoint::parse(field, alpha)?;
    let model = curve_from_point(field, &alpha)?;
    let decs = level3_decompositions(field, &alpha)?;
    let mut ok = true;
    let mut out = Vec::new();
    for d in &decs {
        let (v, good) = decomposition_json(field, &model.sextic, d)?;
        ok &= good;
        out.push(v);
    }
    let presentation = model.presentation.as_ref().map(|(g, h, l)| {
        json!({"g": elems(field, g), "h": elems(field, h), "lambda": field.fmt_elem(l)})
    });
    let value = json!({
        "alpha": alpha.normalized().to_string(),
        "field": field_json(desc),
        "flavor": model.flavor,
        "sextic": elems(field, &model.sextic),
        "presentation": presentation,
        "decompositions": out,
        "certificates": if field.characteristic() == 2 { "unsupported in characteristic 2" } else { "checked" },
        "passed": ok,
    });
    Ok(Report { value, ok })
}

// cover

pub fn cover<F: Field>(field: &F, alpha: &str, plane: &str) -> Result<Report> {
    let plane = JPlane::parse(plane)?;
    let alpha = ProjPoint::parse(field, alpha)?;
    let cov = cubic_cover(field, &alpha, plane)?;
    let curve = curve_from_point(field, &alpha).ok();
    let comparison = match &curve {
        None => json!({"status": "no curve at this point"}),
        Some(c) => match compare_with_curve(field, &cov, &c.sextic) {
            Ok(agree) => json!({"status": "compared", "agrees": agree}),
            Err(e) => json!({"status": "skipped", "reason": e.to_string()}),
        },
    };
    let ok = comparison.get("agrees").and_then(Value::as_bool).unwrap_or(true);
    let ic = match igusa_clebsch(field, &cov.discriminant) {
        Ok(ic) => json!(elems(field, &ic.as_array())),
        Err(_) => Value::Null,
    };
    let value = json!({
        "alpha": alpha.normalized().to_string(),
        "plane": plane.label(),
        "plane_cubic": cov.plane_cubic.to_string(),
        "cover": cov.cover.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "discriminant": elems(field, &cov.discriminant),
        "discriminant_igusa_clebsch": ic,
        "comparison": comparison,
    });
    Ok(Report { value, ok })
}

// scan

fn scan_entry(field: &FiniteField, alpha: &ProjPoint<FiniteField>) -> (Value, bool) {
    let key = alpha.to_string();
    let curve = match curve_from_point(field, alpha) {
        Ok(c) => c,
        Err(e) => return (json!({"alpha": key, "status": "skipped", "reason": e.to_string()}), true),
    };
    let mut entry = json!({
        "alpha": key,
        "sextic": elems(field, &curve.sextic),
        "flavor": curve.flavor,
    });
    if field.p() == 2 {
        entry["status"] = json!("ok");
        entry["certificates"] = json!("unsupported in characteristic 2");
        return (entry, true);
    }
    let mut ok = !field.is_zero(&discriminant(field, &curve.sextic).unwrap_or(0));
    let mut certs = serde_json::Map::new();
    match level3_decompositions(field, alpha) {
        Ok(decs) => {
            for d in &decs {
                let passed = verify_order3_certificate(field, &curve.sextic, d).map(|c| c.passed()).unwrap_or(false);
                ok &= passed;
                certs.insert(d.label.clone(), json!(passed));
            }
            entry["status"] = json!(if ok { "ok" } else { "failed" });
        }
        Err(e) => {
            entry["status"] = json!("skipped");
            entry["reason"] = json!(e.to_string());
        }
    }
    entry["certificates"] = Value::Object(certs);
    (entry, ok)
}

pub fn scan(q: u64, cap: u128, quiet: bool) -> Result<Report> {
    let field = field_of_order(q)?;
    let census = off_hessian_census(&field, cap)?;
    let results: Vec<(Value, bool)> = census.par_iter().map(|a| scan_entry(&field, a)).collect();
    let ok = results.iter().all(|(_, good)| *good);
    let mut skipped = 0usize;
    for (v, _) in &results {
        skipped += (v["status"] == "skipped") as usize;
    }
    let formula = off_hessian_formula(q)?;
    let value = json!({
        "q": q,
        "count": census.len(),
        "formula": formula,
        "skipped": skipped,
        "passed": ok,
        "entries": if quiet {
            results.iter().filter(|(_, g)| !g).map(|(v, _)| v.clone()).collect::<Vec<_>>()
        } else {
            results.into_iter().map(|(v, _)| v).collect()
        },
    });
    Ok(Report { value, ok: ok && formula == census.len() as i128 })
}

// nodes

pub fn nodes(q: u64, quiet: bool) -> Result<Report> {
    let field = field_of_order(q)?;
    let nodes = node_census(&field)?;
    let expect = if EpsilonSymbol::new(q)?.eps == 1 { 45 } else { 7 };
    let mut value = json!({"q": q, "count": nodes.len(), "expected": expect});
    if !quiet {
        value["nodes"] = json!(nodes.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    }
    Ok(Report { value, ok: nodes.len() == expect })
}
