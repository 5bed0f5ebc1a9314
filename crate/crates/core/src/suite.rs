//! Verification suites shared by the command line and the acceptance tests.

use serde::Serialize;

use crate::algebra::binary::eval_form;
use crate::algebra::compiled::CompiledPoly;
use crate::algebra::gf::FiniteField;
use crate::algebra::ring::{Rationals, Ring};
use crate::burkhardt::{burkhardt_form, group_invariance_check, hessian_form, node_census, restrict_to_plane, JPlane};
use crate::error::Result;
use crate::maps::{phi_eval, verify_roundtrip};
use crate::moduli::census::{certificate_sweep, off_hessian_census, tangency_sweep};
use crate::moduli::cover::{compare_with_curve, cubic_cover, verify_cubic_restriction, verify_discriminant_identity};
use crate::moduli::curve::curve_from_point;
use crate::moduli::kummer::{
    coble_quadrics, line_tangent_to_conic, weddle_surface, trope_line_of_divisor, verify_divisor_line, DivisorPair,
};
use crate::moduli::symbolic::{explicit_triple, hlg_triples, same_sextic, verify_master_identity};
use crate::projective::projective_points;
use crate::zeta::{
    count_burkhardt, extension, off_hessian_count, off_hessian_formula, verify_desing_correction, zeta_burkhardt,
    CountMode, DEFAULT_SCAN_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub topic: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &'static str, topic: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { suite, topic, name: name.into(), passed, detail: detail.into() }
}

/// Default field sizes for the zeta suite.
pub const DEFAULT_QS: [u64; 7] = [2, 4, 5, 7, 8, 11, 13];

/// Field sizes for the off-Hessian closed form.
pub const OFF_HESSIAN_QS: [u64; 8] = [2, 4, 5, 7, 8, 11, 13, 16];

/// Split a prime power into `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

pub fn field_of_order(q: u64) -> Result<FiniteField> {
    let (p, k) = prime_power(q).ok_or(crate::Error::InvalidField(format!("{q} is not a prime power")))?;
    FiniteField::new(p, k, None)
}

/// Polynomial identities over Z and Q.
pub fn identities_suite() -> Vec<Check> {
    const S: &str = "identities";
    let mut out = Vec::new();
    let rt = verify_roundtrip();
    out.push(check(S, "parametrization", "f(phi) = 0", rt.f_of_phi_vanishes, "exact over Z"));
    for (i, ok) in rt.representatives.iter().enumerate() {
        out.push(check(S, "parametrization", format!("psi{} o phi = (1, t1, t2, t3)", i + 1), *ok, "exact division over Z"));
    }
    for modulo in [false, true] {
        let m = verify_master_identity(modulo);
        let how = if modulo { "modulo the quartic relation" } else { "unconditionally" };
        out.push(check(
            S,
            "level-3 decompositions",
            format!("J1..J4 sextics coincide, {how}"),
            m.agree_with_first.iter().all(|&b| b),
            format!("{:?}", m.agree_with_first),
        ));
        out.push(check(S, "level-3 decompositions", format!("dual sextic = -3 F, {how}"), m.dual_ratio_minus_three, ""));
    }
    out.push(check(
        S,
        "explicit curve",
        "explicit (H, lambda, G) gives the J3 sextic",
        same_sextic(explicit_triple(), &hlg_triples()[2], false),
        "explicit G uses (a4^3 + 1)",
    ));
    let variant = crate::moduli::symbolic::variant_triple();
    out.push(check(
        S,
        "explicit curve",
        "variant with (a4^2 + 1) is rejected",
        !same_sextic(&variant, &hlg_triples()[2], true),
        "fails with and without the relation",
    ));
    match group_invariance_check(&Rationals, None) {
        Ok(reps) => {
            for r in reps {
                out.push(check(S, "symmetry", format!("{} preserves f", r.generator), r.invariant, r.scalar.unwrap_or_default()));
            }
        }
        Err(e) => out.push(check(S, "symmetry", "generators over Q", false, e.to_string())),
    }
    for j in JPlane::all() {
        let ok = restrict_to_plane(burkhardt_form(), j).is_zero() && restrict_to_plane(hessian_form(), j).is_zero();
        out.push(check(S, "hessian", format!("f and He vanish on {}", j.label()), ok, ""));
    }
    for i in 1..=4 {
        let ok = verify_cubic_restriction(JPlane::J(i)).unwrap_or(false);
        out.push(check(S, "cubic cover", format!("first polar on J{i} is the plane cubic"), ok, ""));
    }
    out.push(check(
        S,
        "cubic cover",
        "disc(w^3 + 3 l H w + l G) = -27 l^2 (G^2 + 4 l H^3)",
        verify_discriminant_identity().unwrap_or(false),
        "generic H, G",
    ));
    out
}

/// Point counts against the zeta functions, the desingularization
/// bookkeeping, node censuses and the off-Hessian closed form (for the
/// sizes in `off_hessian_qs`).
pub fn zeta_suite(qs: &[u64], max_order: u64, off_hessian_qs: &[u64]) -> Result<Vec<Check>> {
    const S: &str = "zeta";
    let mut out = Vec::new();
    for &q in qs {
        let base = field_of_order(q)?;
        let z = zeta_burkhardt(q)?;
        let mut n = 1;
        while q.checked_pow(n).is_some_and(|qn| qn <= max_order) {
            let got = count_burkhardt(&extension(&base, n)?)?;
            let want = z.count(n);
            out.push(check(
                S,
                "point counts",
                format!("#B(GF({q}^{n}))"),
                num_bigint::BigInt::from(got) == want,
                format!("scan {got}, zeta {want}"),
            ));
            n += 1;
        }
        out.push(check(S, "resolution", format!("resolution factors, q = {q}"), verify_desing_correction(q)?, ""));
        let nodes = node_census(&base)?.len();
        let want = if q % 3 == 1 { 45 } else { 7 };
        out.push(check(S, "nodes", format!("rational nodes over GF({q})"), nodes == want, format!("{nodes}")));
    }
    for &q in off_hessian_qs {
        let f = field_of_order(q)?;
        let got = off_hessian_count(&f, CountMode::Brute, DEFAULT_SCAN_CAP)?;
        let want = off_hessian_formula(q)?;
        out.push(check(S, "off hessian", format!("#(B - He)(GF({q}))"), got == want, format!("scan {got}, formula {want}")));
    }
    Ok(out)
}

/// `n` deterministic pairs of points of P^1(GF(q)), cycling with a stride.
pub fn divisor_pairs(field: &FiniteField, n: usize, doubled: bool) -> Vec<DivisorPair<FiniteField>> {
    let pts: Vec<Vec<u32>> = projective_points(field, 2).collect();
    let m = pts.len();
    (0..n)
        .map(|i| {
            let a = &pts[(7 * i + 1) % m];
            let b = if doubled { a } else { &pts[(7 * i + 1 + 1 + (3 * i) % (m - 1)) % m] };
            DivisorPair { first: (a[0], a[1]), second: (b[0], b[1]) }
        })
        .collect()
}

/// Roots of a binary form in P^1 over `big`.
pub fn roots_in(field: &FiniteField, f: &[u32], big: &FiniteField) -> Result<usize> {
    let table = field.embedding_into(big)?;
    let g: Vec<u32> = f.iter().map(|&c| table[c as usize]).collect();
    Ok(projective_points(big, 2).filter(|v| eval_form(big, &g, &v[0], &v[1]) == 0).count())
}

/// Certificates, tangency, divisor lines, base points and the cubic cover.
pub fn moduli_suite() -> Result<Vec<Check>> {
    const S: &str = "moduli";
    let mut out = Vec::new();
    for q in [5, 11] {
        let f = FiniteField::prime(q)?;
        let s = certificate_sweep(&f)?;
        out.push(check(
            S,
            "certificates",
            format!("all certificates over GF({q})"),
            s.ok() && s.admissible > 0,
            format!("{} of {} admissible pass, skipped {:?}", s.passed, s.admissible, s.skipped),
        ));
        let t = tangency_sweep(&f, 10, 2)?;
        out.push(check(
            S,
            "tangency",
            format!("J1..J4 tangent at 10 points over GF({q}); control plane not tangent"),
            t.ok() && t.points == 10,
            format!("{} of {} points, control {:?}", t.all_tangent, t.points, t.control_plane),
        ));
    }
    let mut lines_ok = true;
    let mut doubled_ok = true;
    for q in [7, 11, 13] {
        let f = FiniteField::prime(q)?;
        for d in divisor_pairs(&f, 50, false) {
            lines_ok &= verify_divisor_line(&f, &d);
        }
        for d in divisor_pairs(&f, 10, true) {
            doubled_ok &= verify_divisor_line(&f, &d) && line_tangent_to_conic(&f, &trope_line_of_divisor(&f, &d));
        }
    }
    out.push(check(S, "divisor lines", "50 pairs over each of GF(7), GF(11), GF(13)", lines_ok, ""));
    out.push(check(S, "divisor lines", "doubled points give tangent lines", doubled_ok, ""));

    // base points of Coble's quadrics against roots of F, and on the Weddle quartic
    let f5 = FiniteField::prime(5)?;
    let mut base_ok = true;
    let mut detail = String::new();
    let f25 = FiniteField::new(5, 2, None)?;
    let f125 = FiniteField::new(5, 3, None)?;
    let mut split = Vec::new();
    for alpha in off_hessian_census(&f5, DEFAULT_SCAN_CAP)? {
        let Ok(curve) = curve_from_point(&f5, &alpha) else { continue };
        if roots_in(&f5, &curve.sextic, &f25)? == 6 || roots_in(&f5, &curve.sextic, &f125)? == 6 {
            split.push((alpha, curve));
        }
    }
    base_ok &= split.len() >= 3;
    for (alpha, curve) in split.iter().take(3) {
        let sys = coble_quadrics(&f5, alpha.coords())?;
        let weddle = weddle_surface(&sys)?;
        for m in 1..=3 {
            let big = FiniteField::new(5, m, None)?;
            let pts = sys.base_points(&big)?;
            let w = CompiledPoly::new(&weddle.try_map(&big, |c| Ok(f5.embedding_into(&big)?[*c as usize]))?);
            let r = roots_in(&f5, &curve.sextic, &big)?;
            base_ok &= pts.len() == r && pts.iter().all(|p| w.eval(p) == 0);
            detail.push_str(&format!("{alpha} m={m}: {}/{r}; ", pts.len()));
        }
    }
    out.push(check(S, "kummer", "six Coble base points over GF(5^m), m <= 3, matching roots of F and on the Weddle quartic", base_ok, detail));

    let f11 = FiniteField::prime(11)?;
    let mut agree = 0;
    let mut bad = 0;
    for alpha in off_hessian_census(&f11, DEFAULT_SCAN_CAP)? {
        let (Ok(c), Ok(cov)) = (curve_from_point(&f11, &alpha), cubic_cover(&f11, &alpha, JPlane::J(1))) else {
            continue;
        };
        match compare_with_curve(&f11, &cov, &c.sextic) {
            Ok(true) => agree += 1,
            Ok(false) => bad += 1,
            Err(_) => {}
        }
    }
    out.push(check(
        S,
        "cubic cover",
        "Igusa invariants of the cover discriminant match F over GF(11)",
        bad == 0 && agree >= 10,
        format!("{agree} agree, {bad} disagree"),
    ));
    let q = Rationals;
    let mut rational = 0;
    let mut rational_bad = 0;
    for t in [[1, 2, 3], [2, 5, -3], [-1, 4, 7], [3, -2, 1]] {
        let t = t.map(|x| q.from_i64(x));
        let Ok(alpha) = phi_eval(&q, &t) else { continue };
        let (Ok(c), Ok(cov)) = (curve_from_point(&q, &alpha), cubic_cover(&q, &alpha, JPlane::J(1))) else {
            continue;
        };
        match compare_with_curve(&q, &cov, &c.sextic) {
            Ok(true) => rational += 1,
            Ok(false) => rational_bad += 1,
            Err(_) => {}
        }
    }
    out.push(check(
        S,
        "cubic cover",
        "Igusa invariants agree at rational points from phi",
        rational_bad == 0 && rational >= 3,
        format!("{rational} agree"),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn pairs_are_distinct() {
        let f = FiniteField::prime(7).unwrap();
        let ps = divisor_pairs(&f, 50, false);
        assert!(ps.iter().all(|d| d.first != d.second));
    }

    #[test]
    fn small_zeta_suite() {
        let checks = zeta_suite(&[2, 5], 8, &[2, 5]).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }
}
