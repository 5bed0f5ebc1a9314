//! Acceptance criteria 1 to 9, one line each. Run with
//! `cargo test -p burkhardt-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use burkhardt::algebra::gf::FiniteField;
use burkhardt::algebra::{Rationals, Ring};
use burkhardt::burkhardt::{burkhardt_form, hessian_form, node_census, restrict_to_plane, JPlane};
use burkhardt::maps::{phi_eval, psi_eval, verify_roundtrip};
use burkhardt::moduli::census::{certificate_sweep, off_hessian_census, tangency_sweep};
use burkhardt::moduli::cover::{compare_with_curve, cubic_cover, verify_cubic_restriction, verify_discriminant_identity};
use burkhardt::moduli::curve::curve_from_point;
use burkhardt::moduli::kummer::{line_tangent_to_conic, trope_line_of_divisor, verify_divisor_line, DivisorPair};
use burkhardt::moduli::symbolic::verify_master_identity;
use burkhardt::projective::{projective_size, ProjPoint};
use burkhardt::suite::{field_of_order, DEFAULT_QS, OFF_HESSIAN_QS};
use burkhardt::zeta::{
    count_burkhardt, count_burkhardt_brute, extension, off_hessian_count, off_hessian_formula,
    verify_desing_correction, zeta_burkhardt, CountMode, DEFAULT_SCAN_CAP,
};
use burkhardt::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Brute-force cross-checks of the stratified count stay under this many points.
const BRUTE_CAP: u128 = 1 << 22;

type Outcome = Result<(bool, String)>;

fn criterion_1() -> Outcome {
    let rt = verify_roundtrip();
    let plain = verify_master_identity(false);
    let modulo = verify_master_identity(true);
    let hlg = plain.agree_with_first.iter().all(|&b| b) && modulo.agree_with_first.iter().all(|&b| b);
    let ok = rt.passed() && hlg && plain.dual_ratio_minus_three && modulo.dual_ratio_minus_three;
    Ok((
        ok,
        format!(
            "f(phi) = 0: {}, psi roundtrips {:?}, J1..J4 sextics agree: {hlg}, dual = -3 F: {}",
            rt.f_of_phi_vanishes, rt.representatives, plain.dual_ratio_minus_three
        ),
    ))
}

fn criterion_2() -> Outcome {
    let mut cases = 0;
    let mut brute = 0;
    let mut bad = Vec::new();
    for q in DEFAULT_QS {
        let base = field_of_order(q)?;
        let z = zeta_burkhardt(q)?;
        let mut n = 1;
        while q.pow(n) <= 256 {
            let field = extension(&base, n)?;
            let fast = count_burkhardt(&field)?;
            let want = z.count(n);
            if num_bigint::BigInt::from(fast) != want {
                bad.push(format!("{q}^{n}: {fast} vs {want}"));
            }
            if projective_size(field.order(), 5) <= BRUTE_CAP {
                brute += 1;
                let slow = count_burkhardt_brute(&field, BRUTE_CAP)?;
                if slow != fast {
                    bad.push(format!("{q}^{n}: brute {slow} vs stratified {fast}"));
                }
            }
            cases += 1;
            n += 1;
        }
    }
    Ok((bad.is_empty(), format!("{cases} field sizes, {brute} also by full scan, mismatches {bad:?}")))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut zeros = Vec::new();
    for q in OFF_HESSIAN_QS {
        let got = off_hessian_count(&field_of_order(q)?, CountMode::Brute, DEFAULT_SCAN_CAP)?;
        if got != off_hessian_formula(q)? {
            bad.push(q);
        }
        if got == 0 {
            zeros.push(q);
        }
    }
    let ok = bad.is_empty() && zeros == [2, 4, 7, 13];
    Ok((ok, format!("empty for q in {zeros:?}, mismatches {bad:?}")))
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    for q in DEFAULT_QS {
        ok &= verify_desing_correction(q)?;
    }
    let mut nodes = Vec::new();
    for q in [7, 13, 2, 5, 11] {
        let n = node_census(&FiniteField::prime(q)?)?.len();
        ok &= n == if q % 3 == 1 { 45 } else { 7 };
        nodes.push((q, n));
    }
    Ok((ok, format!("factor identity for {DEFAULT_QS:?}, nodes {nodes:?}")))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for q in [5, 11] {
        let s = certificate_sweep(&FiniteField::prime(q)?)?;
        ok &= s.ok() && s.admissible > 0;
        detail.push(format!("GF({q}): {}/{} admissible pass, skipped {:?}", s.passed, s.admissible, s.skipped));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_6() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for q in [5, 11] {
        let t = tangency_sweep(&FiniteField::prime(q)?, 10, 2)?;
        ok &= t.ok() && t.points >= 10;
        detail.push(format!(
            "GF({q}): {}/{} tangent ({} with smooth contact), control plane {:?} rejected: {}",
            t.all_tangent, t.points, t.smooth_contact, t.control_plane, t.control_rejected
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn random_point(field: &FiniteField, rng: &mut ChaCha8Rng) -> (u32, u32) {
    let q = field.order() as u32;
    loop {
        let p = (rng.gen_range(0..q), rng.gen_range(0..q));
        if p != (0, 0) {
            return p;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B);
    let (mut lines, mut doubled) = (0, 0);
    let mut ok = true;
    for q in [7, 11, 13] {
        let f = FiniteField::prime(q)?;
        let proj_eq = |a: (u32, u32), b: (u32, u32)| f.mul(&a.0, &b.1) == f.mul(&a.1, &b.0);
        while lines < 50 * (1 + [7, 11, 13].iter().position(|&x| x == q).unwrap()) {
            let (a, b) = (random_point(&f, &mut rng), random_point(&f, &mut rng));
            if proj_eq(a, b) {
                continue;
            }
            let d = DivisorPair { first: a, second: b };
            ok &= verify_divisor_line(&f, &d) && !line_tangent_to_conic(&f, &trope_line_of_divisor(&f, &d));
            lines += 1;
        }
    }
    let f = FiniteField::prime(13)?;
    for _ in 0..10 {
        let a = random_point(&f, &mut rng);
        let d = DivisorPair { first: a, second: a };
        ok &= verify_divisor_line(&f, &d) && line_tangent_to_conic(&f, &trope_line_of_divisor(&f, &d));
        doubled += 1;
    }
    Ok((ok, format!("{lines} random pairs (50 per field), {doubled} doubled points tangent")))
}

fn criterion_8() -> Outcome {
    let mut ok = verify_discriminant_identity()?;
    for i in 1..=4 {
        ok &= verify_cubic_restriction(JPlane::J(i))?;
    }
    let f11 = FiniteField::prime(11)?;
    let (mut agree, mut bad, mut degenerate) = (0, 0, 0);
    for alpha in off_hessian_census(&f11, DEFAULT_SCAN_CAP)? {
        let (Ok(c), Ok(cov)) = (curve_from_point(&f11, &alpha), cubic_cover(&f11, &alpha, JPlane::J(1))) else {
            continue;
        };
        match compare_with_curve(&f11, &cov, &c.sextic) {
            Ok(true) => agree += 1,
            Ok(false) => bad += 1,
            Err(Error::Degenerate { .. }) => degenerate += 1,
            Err(e) => return Err(e),
        }
    }
    let q = Rationals;
    let mut rational = 0;
    for t in [[1, 2, 3], [2, 5, -3], [-1, 4, 7], [3, -2, 1]] {
        let alpha = phi_eval(&q, &t.map(|x| q.from_i64(x)))?;
        for j in 1..=4 {
            let cov = cubic_cover(&q, &alpha, JPlane::J(j))?;
            let c = curve_from_point(&q, &alpha)?;
            if compare_with_curve(&q, &cov, &c.sextic)? {
                rational += 1;
            } else {
                bad += 1;
            }
        }
    }
    ok &= bad == 0 && agree >= 10 && rational >= 3;
    Ok((
        ok,
        format!("symbolic identities hold; GF(11): {agree} agree, {degenerate} degenerate covers; Q: {rational} (point, plane) pairs agree; {bad} disagree"),
    ))
}

/// Surrogates for the claims that cannot be checked at this scale.
fn criterion_9() -> Outcome {
    // rationality, pointwise: psi(phi(t)) = t wherever both are defined
    let f = FiniteField::prime(7)?;
    let (mut roundtrips, mut mismatches) = (0, 0);
    for t in burkhardt::projective::projective_points(&f, 4).filter(|v| v[0] == 1) {
        let Ok(y) = phi_eval(&f, &t[1..]) else { continue };
        let Ok((back, _)) = psi_eval(&f, &y) else { continue };
        if back.normalized().coords() == ProjPoint::new(&f, t.clone())?.normalized().coords() {
            roundtrips += 1;
        } else {
            mismatches += 1;
        }
    }
    // the rational j-planes lie in B and in He
    let planes = JPlane::all()
        .iter()
        .filter(|&&j| restrict_to_plane(burkhardt_form(), j).is_zero() && restrict_to_plane(hessian_form(), j).is_zero())
        .count();
    // single orbit: only the size of the census against the closed form
    let mut sizes = Vec::new();
    for q in [5, 11, 19] {
        let n = off_hessian_census(&FiniteField::prime(q)?, DEFAULT_SCAN_CAP)?.len();
        sizes.push((q, n, off_hessian_formula(q)?));
    }
    let ok = roundtrips > 0 && planes == 8 && sizes.iter().all(|(_, n, f)| *n as i128 == *f);
    Ok((
        ok,
        format!(
            "not reproduced: scheme-level rationality, all 40 j-planes over Q(zeta3), orbit structure; \
             surrogates: psi(phi(t)) = t at {roundtrips} points of GF(7)^3 ({mismatches} mismatches), \
             {planes}/8 rational j-planes in B and He, census sizes {sizes:?}"
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        failed += !ok as u32;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {n}: {verdict} ({:.2}s) {detail}", start.elapsed().as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
