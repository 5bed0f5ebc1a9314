//! Sweeps over the rational points of B off the Hessian.

use std::collections::BTreeMap;

use serde::Serialize;

use super::curve::{curve_from_point, level3_decompositions, verify_order3_certificate, LAMBDA_VANISHES};
use super::kummer::{jplane_tangency, nontangent_control_plane, symmetroid, tangency_check};
use crate::algebra::binary::discriminant;
use crate::algebra::compiled::CompiledPoly;
use crate::algebra::gf::FiniteField;
use crate::algebra::ring::Ring;
use crate::burkhardt::{check_characteristic, f_raw, hessian_form, JPlane};
use crate::error::{Error, Result};
use crate::projective::{par_filter_points, projective_size, ProjPoint};
use crate::zeta::DEFAULT_SCAN_CAP;

/// Points of `(B \ He)(GF(q))`, normalized and sorted.
pub fn off_hessian_census(field: &FiniteField, cap: u128) -> Result<Vec<ProjPoint<FiniteField>>> {
    check_characteristic(field.p())?;
    let points = projective_size(field.order(), 5);
    if points > cap {
        return Err(Error::CapExceeded { points, cap });
    }
    let he = CompiledPoly::from_integer(hessian_form(), field);
    par_filter_points(field, 5, |y| f_raw(field, y) == 0 && he.eval(y) != 0)
        .into_iter()
        .map(|y| ProjPoint::new(field, y))
        .collect()
}

/// Why a census point was left out of the certificate sweep.
fn skip_reason(e: &Error) -> Option<String> {
    match e {
        Error::Coordinate(m) if m.contains("alpha0") => Some("alpha0 = 0".into()),
        Error::Coordinate(m) if m.contains("alpha4") => Some("alpha4 = 0".into()),
        Error::Degenerate { label, reason } if reason == LAMBDA_VANISHES => Some(format!("lambda vanishes ({label})")),
        Error::Degenerate { label, reason } if reason.contains("denominator") => {
            Some(format!("denominator vanishes ({label})"))
        }
        _ => None,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CertificateSweep {
    pub q: u64,
    pub census: usize,
    pub admissible: usize,
    pub passed: usize,
    pub skipped: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl CertificateSweep {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.admissible
    }
}

/// `Ok(all checks pass)` at an admissible point. `Err(reason)` when the point
/// is skipped; a leading `!` marks an unexpected error instead.
pub fn certificates_at(field: &FiniteField, alpha: &ProjPoint<FiniteField>) -> std::result::Result<bool, String> {
    let a = alpha.coords();
    if field.is_zero(&a[0]) {
        return Err("alpha0 = 0".into());
    }
    if field.is_zero(&a[4]) {
        return Err("alpha4 = 0".into());
    }
    let decs = level3_decompositions(field, alpha).map_err(|e| skip_reason(&e).unwrap_or_else(|| format!("!{e}")))?;
    let curve = curve_from_point(field, alpha).map_err(|e| skip_reason(&e).unwrap_or_else(|| format!("!{e}")))?;
    let disc_ok = !field.is_zero(&discriminant(field, &curve.sextic).map_err(|e| format!("!{e}"))?);
    let mut ok = disc_ok;
    for d in &decs {
        ok &= verify_order3_certificate(field, &curve.sextic, d).map_err(|e| format!("!{e}"))?.passed();
    }
    Ok(ok)
}

/// Certificates at every admissible census point.
pub fn certificate_sweep(field: &FiniteField) -> Result<CertificateSweep> {
    let census = off_hessian_census(field, DEFAULT_SCAN_CAP)?;
    let mut out = CertificateSweep { q: field.order(), census: census.len(), ..Default::default() };
    for alpha in &census {
        match certificates_at(field, alpha) {
            Ok(ok) => {
                out.admissible += 1;
                if ok {
                    out.passed += 1;
                } else {
                    out.failures.push(format!("{alpha}"));
                }
            }
            Err(reason) if reason.starts_with('!') => {
                out.admissible += 1;
                out.failures.push(format!("{alpha}: {}", &reason[1..]));
            }
            Err(reason) => *out.skipped.entry(reason).or_default() += 1,
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TangencySweep {
    pub q: u64,
    pub points: usize,
    /// Points where all of J1..J4 project to tangent planes.
    pub all_tangent: usize,
    /// Points where each tangency is at a smooth point of the symmetroid.
    pub smooth_contact: usize,
    pub failures: Vec<String>,
    /// A plane `h . eta = 0` certified non-tangent at the first point.
    pub control_plane: Option<Vec<u32>>,
    pub control_rejected: bool,
}

impl TangencySweep {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.all_tangent == self.points && self.control_rejected
    }
}

/// Tangency of the four projected planes at the first `limit` census points
/// with `alpha0 != 0`, plus one control plane.
pub fn tangency_sweep(field: &FiniteField, limit: usize, depth: u32) -> Result<TangencySweep> {
    let census = off_hessian_census(field, DEFAULT_SCAN_CAP)?;
    let mut out = TangencySweep { q: field.order(), ..Default::default() };
    for alpha in census.iter().filter(|a| !field.is_zero(&a.coords()[0])).take(limit) {
        out.points += 1;
        let mut all = true;
        let mut smooth = true;
        for i in 1..=4 {
            match jplane_tangency(field, alpha, JPlane::J(i), depth) {
                Ok(r) => {
                    all &= r.tangent;
                    smooth &= r.smooth_contact;
                }
                Err(e) => {
                    all = false;
                    out.failures.push(format!("{alpha} J{i}: {e}"));
                }
            }
        }
        if all {
            out.all_tangent += 1;
        } else {
            out.failures.push(format!("{alpha}: not tangent"));
        }
        out.smooth_contact += smooth as usize;
        if out.control_plane.is_none() {
            let (quartic, _) = symmetroid(field, alpha.coords())?;
            if let Some((h, plane)) = nontangent_control_plane(field, &quartic, depth)? {
                out.control_rejected = !tangency_check(field, &quartic, &plane, depth)?.tangent;
                out.control_plane = Some(h);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_sizes() {
        assert_eq!(off_hessian_census(&FiniteField::prime(5).unwrap(), DEFAULT_SCAN_CAP).unwrap().len(), 42);
        assert!(off_hessian_census(&FiniteField::prime(7).unwrap(), DEFAULT_SCAN_CAP).unwrap().is_empty());
        assert!(matches!(
            off_hessian_census(&FiniteField::prime(5).unwrap(), 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn sweep_over_f5() {
        let s = certificate_sweep(&FiniteField::prime(5).unwrap()).unwrap();
        assert!(s.ok(), "{s:?}");
        assert!(s.admissible > 0);
        assert_eq!(s.admissible + s.skipped.values().sum::<usize>(), 42);
        let t = tangency_sweep(&FiniteField::prime(5).unwrap(), 10, 2).unwrap();
        assert!(t.ok(), "{t:?}");
        assert_eq!(t.points, 10);
    }
}
