//! Curve models at points of B and their order-3 certificates.

use serde::Serialize;

use super::symbolic::{explicit_triple, hlg_triples, Triple, X_INDEX};
use crate::algebra::binary::{discriminant, mul_forms, resultant, univariate_coeffs};
use crate::algebra::ring::Field;
use crate::burkhardt::{burkhardt_form, check_characteristic, hessian_form};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

pub const LAMBDA_VANISHES: &str = "lambda vanishes";

/// Labels of the five decompositions, in data order.
pub const LABELS: [&str; 5] = ["J1", "J2", "J3", "J4", "J4'"];

/// `F = d (G^2 + 4 lambda H^3)`, forms with the `x`-power coefficient first.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F: Field> {
    pub label: String,
    pub d: i64,
    pub h: Vec<F::Elem>,
    pub lambda: F::Elem,
    pub g: Vec<F::Elem>,
}

impl<F: Field> Decomposition<F> {
    /// `d (G^2 + 4 lambda H^3)`.
    pub fn sextic(&self, field: &F) -> Vec<F::Elem> {
        let g2 = mul_forms(field, &self.g, &self.g);
        let h3 = mul_forms(field, &mul_forms(field, &self.h, &self.h), &self.h);
        let four_l = field.mul(&field.from_i64(4), &self.lambda);
        let d = field.from_i64(self.d);
        g2.iter().zip(&h3).map(|(a, b)| field.mul(&d, &field.add(a, &field.mul(&four_l, b)))).collect()
    }

    /// The same certificate for twist `d s^2`: `G -> G/s`, `lambda -> lambda/s^2`.
    pub fn twist_by_square(&self, field: &F, s: i64) -> Result<Self> {
        let si = field.inv(&field.from_i64(s)).ok_or(Error::DivisionByZero)?;
        let si2 = field.mul(&si, &si);
        Ok(Decomposition {
            label: self.label.clone(),
            d: self.d * s * s,
            h: self.h.clone(),
            lambda: field.mul(&self.lambda, &si2),
            g: self.g.iter().map(|c| field.mul(c, &si)).collect(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModelFlavor {
    /// `y^2 = F(x, z)`
    Sextic,
    /// `y^2 + G y = lambda H^3`
    Integral,
}

#[derive(Clone, Debug)]
pub struct CurveModel<F: Field> {
    pub field: F,
    pub sextic: Vec<F::Elem>,
    /// `(G, H, lambda)` with `G^2 + 4 lambda H^3 = F`.
    pub presentation: Option<(Vec<F::Elem>, Vec<F::Elem>, F::Elem)>,
    pub flavor: ModelFlavor,
}

/// `alpha` scaled to `alpha0 = 1` after checking it lies on B, off the
/// Hessian, with `alpha0 != 0`.
pub fn normalize_alpha<F: Field>(field: &F, alpha: &ProjPoint<F>) -> Result<Vec<F::Elem>> {
    check_characteristic(field.characteristic())?;
    if alpha.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, got: alpha.len() });
    }
    let a = alpha.coords();
    if !field.is_zero(&burkhardt_form().to_ring(field).eval(a)?) {
        return Err(Error::NotOnQuartic);
    }
    if field.is_zero(&hessian_form().to_ring(field).eval(a)?) {
        return Err(Error::OnHessian);
    }
    alpha.dehomogenize(0).ok_or_else(|| Error::Coordinate("alpha0 must be nonzero".into()))
}

fn specialize_part<F: Field>(
    field: &F,
    part: &crate::algebra::ratfunc::RatFunc<crate::algebra::ring::Integers>,
    a: &[F::Elem],
    degree: u32,
    label: &str,
) -> Result<Vec<F::Elem>> {
    let assign: Vec<(usize, F::Elem)> = (0..4).map(|i| (i, a[i + 1].clone())).collect();
    let num = part.numer().to_ring(field).specialize(&assign);
    let den = part.denom().to_ring(field).specialize(&assign);
    let num = univariate_coeffs(&num, X_INDEX, degree)?;
    let den = univariate_coeffs(&den, X_INDEX, 0).map_err(|_| Error::Degenerate {
        label: label.to_string(),
        reason: "denominator depends on X after specialization".into(),
    })?;
    let inv = field.inv(&den[0]).ok_or_else(|| Error::Degenerate {
        label: label.to_string(),
        reason: "a denominator vanishes at alpha".into(),
    })?;
    Ok(num.iter().map(|c| field.mul(c, &inv)).collect())
}

/// `(H, lambda, G)` at normalized `a = (1, a1, .., a4)`.
pub fn specialize_triple<F: Field>(
    field: &F,
    t: &Triple,
    a: &[F::Elem],
    label: &str,
) -> Result<(Vec<F::Elem>, F::Elem, Vec<F::Elem>)> {
    let h = specialize_part(field, &t[0], a, 2, label)?;
    let l = specialize_part(field, &t[1], a, 0, label)?.remove(0);
    let g = specialize_part(field, &t[2], a, 3, label)?;
    Ok((h, l, g))
}

/// The genus-2 curve at `alpha` from the explicit triple. Requires
/// `alpha0 alpha4 != 0` and `alpha` on B off the Hessian.
pub fn curve_from_point<F: Field>(field: &F, alpha: &ProjPoint<F>) -> Result<CurveModel<F>> {
    let a = normalize_alpha(field, alpha)?;
    if field.is_zero(&a[4]) {
        return Err(Error::Coordinate("alpha4 must be nonzero".into()));
    }
    let (h, l, g) = specialize_triple(field, explicit_triple(), &a, "J3")?;
    if field.is_zero(&l) {
        return Err(Error::Degenerate { label: "J3".into(), reason: LAMBDA_VANISHES.into() });
    }
    let dec = Decomposition { label: "J3".into(), d: 1, h: h.clone(), lambda: l.clone(), g: g.clone() };
    let sextic = dec.sextic(field);
    let flavor = if field.characteristic() == 2 {
        ModelFlavor::Integral
    } else {
        if field.is_zero(&discriminant(field, &sextic)?) {
            return Err(Error::Degenerate { label: "J3".into(), reason: "sextic has a repeated root".into() });
        }
        ModelFlavor::Sextic
    };
    Ok(CurveModel { field: field.clone(), sextic, presentation: Some((g, h, l)), flavor })
}

/// The five decompositions at `alpha` (`J1..J4` with `d = 1`, `J4'` with
/// `d = -3`). The dual data satisfies `G'^2 + 4 lambda' H'^3 = -3 F`; it is
/// stored as `(H', lambda'/9, G'/3)` so that `d (G^2 + 4 lambda H^3) = F`.
pub fn level3_decompositions<F: Field>(field: &F, alpha: &ProjPoint<F>) -> Result<Vec<Decomposition<F>>> {
    let a = normalize_alpha(field, alpha)?;
    let third = field.inv(&field.from_i64(3)).ok_or(Error::CharacteristicThree)?;
    hlg_triples()
        .iter()
        .zip(LABELS)
        .map(|(t, label)| {
            let (h, l, g) = specialize_triple(field, t, &a, label)?;
            Ok(if label == "J4'" {
                Decomposition {
                    label: label.into(),
                    d: -3,
                    h,
                    lambda: field.mul(&l, &field.mul(&third, &third)),
                    g: g.iter().map(|c| field.mul(c, &third)).collect(),
                }
            } else {
                Decomposition { label: label.into(), d: 1, h, lambda: l, g }
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub label: String,
    pub identity: bool,
    pub lambda_nonzero: bool,
    pub coprime: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.identity && self.lambda_nonzero && self.coprime
    }
}

/// `d (G^2 + 4 lambda H^3) = F`, `lambda != 0` and `Res(H, G) != 0`.
pub fn verify_order3_certificate<F: Field>(
    field: &F,
    sextic: &[F::Elem],
    dec: &Decomposition<F>,
) -> Result<CertificateCheck> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2, "certificates need odd characteristic"));
    }
    if sextic.len() != 7 || dec.h.len() != 3 || dec.g.len() != 4 {
        return Err(Error::DimensionMismatch { expected: 7, got: sextic.len() });
    }
    Ok(CertificateCheck {
        label: dec.label.clone(),
        identity: dec.sextic(field) == sextic,
        lambda_nonzero: !field.is_zero(&dec.lambda),
        coprime: !field.is_zero(&resultant(field, &dec.h, &dec.g)?),
    })
}
