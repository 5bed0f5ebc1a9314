//! The parametrization `phi: P^3 -> B`, its inverse `psi` (four
//! representatives), and point-level smoothness tests.

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::matrix::{det, rank};
use crate::algebra::parse::parse_poly_z;
use crate::algebra::poly::{vars, Monomial, MultiPoly, Vars};
use crate::algebra::ring::{Field, Integers, Ring};
use crate::burkhardt::{burkhardt_form, check_characteristic, gradient, y_vars};
use crate::data::{PHI, PSIS};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

pub fn t_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&["t0", "t1", "t2", "t3"])).clone()
}

pub fn affine_t_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&["t1", "t2", "t3"])).clone()
}

/// A rational map given by homogeneous components of a common degree.
#[derive(Clone, Debug)]
pub struct RationalMapRep {
    components: Vec<MultiPoly<Integers>>,
    degree: u32,
}

impl RationalMapRep {
    pub fn new(components: Vec<MultiPoly<Integers>>) -> Result<Self> {
        let first = components.first().ok_or(Error::ZeroPoint)?;
        let nvars = first.nvars();
        let mut degree = None;
        for c in &components {
            if c.nvars() != nvars {
                return Err(Error::VariableMismatch("components over different variables".into()));
            }
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::Precondition("component is not homogeneous".into()));
            }
            match degree {
                None => degree = c.degree(),
                Some(d) if Some(d) != c.degree() => {
                    return Err(Error::Precondition("components of different degrees".into()))
                }
                _ => {}
            }
        }
        let degree = degree.ok_or(Error::Precondition("all components vanish".into()))?;
        Ok(RationalMapRep { components, degree })
    }

    pub fn components(&self) -> &[MultiPoly<Integers>] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn domain_dim(&self) -> usize {
        self.components[0].nvars() - 1
    }

    pub fn codomain_dim(&self) -> usize {
        self.components.len() - 1
    }

    /// Component values at `pt`; `None` if they all vanish.
    pub fn eval<F: Field>(&self, field: &F, pt: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        let vals = self
            .components
            .iter()
            .map(|c| c.to_ring(field).eval(pt))
            .collect::<Result<Vec<_>>>()?;
        Ok(if vals.iter().all(|v| field.is_zero(v)) { None } else { Some(vals) })
    }
}

/// Multiply each term by a power of a new first variable so that `p`
/// becomes a form of degree `d` over `new_vars` (whose tail matches `p`'s
/// variables).
pub fn homogenize<R: Ring>(p: &MultiPoly<R>, new_vars: &Vars, d: u32) -> MultiPoly<R> {
    let n = p.nvars();
    let terms = p.terms().map(|(m, c)| {
        let mut e = vec![d - m.degree()];
        e.extend(m.exponents(n));
        (Monomial::from_exponents(&e), c.clone())
    });
    MultiPoly::from_terms(p.ring(), new_vars, terms)
}

/// The five components of `phi` in the affine chart, over `t1, t2, t3`.
pub fn phi_affine() -> &'static [MultiPoly<Integers>; 5] {
    static P: OnceLock<[MultiPoly<Integers>; 5]> = OnceLock::new();
    P.get_or_init(|| PHI.map(|s| parse_poly_z(s, &affine_t_vars()).expect("valid phi")))
}

/// `phi` as quartic forms in `t0..t3`.
pub fn phi_rep() -> &'static RationalMapRep {
    static P: OnceLock<RationalMapRep> = OnceLock::new();
    P.get_or_init(|| {
        let comps = phi_affine().iter().map(|p| homogenize(p, &t_vars(), 4)).collect();
        RationalMapRep::new(comps).expect("phi is homogeneous")
    })
}

/// The four representatives of `psi`, forms in `y0..y4`.
pub fn psi_reps() -> &'static [RationalMapRep; 4] {
    static P: OnceLock<[RationalMapRep; 4]> = OnceLock::new();
    P.get_or_init(|| {
        PSIS.map(|rep| {
            let comps = rep.iter().map(|s| parse_poly_z(s, &y_vars()).expect("valid psi")).collect();
            RationalMapRep::new(comps).expect("psi is homogeneous")
        })
    })
}

/// `phi(1 : t1 : t2 : t3)`.
pub fn phi_eval<F: Field>(field: &F, t: &[F::Elem]) -> Result<ProjPoint<F>> {
    check_characteristic(field.characteristic())?;
    if t.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: t.len() });
    }
    let vals = phi_affine()
        .iter()
        .map(|c| c.to_ring(field).eval(t))
        .collect::<Result<Vec<_>>>()?;
    if vals.iter().all(|v| field.is_zero(v)) {
        return Err(Error::BaseLocus);
    }
    ProjPoint::new(field, vals)
}

/// `psi(y)` from the first representative that does not vanish at `y`,
/// together with that representative's index (0-based).
pub fn psi_eval<F: Field>(field: &F, y: &ProjPoint<F>) -> Result<(ProjPoint<F>, usize)> {
    check_characteristic(field.characteristic())?;
    if y.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, got: y.len() });
    }
    let f = burkhardt_form().to_ring(field);
    if !field.is_zero(&f.eval(y.coords())?) {
        return Err(Error::NotOnQuartic);
    }
    for (i, rep) in psi_reps().iter().enumerate() {
        if let Some(v) = rep.eval(field, y.coords())? {
            return Ok((ProjPoint::new(field, v)?, i));
        }
    }
    Err(Error::BaseLocus)
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundtripReport {
    pub f_of_phi_vanishes: bool,
    /// One entry per representative: composes to `(1, t1, t2, t3)`.
    pub representatives: Vec<bool>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.f_of_phi_vanishes && self.representatives.iter().all(|&b| b)
    }
}

/// `f(phi(t)) = 0` and `psi_i(phi(t)) = c0 * (1, t1, t2, t3)` for each
/// representative, by exact division over Z.
pub fn verify_roundtrip() -> RoundtripReport {
    let phi = phi_affine();
    let f_phi = burkhardt_form().compose(phi);
    let tv = affine_t_vars();
    let targets: Vec<MultiPoly<Integers>> = std::iter::once(MultiPoly::one(&Integers, &tv))
        .chain((0..3).map(|i| MultiPoly::var(&Integers, &tv, i)))
        .collect();
    let representatives = psi_reps()
        .iter()
        .map(|rep| {
            let c: Vec<_> = rep.components().iter().map(|p| p.compose(phi)).collect();
            if c[0].is_zero() {
                return false;
            }
            c.iter().zip(&targets).all(|(ci, want)| ci.div_exact(&c[0]).as_ref() == Some(want))
        })
        .collect();
    RoundtripReport { f_of_phi_vanishes: f_phi.is_zero(), representatives }
}

/// Which side of the parametrization a smoothness test refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Phi,
    Psi,
}

fn jacobians() -> &'static (Vec<[MultiPoly<Integers>; 3]>, Vec<Vec<[MultiPoly<Integers>; 5]>>) {
    static J: OnceLock<(Vec<[MultiPoly<Integers>; 3]>, Vec<Vec<[MultiPoly<Integers>; 5]>>)> = OnceLock::new();
    J.get_or_init(|| {
        let phi = phi_affine().iter().map(|p| std::array::from_fn(|j| p.derivative(j))).collect();
        let psi = psi_reps()
            .iter()
            .map(|rep| {
                rep.components().iter().map(|p| std::array::from_fn(|j| p.derivative(j))).collect()
            })
            .collect();
        (phi, psi)
    })
}

/// `phi` side: at affine `t`, the 5x4 matrix with columns `xi, d xi/dt1,
/// d xi/dt2, d xi/dt3` has rank 4 (the differential of `t -> [xi(t)]` is
/// injective and `xi(t) != 0`).
///
/// `psi` side: for some representative, the 5x5 matrix of gradients of
/// `t0..t3` and `f` is nonsingular at `y`.
pub fn smooth_point_test<F: Field>(field: &F, point: &[F::Elem], side: Side) -> Result<bool> {
    check_characteristic(field.characteristic())?;
    let (jphi, jpsi) = jacobians();
    match side {
        Side::Phi => {
            if point.len() != 3 {
                return Err(Error::DimensionMismatch { expected: 3, got: point.len() });
            }
            let m = phi_affine()
                .iter()
                .zip(jphi)
                .map(|(p, d)| {
                    let mut row = vec![p.to_ring(field).eval(point)?];
                    for dj in d {
                        row.push(dj.to_ring(field).eval(point)?);
                    }
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(rank(field, &m) == 4)
        }
        Side::Psi => {
            if point.len() != 5 {
                return Err(Error::DimensionMismatch { expected: 5, got: point.len() });
            }
            let grad_f = gradient()
                .iter()
                .map(|g| g.to_ring(field).eval(point))
                .collect::<Result<Vec<_>>>()?;
            for rep in jpsi {
                let mut m = rep
                    .iter()
                    .map(|row| row.iter().map(|g| g.to_ring(field).eval(point)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                m.push(grad_f.clone());
                if !field.is_zero(&det(field, &m)?) {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FiniteField;
    use crate::algebra::ring::Rationals;

    #[test]
    fn phi_examples() {
        let q = Rationals;
        let t = |v: [i64; 3]| v.map(|x| q.from_i64(x));
        let p = phi_eval(&q, &t([0, 0, 0])).unwrap();
        assert_eq!(p, ProjPoint::from_ints(&q, &[-1, 1, 0, 0, 0]).unwrap());
        let p = phi_eval(&q, &t([0, 1, 0])).unwrap();
        assert_eq!(p, ProjPoint::from_ints(&q, &[-1, 1, -1, 0, 1]).unwrap());
        assert!(matches!(phi_eval(&q, &t([1, 0, 0])), Err(Error::BaseLocus)));
        assert!(!smooth_point_test(&q, &t([1, 0, 0]), Side::Phi).unwrap());
        assert!(smooth_point_test(&q, &t([0, 0, 0]), Side::Phi).unwrap());
    }

    #[test]
    fn psi_examples() {
        let q = Rationals;
        let y = ProjPoint::from_ints(&q, &[-1, 1, -1, 0, 1]).unwrap();
        let (t, _) = psi_eval(&q, &y).unwrap();
        assert_eq!(t, ProjPoint::from_ints(&q, &[1, 0, 1, 0]).unwrap());
        let y = ProjPoint::from_ints(&q, &[-1, 1, 0, 0, 0]).unwrap();
        let (t, i) = psi_eval(&q, &y).unwrap();
        assert_eq!(i, 0);
        assert_eq!(t.coords()[0], q.from_i64(-3));
        assert_eq!(t, ProjPoint::from_ints(&q, &[1, 0, 0, 0]).unwrap());
        let off = ProjPoint::from_ints(&q, &[1, 0, 0, 0, 0]).unwrap();
        assert!(matches!(psi_eval(&q, &off), Err(Error::NotOnQuartic)));
    }

    #[test]
    fn roundtrip_identities() {
        let r = verify_roundtrip();
        assert!(r.f_of_phi_vanishes);
        assert_eq!(r.representatives, vec![true; 4]);
    }

    #[test]
    fn homogenized_phi() {
        let rep = phi_rep();
        assert_eq!(rep.degree(), 4);
        assert_eq!(rep.domain_dim(), 3);
        assert_eq!(rep.codomain_dim(), 4);
        let f7 = FiniteField::prime(7).unwrap();
        let a = rep.eval(&f7, &[1, 2, 3, 4]).unwrap().unwrap();
        let b = phi_eval(&f7, &[2, 3, 4]).unwrap();
        assert_eq!(ProjPoint::new(&f7, a).unwrap(), b);
    }
}
