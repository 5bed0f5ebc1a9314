//! The plane cubic cut out on a j-plane by the first polar, its projection to
//! a line from a point, and the discriminant sextic of that triple cover.

use crate::algebra::binary::{cubic_discriminant, discriminant, form_coeffs};
use crate::algebra::igusa::{igusa_clebsch, igusa_weighted_equal};
use crate::algebra::parse::parse_poly_z;
use crate::algebra::poly::{vars, MultiPoly, Vars};
use crate::algebra::ring::{Field, Integers};
use crate::burkhardt::{ay_vars, polars, polars_symbolic, y_vars, JPlane};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

use super::curve::normalize_alpha;

pub fn wxz_vars() -> Vars {
    vars(&["w", "x", "z"])
}

/// `y0 = yi = 0` and the remaining indices in increasing order.
fn plane_indices(plane: JPlane) -> Result<(usize, [usize; 3])> {
    match plane {
        JPlane::J(i) if (1..=4).contains(&i) => {
            let i = i as usize;
            let o: Vec<usize> = (1..5).filter(|&k| k != i).collect();
            Ok((i, [o[0], o[1], o[2]]))
        }
        _ => Err(Error::Precondition(format!("cubic cover needs one of J1..J4, got {}", plane.label()))),
    }
}

/// `P1(alpha)` restricted to `y0 = yi = 0` with `alpha` symbolic equals
/// `a0 (yj^3 + yk^3 + yl^3) + 3 ai yj yk yl`.
pub fn verify_cubic_restriction(plane: JPlane) -> Result<bool> {
    let (i, [j, k, l]) = plane_indices(plane)?;
    let zero = num_bigint::BigInt::from(0);
    let p1 = polars_symbolic()[0].specialize(&[(5, zero.clone()), (5 + i, zero)]);
    let expect = parse_poly_z(
        &format!("a0*(y{j}^3 + y{k}^3 + y{l}^3) + 3*a{i}*y{j}*y{k}*y{l}"),
        &ay_vars(),
    )?;
    Ok(p1 == expect)
}

/// `disc_w(w^3 + 3 l H w + l G) = -27 l^2 (G^2 + 4 l H^3)` for a generic
/// quadratic `H` and cubic `G`.
pub fn verify_discriminant_identity() -> Result<bool> {
    let v = vars(&["h0", "h1", "h2", "g0", "g1", "g2", "g3", "l", "x", "z"]);
    let p = |s: &str| parse_poly_z(s, &v);
    let h = p("h0*x^2 + h1*x*z + h2*z^2")?;
    let g = p("g0*x^3 + g1*x^2*z + g2*x*z^2 + g3*z^3")?;
    let l = p("l")?;
    let one = MultiPoly::one(&Integers, &v);
    let zero = MultiPoly::zero(&Integers, &v);
    let disc = cubic_discriminant(&one, &zero, &l.mul(&h).scale_int(3), &l.mul(&g));
    let rhs = l.square().mul(&g.square().add(&l.mul(&h.pow(3)).scale_int(4))).scale_int(-27);
    Ok(disc == rhs)
}

/// The plane cubic, the cover cubic and its discriminant.
#[derive(Clone, Debug)]
pub struct CubicCover<F: Field> {
    /// `P1(alpha)` on the j-plane, in `y0..y4`.
    pub plane_cubic: MultiPoly<F>,
    /// Coefficients of `w^3, w^2, w, 1`, forms in `(x, z)` over `w, x, z`.
    pub cover: [MultiPoly<F>; 4],
    /// `disc_w` of the cover, a binary sextic with the `x^6` coefficient first.
    pub discriminant: Vec<F::Elem>,
}

/// Substitute `(yj : yk : yl) = (aj w : ak w + x : al w + z)` into the cubic
/// on `y0 = yi = 0`.
pub fn cubic_cover<F: Field>(field: &F, alpha: &ProjPoint<F>, plane: JPlane) -> Result<CubicCover<F>> {
    let (i, [j, k, l]) = plane_indices(plane)?;
    let a = normalize_alpha(field, alpha)?;
    let [p1, _, _] = polars(field, &a)?;
    let plane_cubic = p1.specialize(&[(0, field.zero()), (i, field.zero())]);
    let v = wxz_vars();
    let var = |n: usize| MultiPoly::var(field, &v, n);
    let mut subs = vec![MultiPoly::zero(field, &v); 5];
    subs[j] = var(0).scale(&a[j]);
    subs[k] = var(0).scale(&a[k]).add(&var(1));
    subs[l] = var(0).scale(&a[l]).add(&var(2));
    let sub = plane_cubic.compose(&subs);
    let c = sub.coefficients_in(0);
    let get = |d: usize| c.get(d).cloned().unwrap_or_else(|| MultiPoly::zero(field, &v));
    let lead = get(3);
    if lead.is_zero() {
        return Err(Error::Degenerate {
            label: plane.label(),
            reason: "projection center lies on the plane cubic".into(),
        });
    }
    let cover = [lead, get(2), get(1), get(0)];
    let disc = cubic_discriminant(&cover[0], &cover[1], &cover[2], &cover[3]);
    let discriminant = form_coeffs(&disc, 1, 2, 6)?;
    debug_assert_eq!(plane_cubic.vars(), &y_vars());
    Ok(CubicCover { plane_cubic, cover, discriminant })
}

/// Igusa-Clebsch invariants of the discriminant sextic and of `f` agree up
/// to weighted scaling. Characteristic 0 or at least 7. A singular
/// discriminant sextic (centre of projection on the Hessian of the plane
/// cubic, for instance) is reported as degenerate.
pub fn compare_with_curve<F: Field>(field: &F, cover: &CubicCover<F>, f: &[F::Elem]) -> Result<bool> {
    let p = field.characteristic();
    if p != 0 && p < 7 {
        return Err(Error::UnsupportedCharacteristic(p, "Igusa comparison needs characteristic 0 or >= 7"));
    }
    if field.is_zero(&discriminant(field, &cover.discriminant)?) {
        return Err(Error::Degenerate {
            label: "cover".into(),
            reason: "discriminant sextic has a repeated root".into(),
        });
    }
    let a = igusa_clebsch(field, &cover.discriminant)?;
    let b = igusa_clebsch(field, f)?;
    Ok(igusa_weighted_equal(field, &a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FiniteField;
    use crate::algebra::ring::{Rationals, Ring};
    use crate::maps::phi_eval;
    use crate::moduli::curve::curve_from_point;

    #[test]
    fn symbolic_identities() {
        for i in 1..=4 {
            assert!(verify_cubic_restriction(JPlane::J(i)).unwrap());
        }
        assert!(verify_discriminant_identity().unwrap());
        assert!(verify_cubic_restriction(JPlane::JPrime(1)).is_err());
    }

    #[test]
    fn igusa_agrees_over_q() {
        let q = Rationals;
        let t = [1, 2, 3].map(|x| q.from_i64(x));
        let alpha = phi_eval(&q, &t).unwrap();
        let cov = cubic_cover(&q, &alpha, JPlane::J(1)).unwrap();
        assert_eq!(cov.discriminant.len(), 7);
        let c = curve_from_point(&q, &alpha).unwrap();
        assert!(compare_with_curve(&q, &cov, &c.sextic).unwrap());
    }

    #[test]
    fn igusa_agrees_over_f11() {
        let f = FiniteField::prime(11).unwrap();
        let (mut agree, mut degenerate) = (0, 0);
        for y in crate::projective::projective_points(&f, 5).filter(|y| y[0] == 1) {
            let p = ProjPoint::new(&f, y).unwrap();
            let (Ok(c), Ok(cov)) = (curve_from_point(&f, &p), cubic_cover(&f, &p, JPlane::J(1))) else { continue };
            match compare_with_curve(&f, &cov, &c.sextic) {
                Ok(ok) => {
                    assert!(ok, "{:?}", p.coords());
                    agree += 1;
                }
                Err(Error::Degenerate { .. }) => degenerate += 1,
                Err(e) => panic!("{e}"),
            }
            if agree == 20 {
                break;
            }
        }
        assert_eq!(agree, 20);
        assert!(degenerate > 0);
    }
}
