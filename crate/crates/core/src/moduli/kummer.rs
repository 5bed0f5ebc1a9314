//! Coble's quadrics, the Weddle surface, the symmetroid with its trope,
//! j-plane tangency and the line attached to a degree-2 divisor.

use serde::Serialize;

use crate::algebra::compiled::CompiledPoly;
use crate::algebra::gf::FiniteField;
use crate::algebra::matrix::{det_bareiss, nullspace};
use crate::algebra::poly::{vars, MultiPoly, Vars};
use crate::algebra::ring::Field;
use crate::burkhardt::{check_characteristic, JPlane};
use crate::error::{Error, Result};
use crate::projective::{par_filter_points, LinearSubspace, ProjPoint};

pub fn z_vars() -> Vars {
    vars(&["z0", "z1", "z2", "z3"])
}

pub fn x_vars() -> Vars {
    vars(&["x0", "x1", "x2", "x3"])
}

pub fn eta_vars() -> Vars {
    vars(&["eta1", "eta2", "eta3", "eta4"])
}

/// Four quadratic forms in four variables.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricSystem<F: Field> {
    pub quadrics: [MultiPoly<F>; 4],
}

impl<F: Field> QuadricSystem<F> {
    pub fn field(&self) -> &F {
        self.quadrics[0].ring()
    }

    pub fn vars(&self) -> &Vars {
        self.quadrics[0].vars()
    }

    pub fn vanishes_at(&self, pt: &[F::Elem]) -> Result<bool> {
        for q in &self.quadrics {
            if !self.field().is_zero(&q.eval(pt)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

}

impl QuadricSystem<FiniteField> {
    /// Common zeros in P^3 over `big`, which must contain the coefficient field.
    pub fn base_points(&self, big: &FiniteField) -> Result<Vec<Vec<u32>>> {
        let table = self.field().embedding_into(big)?;
        let compiled: Vec<CompiledPoly> = self
            .quadrics
            .iter()
            .map(|q| Ok(CompiledPoly::new(&embed(q, big, &table)?)))
            .collect::<Result<_>>()?;
        Ok(par_filter_points(big, 4, |v| compiled.iter().all(|c| c.eval(v) == 0)))
    }
}

fn embed(p: &MultiPoly<FiniteField>, big: &FiniteField, table: &[u32]) -> Result<MultiPoly<FiniteField>> {
    p.try_map(big, |c| Ok(table[*c as usize]))
}

fn quad<F: Field>(field: &F, v: &Vars, terms: &[(F::Elem, [u32; 4])]) -> MultiPoly<F> {
    MultiPoly::from_terms(
        field,
        v,
        terms.iter().map(|(c, e)| (crate::algebra::poly::Monomial::from_exponents(e), c.clone())),
    )
}

/// Coble's four quadrics in `z0..z3` at `alpha`.
pub fn coble_quadrics<F: Field>(field: &F, alpha: &[F::Elem]) -> Result<QuadricSystem<F>> {
    if alpha.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, got: alpha.len() });
    }
    let v = z_vars();
    let a = |i: usize| alpha[i].clone();
    let n = |i: usize| field.neg(&alpha[i]);
    let q1 = quad(field, &v, &[(a(0), [2, 0, 0, 0]), (n(2), [0, 0, 1, 1]), (n(3), [0, 1, 0, 1]), (n(4), [0, 1, 1, 0])]);
    let q2 = quad(field, &v, &[(a(0), [0, 2, 0, 0]), (a(1), [0, 0, 1, 1]), (a(3), [1, 0, 0, 1]), (n(4), [1, 0, 1, 0])]);
    let q3 = quad(field, &v, &[(a(0), [0, 0, 2, 0]), (a(1), [0, 1, 0, 1]), (n(2), [1, 0, 0, 1]), (a(4), [1, 1, 0, 0])]);
    let q4 = quad(field, &v, &[(a(0), [0, 0, 0, 2]), (a(1), [0, 1, 1, 0]), (a(2), [1, 0, 1, 0]), (n(3), [1, 1, 0, 0])]);
    Ok(QuadricSystem { quadrics: [q1, q2, q3, q4] })
}

/// `Q1 = x0x2 - x1^2, Q2 = x0x3 - x1x2, Q3 = x1x3 - x2^2` and
/// `Q4 = f0x0^2 + f1x0x1 + f2x1^2 + f3x1x2 + f4x2^2 + f5x2x3 + f6x3^2`.
pub fn standard_quadrics<F: Field>(field: &F, f: &[F::Elem]) -> Result<QuadricSystem<F>> {
    if f.len() != 7 {
        return Err(Error::DimensionMismatch { expected: 7, got: f.len() });
    }
    let v = x_vars();
    let one = field.one();
    let m1 = field.neg(&one);
    let q1 = quad(field, &v, &[(one.clone(), [1, 0, 1, 0]), (m1.clone(), [0, 2, 0, 0])]);
    let q2 = quad(field, &v, &[(one.clone(), [1, 0, 0, 1]), (m1.clone(), [0, 1, 1, 0])]);
    let q3 = quad(field, &v, &[(one, [0, 1, 0, 1]), (m1, [0, 0, 2, 0])]);
    let exps = [[2, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [0, 0, 2, 0], [0, 0, 1, 1], [0, 0, 0, 2]];
    let terms: Vec<(F::Elem, [u32; 4])> = f.iter().cloned().zip(exps).collect();
    let q4 = quad(field, &v, &terms);
    Ok(QuadricSystem { quadrics: [q1, q2, q3, q4] })
}

/// `det(dQ_i / dz_j)`, a quartic.
pub fn weddle_surface<F: Field>(sys: &QuadricSystem<F>) -> Result<MultiPoly<F>> {
    let m: Vec<Vec<MultiPoly<F>>> =
        sys.quadrics.iter().map(|q| (0..4).map(|j| q.derivative(j)).collect()).collect();
    det_bareiss(&m)
}

/// Symmetric matrix of `sum eta_i Q_i`, entries linear in `eta1..eta4`.
fn pencil_matrix<F: Field>(sys: &QuadricSystem<F>) -> Result<Vec<Vec<MultiPoly<F>>>> {
    let field = sys.field();
    let two = field.from_i64(2);
    let half = field.inv(&two).ok_or(Error::UnsupportedCharacteristic(2, "quadric Gram matrices need 1/2"))?;
    let ev = eta_vars();
    let mut m = vec![vec![MultiPoly::zero(field, &ev); 4]; 4];
    for (i, q) in sys.quadrics.iter().enumerate() {
        let eta = MultiPoly::var(field, &ev, i);
        for (j, row) in m.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                let c = field.mul(&q.derivative(j).derivative(k).constant_term(), &half);
                *cell = cell.add(&eta.scale(&c));
            }
        }
    }
    Ok(m)
}

/// `det(sum eta_i Q_i)` in `eta1..eta4` and the trope
/// `(a0a1^2 + a2a3a4, a0a2^2 + a1a3a4, a0a3^2 + a1a2a4, a0a4^2 + a1a2a3)`.
pub fn symmetroid<F: Field>(field: &F, alpha: &[F::Elem]) -> Result<(MultiPoly<F>, LinearSubspace<F>)> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic(2, "the symmetroid needs odd characteristic"));
    }
    let sys = coble_quadrics(field, alpha)?;
    let quartic = det_bareiss(&pencil_matrix(&sys)?)?;
    let t = trope(field, alpha)?;
    let plane = LinearSubspace::from_equations(field, &[t.to_vec()], 4)?;
    Ok((quartic, plane))
}

/// Coefficients of the trope plane.
pub fn trope<F: Field>(field: &F, alpha: &[F::Elem]) -> Result<[F::Elem; 4]> {
    if alpha.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, got: alpha.len() });
    }
    let a = alpha;
    let m = |x: &F::Elem, y: &F::Elem, z: &F::Elem| field.mul(&field.mul(x, y), z);
    Ok([
        field.add(&m(&a[0], &a[1], &a[1]), &m(&a[2], &a[3], &a[4])),
        field.add(&m(&a[0], &a[2], &a[2]), &m(&a[1], &a[3], &a[4])),
        field.add(&m(&a[0], &a[3], &a[3]), &m(&a[1], &a[2], &a[4])),
        field.add(&m(&a[0], &a[4], &a[4]), &m(&a[1], &a[2], &a[3])),
    ])
}

/// Projection from `alpha` onto `y0 = 0`: `y -> y - (y0/alpha0) alpha`, then
/// drop `y0`.
pub fn project_point<F: Field>(field: &F, alpha: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let r = field.div(&y[0], &alpha[0]).ok_or_else(|| Error::Coordinate("alpha0 must be nonzero".into()))?;
    Ok((1..5).map(|i| field.sub(&y[i], &field.mul(&r, &alpha[i]))).collect())
}

/// The image of a rational j-plane under projection from `alpha`.
pub fn project_jplane<F: Field>(field: &F, alpha: &ProjPoint<F>, plane: JPlane) -> Result<LinearSubspace<F>> {
    check_characteristic(field.characteristic())?;
    let a = alpha.coords();
    if plane.contains(field, a) {
        return Err(Error::Precondition(format!("alpha lies on {}", plane.label())));
    }
    let rows = plane
        .basis()
        .iter()
        .map(|b| {
            let b: Vec<F::Elem> = b.iter().map(|&c| field.from_i64(c)).collect();
            project_point(field, a, &b)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearSubspace::new(field, rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyReport {
    pub tangent: bool,
    /// Smallest `j` with a singular point over the degree-`j` extension.
    pub degree: Option<u32>,
    /// Singular points of the restricted quartic in plane coordinates,
    /// encoded in the degree-`j` extension.
    pub points: Vec<Vec<u32>>,
    /// The same points in `eta` coordinates.
    pub eta_points: Vec<Vec<u32>>,
    /// Some found point is a smooth point of the surface, so the plane is a
    /// genuine tangent plane rather than a plane through a node.
    pub smooth_contact: bool,
}

/// Restrict `quartic` (in `eta1..eta4`) to `plane` and look for a singular
/// point of the plane quartic over `GF(q^j)`, `j = 1..=m`.
pub fn tangency_check(
    field: &FiniteField,
    quartic: &MultiPoly<FiniteField>,
    plane: &LinearSubspace<FiniteField>,
    m: u32,
) -> Result<TangencyReport> {
    if plane.basis().len() != 3 || plane.ambient_len() != 4 {
        return Err(Error::DimensionMismatch { expected: 3, got: plane.basis().len() });
    }
    let sv = vars(&["s0", "s1", "s2"]);
    let subs: Vec<MultiPoly<FiniteField>> = (0..4)
        .map(|k| {
            (0..3).fold(MultiPoly::zero(field, &sv), |acc, r| {
                acc.add(&MultiPoly::var(field, &sv, r).scale(&plane.basis()[r][k]))
            })
        })
        .collect();
    let restricted = quartic.compose(&subs);
    if restricted.is_zero() {
        return Err(Error::Degenerate {
            label: "plane".into(),
            reason: "plane lies in the symmetroid".into(),
        });
    }
    let partials: Vec<MultiPoly<FiniteField>> = (0..3).map(|i| restricted.derivative(i)).collect();
    for j in 1..=m {
        let big = if j == 1 { field.clone() } else { FiniteField::new(field.p(), field.degree() * j, None)? };
        let table = field.embedding_into(&big)?;
        let comp: Vec<CompiledPoly> =
            partials.iter().map(|p| Ok(CompiledPoly::new(&embed(p, &big, &table)?))).collect::<Result<_>>()?;
        let val = CompiledPoly::new(&embed(&restricted, &big, &table)?);
        let found = par_filter_points(&big, 3, |s| val.eval(s) == 0 && comp.iter().all(|c| c.eval(s) == 0));
        if !found.is_empty() {
            let basis: Vec<Vec<u32>> =
                plane.basis().iter().map(|r| r.iter().map(|&c| table[c as usize]).collect()).collect();
            let eta_points = found
                .iter()
                .map(|s| {
                    let v: Vec<u32> = (0..4)
                        .map(|k| (0..3).fold(0, |acc, r| big.add_raw(acc, big.mul_raw(s[r], basis[r][k]))))
                        .collect();
                    ProjPoint::new(&big, v).map(|p| p.normalized().coords().to_vec())
                })
                .collect::<Result<Vec<_>>>()?;
            let grad: Vec<CompiledPoly> = (0..4)
                .map(|k| Ok(CompiledPoly::new(&embed(&quartic.derivative(k), &big, &table)?)))
                .collect::<Result<_>>()?;
            let smooth_contact = eta_points.iter().any(|e| grad.iter().any(|g| g.eval(e) != 0));
            return Ok(TangencyReport { tangent: true, degree: Some(j), points: found, eta_points, smooth_contact });
        }
    }
    Ok(TangencyReport { tangent: false, degree: None, points: vec![], eta_points: vec![], smooth_contact: false })
}

/// Tangency of the projected j-plane to the symmetroid at `alpha`.
pub fn jplane_tangency(field: &FiniteField, alpha: &ProjPoint<FiniteField>, plane: JPlane, m: u32) -> Result<TangencyReport> {
    let (quartic, _) = symmetroid(field, alpha.coords())?;
    let img = project_jplane(field, alpha, plane)?;
    tangency_check(field, &quartic, &img, m)
}

/// The first plane `h . eta = 0` (in enumeration order of `h`) whose section
/// of the symmetroid has no singular point up to degree `m`.
pub fn nontangent_control_plane(
    field: &FiniteField,
    quartic: &MultiPoly<FiniteField>,
    m: u32,
) -> Result<Option<(Vec<u32>, LinearSubspace<FiniteField>)>> {
    for h in crate::projective::projective_points(field, 4) {
        let basis = nullspace(field, &[h.clone()], 4);
        let plane = LinearSubspace::new(field, basis)?;
        match tangency_check(field, quartic, &plane, m) {
            Ok(r) if !r.tangent => return Ok(Some((h, plane))),
            Ok(_) | Err(Error::Degenerate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Two points `(x : z)` on the x-line.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisorPair<F: Field> {
    pub first: (F::Elem, F::Elem),
    pub second: (F::Elem, F::Elem),
}

/// `(z1z2 : x1z2 + x2z1 : x1x2)`.
pub fn trope_line_of_divisor<F: Field>(field: &F, d: &DivisorPair<F>) -> [F::Elem; 3] {
    let (x1, z1) = &d.first;
    let (x2, z2) = &d.second;
    [
        field.mul(z1, z2),
        field.add(&field.mul(x1, z2), &field.mul(x2, z1)),
        field.mul(x1, x2),
    ]
}

/// `(z^2 : -xz : x^2)` on the conic `eta1 eta3 = eta2^2`.
pub fn conic_point<F: Field>(field: &F, x: &F::Elem, z: &F::Elem) -> [F::Elem; 3] {
    [field.mul(z, z), field.neg(&field.mul(x, z)), field.mul(x, x)]
}

/// `xi1 eta3 + xi2 eta2 + xi3 eta1`.
pub fn reversed_pairing<F: Field>(field: &F, xi: &[F::Elem; 3], eta: &[F::Elem; 3]) -> F::Elem {
    let a = field.mul(&xi[0], &eta[2]);
    let b = field.mul(&xi[1], &eta[1]);
    let c = field.mul(&xi[2], &eta[0]);
    field.add(&field.add(&a, &b), &c)
}

/// Both conic points of `d` lie on the line of `d`, and the line is defined.
pub fn verify_divisor_line<F: Field>(field: &F, d: &DivisorPair<F>) -> bool {
    let nonzero = |p: &(F::Elem, F::Elem)| !(field.is_zero(&p.0) && field.is_zero(&p.1));
    if !nonzero(&d.first) || !nonzero(&d.second) {
        return false;
    }
    let xi = trope_line_of_divisor(field, d);
    if xi.iter().all(|c| field.is_zero(c)) {
        return false;
    }
    [&d.first, &d.second].iter().all(|(x, z)| field.is_zero(&reversed_pairing(field, &xi, &conic_point(field, x, z))))
}

/// Whether the line `xi` is tangent to the conic: `xi2^2 - 4 xi1 xi3 = 0`.
pub fn line_tangent_to_conic<F: Field>(field: &F, xi: &[F::Elem; 3]) -> bool {
    let d = field.sub(&field.mul(&xi[1], &xi[1]), &field.mul(&field.from_i64(4), &field.mul(&xi[0], &xi[2])));
    field.is_zero(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binary::eval_form;
    use crate::algebra::ring::{Rationals, Ring};
    use crate::burkhardt::{f_raw, hessian_form};

    fn census(field: &FiniteField) -> Vec<ProjPoint<FiniteField>> {
        let he = CompiledPoly::from_integer(hessian_form(), field);
        par_filter_points(field, 5, |y| y[0] == 1 && f_raw(field, y) == 0 && he.eval(y) != 0)
            .into_iter()
            .map(|y| ProjPoint::new(field, y).unwrap())
            .collect()
    }

    #[test]
    fn weddle_is_a_quartic() {
        let q = Rationals;
        let a: Vec<_> = [1, 2, -1, 3, 5].iter().map(|&x| q.from_i64(x)).collect();
        let w = weddle_surface(&coble_quadrics(&q, &a).unwrap()).unwrap();
        assert!(w.is_homogeneous());
        assert_eq!(w.degree(), Some(4));
        let (s, trope) = symmetroid(&q, &a).unwrap();
        assert_eq!(s.degree(), Some(4));
        assert_eq!(trope.dim(), 2);
    }

    #[test]
    fn projection_fixes_y0_zero() {
        let f = FiniteField::prime(5).unwrap();
        let alpha = census(&f)[0].clone();
        let y = [0, 1, 2, 3, 4];
        assert_eq!(project_point(&f, alpha.coords(), &y).unwrap(), vec![1, 2, 3, 4]);
        let p1 = project_jplane(&f, &alpha, JPlane::J(1)).unwrap();
        let p2 = project_jplane(&f, &alpha, JPlane::J(2)).unwrap();
        assert_eq!(p1.dim(), 2);
        assert_ne!(p1, p2);
    }

    #[test]
    fn jplanes_are_tangent() {
        let f = FiniteField::prime(5).unwrap();
        let alpha = ProjPoint::from_ints(&f, &[1, 1, 1, 1, 3]).unwrap();
        let (quartic, _) = symmetroid(&f, alpha.coords()).unwrap();
        let r1 = jplane_tangency(&f, &alpha, JPlane::J(1), 1).unwrap();
        let r3 = jplane_tangency(&f, &alpha, JPlane::J(3), 1).unwrap();
        assert!(r1.tangent && r3.tangent);
        assert!(r1.smooth_contact && r3.smooth_contact);
        // a plane through a node only
        let special = ProjPoint::from_ints(&f, &[1, 1, 2, 2, 2]).unwrap();
        let r = jplane_tangency(&f, &special, JPlane::J(2), 1).unwrap();
        assert!(r.tangent && !r.smooth_contact);
        assert_ne!(r1.eta_points, r3.eta_points);
        let (_, control) = nontangent_control_plane(&f, &quartic, 2).unwrap().unwrap();
        assert!(!tangency_check(&f, &quartic, &control, 2).unwrap().tangent);
    }

    #[test]
    fn coble_base_points_on_weddle() {
        let f = FiniteField::prime(5).unwrap();
        let alpha = census(&f)[0].clone();
        let sys = coble_quadrics(&f, alpha.coords()).unwrap();
        let w = weddle_surface(&sys).unwrap();
        let big = FiniteField::new(5, 2, None).unwrap();
        let table = f.embedding_into(&big).unwrap();
        let wc = CompiledPoly::new(&embed(&w, &big, &table).unwrap());
        for p in sys.base_points(&big).unwrap() {
            assert_eq!(wc.eval(&p), 0);
        }
    }

    #[test]
    fn divisor_lines() {
        let q = Rationals;
        let e = |x: i64| q.from_i64(x);
        let d = DivisorPair::<Rationals> { first: (e(1), e(1)), second: (e(-1), e(1)) };
        assert_eq!(trope_line_of_divisor(&q, &d), [e(1), e(0), e(-1)]);
        assert!(verify_divisor_line(&q, &d));
        let d = DivisorPair::<Rationals> { first: (e(0), e(1)), second: (e(1), e(0)) };
        assert_eq!(trope_line_of_divisor(&q, &d), [e(0), e(1), e(0)]);
        assert!(verify_divisor_line(&q, &d));
        let d = DivisorPair::<Rationals> { first: (e(3), e(2)), second: (e(3), e(2)) };
        assert!(verify_divisor_line(&q, &d));
        assert!(line_tangent_to_conic(&q, &trope_line_of_divisor(&q, &d)));
        // the ordinary pairing fails
        let d = DivisorPair::<Rationals> { first: (e(2), e(1)), second: (e(5), e(1)) };
        let xi = trope_line_of_divisor(&q, &d);
        let eta = conic_point(&q, &e(2), &e(1));
        let direct = (0..3).fold(e(0), |acc, i| acc + &xi[i] * &eta[i]);
        assert_ne!(direct, e(0));
    }

    #[test]
    fn standard_quadrics_on_veronese() {
        let q = Rationals;
        let f: Vec<_> = [3, -1, 4, 1, -5, 9, 2].iter().map(|&x| q.from_i64(x)).collect();
        let sys = standard_quadrics(&q, &f).unwrap();
        for (x, z) in [(1, 0), (0, 1), (2, 3), (-4, 7)] {
            let (x, z) = (q.from_i64(x), q.from_i64(z));
            let v = [x.clone() * &x * &x, x.clone() * &x * &z, x.clone() * &z * &z, z.clone() * &z * &z];
            for qi in &sys.quadrics[..3] {
                assert_eq!(qi.eval(&v).unwrap(), q.zero());
            }
            assert_eq!(sys.quadrics[3].eval(&v).unwrap(), eval_form(&q, &f, &x, &z));
        }
    }
}
