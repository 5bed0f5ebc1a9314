//! The Burkhardt quartic: defining form, Hessian, polars, j-planes, nodes and
//! the group generators.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::gf::FiniteField;
use crate::algebra::matrix::det_bareiss;
use crate::algebra::parse::parse_poly_z;
use crate::algebra::poly::{vars, MultiPoly, Vars};
use crate::algebra::ring::{Field, Integers, Rationals, Ring};
use crate::error::{Error, Result};
use crate::projective::{par_filter_points, LinearSubspace, ProjPoint};

pub fn y_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&["y0", "y1", "y2", "y3", "y4"])).clone()
}

/// `a0..a4` followed by `y0..y4`.
pub fn ay_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&["a0", "a1", "a2", "a3", "a4", "y0", "y1", "y2", "y3", "y4"])).clone()
}

/// Refuse characteristic 3.
pub fn check_characteristic(p: u64) -> Result<()> {
    if p == 3 {
        Err(Error::CharacteristicThree)
    } else {
        Ok(())
    }
}

/// `f = y0 (y0^3 + y1^3 + y2^3 + y3^3 + y4^3) + 3 y1 y2 y3 y4`.
pub fn burkhardt_form() -> &'static MultiPoly<Integers> {
    static F: OnceLock<MultiPoly<Integers>> = OnceLock::new();
    F.get_or_init(|| {
        parse_poly_z("y0*(y0^3 + y1^3 + y2^3 + y3^3 + y4^3) + 3*y1*y2*y3*y4", &y_vars())
            .expect("valid form")
    })
}

pub fn gradient() -> &'static [MultiPoly<Integers>; 5] {
    static G: OnceLock<[MultiPoly<Integers>; 5]> = OnceLock::new();
    G.get_or_init(|| std::array::from_fn(|i| burkhardt_form().derivative(i)))
}

/// Matrix of second partials of `f`.
pub fn hessian_matrix() -> Vec<Vec<MultiPoly<Integers>>> {
    let g = gradient();
    (0..5).map(|i| (0..5).map(|j| g[i].derivative(j)).collect()).collect()
}

/// `det(d^2 f / dy_i dy_j) / 486`: degree 10, integer coefficients, content 1.
pub fn hessian_form() -> &'static MultiPoly<Integers> {
    static H: OnceLock<MultiPoly<Integers>> = OnceLock::new();
    H.get_or_init(|| {
        let d = det_bareiss(&hessian_matrix()).expect("square");
        let c = MultiPoly::from_int(&Integers, &y_vars(), 486);
        d.div_exact(&c).expect("486 divides the Hessian determinant")
    })
}

/// The three polars with `alpha` symbolic (`a0..a4`), over `a0..a4, y0..y4`.
pub fn polars_symbolic() -> &'static [MultiPoly<Integers>; 3] {
    static P: OnceLock<[MultiPoly<Integers>; 3]> = OnceLock::new();
    P.get_or_init(|| {
        let v = ay_vars();
        let p1 = "(4*y0^3 + y1^3 + y2^3 + y3^3 + y4^3)*a0 + (3*y0*y1^2 + 3*y2*y3*y4)*a1 \
                  + (3*y0*y2^2 + 3*y1*y3*y4)*a2 + (3*y0*y3^2 + 3*y1*y2*y4)*a3 \
                  + (3*y0*y4^2 + 3*y1*y2*y3)*a4";
        let p2 = "2*a0^2*y0^2 + a1^2*y0*y1 + a2^2*y0*y2 + a3^2*y0*y3 + a4^2*y0*y4 \
                  + a0*a1*y1^2 + a3*a4*y1*y2 + a2*a4*y1*y3 + a2*a3*y1*y4 + a0*a2*y2^2 \
                  + a1*a4*y2*y3 + a1*a3*y2*y4 + a0*a3*y3^2 + a1*a2*y3*y4 + a0*a4*y4^2";
        let p3 = "(4*a0^3 + a1^3 + a2^3 + a3^3 + a4^3)*y0 + (3*a0*a1^2 + 3*a2*a3*a4)*y1 \
                  + (3*a0*a2^2 + 3*a1*a3*a4)*y2 + (3*a0*a3^2 + 3*a1*a2*a4)*y3 \
                  + (3*a0*a4^2 + 3*a1*a2*a3)*y4";
        [p1, p2, p3].map(|s| parse_poly_z(s, &v).expect("valid polar"))
    })
}

/// The polars `(P1, P2, P3)` of degrees 3, 2, 1 at `alpha`, as forms in `y0..y4`.
pub fn polars<R: Ring>(ring: &R, alpha: &[R::Elem]) -> Result<[MultiPoly<R>; 3]> {
    if alpha.len() != 5 {
        return Err(Error::DimensionMismatch { expected: 5, got: alpha.len() });
    }
    let assign: Vec<(usize, R::Elem)> = alpha.iter().cloned().enumerate().collect();
    let out = polars_symbolic().clone().map(|p| {
        p.to_ring(ring).specialize(&assign).with_vars(&y_vars()).expect("only y left")
    });
    Ok(out)
}

/// Label of one of the eight rational j-planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum JPlane {
    /// `y0 = yi = 0`
    J(u8),
    /// `y0 + ... + y4 = y0 + yi = 0`
    JPrime(u8),
}

impl JPlane {
    pub fn all() -> [JPlane; 8] {
        [
            JPlane::J(1),
            JPlane::J(2),
            JPlane::J(3),
            JPlane::J(4),
            JPlane::JPrime(1),
            JPlane::JPrime(2),
            JPlane::JPrime(3),
            JPlane::JPrime(4),
        ]
    }

    pub fn label(&self) -> String {
        match self {
            JPlane::J(i) => format!("J{i}"),
            JPlane::JPrime(i) => format!("J{i}'"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        JPlane::all()
            .into_iter()
            .find(|j| j.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Precondition(format!("unknown j-plane {s:?}")))
    }

    /// Three integer vectors spanning the plane.
    pub fn basis(&self) -> [[i64; 5]; 3] {
        let (i, prime) = match *self {
            JPlane::J(i) => (i as usize, false),
            JPlane::JPrime(i) => (i as usize, true),
        };
        let others: Vec<usize> = (1..5).filter(|&k| k != i).collect();
        let e = |k: usize| {
            let mut v = [0i64; 5];
            v[k] = 1;
            v
        };
        if !prime {
            [e(others[0]), e(others[1]), e(others[2])]
        } else {
            let mut r0 = [0i64; 5];
            r0[0] = 1;
            r0[i] = -1;
            let mut r1 = e(others[0]);
            r1[others[2]] = -1;
            let mut r2 = e(others[1]);
            r2[others[2]] = -1;
            [r0, r1, r2]
        }
    }

    /// Linear equations cutting out the plane.
    pub fn equations(&self) -> [[i64; 5]; 2] {
        match *self {
            JPlane::J(i) => {
                let mut b = [0i64; 5];
                b[i as usize] = 1;
                [[1, 0, 0, 0, 0], b]
            }
            JPlane::JPrime(i) => {
                let mut b = [0i64; 5];
                b[0] = 1;
                b[i as usize] = 1;
                [[1, 1, 1, 1, 1], b]
            }
        }
    }

    pub fn subspace<F: Field>(&self, field: &F) -> Result<LinearSubspace<F>> {
        check_characteristic(field.characteristic())?;
        let rows = self.basis().iter().map(|r| r.iter().map(|&c| field.from_i64(c)).collect()).collect();
        LinearSubspace::new(field, rows)
    }

    /// Whether `y` satisfies both equations.
    pub fn contains<F: Field>(&self, field: &F, y: &[F::Elem]) -> bool {
        self.equations().iter().all(|eq| {
            let s = eq.iter().zip(y).fold(field.zero(), |acc, (&c, v)| {
                field.add(&acc, &field.mul(&field.from_i64(c), v))
            });
            field.is_zero(&s)
        })
    }
}

/// The eight rational j-planes in the order J1..J4, J1'..J4'.
pub fn rational_jplanes<F: Field>(field: &F) -> Result<Vec<(JPlane, LinearSubspace<F>)>> {
    JPlane::all().into_iter().map(|j| Ok((j, j.subspace(field)?))).collect()
}

/// `p` restricted to the plane, as a form in `u0, u1, u2`.
pub fn restrict_to_plane<R: Ring>(p: &MultiPoly<R>, plane: JPlane) -> MultiPoly<R> {
    let u = vars(&["u0", "u1", "u2"]);
    let ring = p.ring();
    let basis = plane.basis();
    let subs: Vec<MultiPoly<R>> = (0..5)
        .map(|k| {
            (0..3).fold(MultiPoly::zero(ring, &u), |acc, r| {
                acc.add(&MultiPoly::var(ring, &u, r).scale_int(basis[r][k]))
            })
        })
        .collect();
    p.compose(&subs)
}

/// `f(y)` computed directly on field encodings.
#[inline]
pub fn f_raw(field: &FiniteField, y: &[u32]) -> u32 {
    let cube = |a: u32| field.mul_raw(field.mul_raw(a, a), a);
    let mut s = cube(y[0]);
    for &v in &y[1..5] {
        s = field.add_raw(s, cube(v));
    }
    let lhs = field.mul_raw(y[0], s);
    let prod = field.mul_raw(field.mul_raw(y[1], y[2]), field.mul_raw(y[3], y[4]));
    let three = field.from_i64(3);
    field.add_raw(lhs, field.mul_raw(three, prod))
}

/// All five partial derivatives on field encodings.
#[inline]
pub fn gradient_raw(field: &FiniteField, y: &[u32]) -> [u32; 5] {
    let sq = |a: u32| field.mul_raw(a, a);
    let cube = |a: u32| field.mul_raw(sq(a), a);
    let three = field.from_i64(3);
    let four = field.from_i64(4);
    let mut d0 = field.mul_raw(four, cube(y[0]));
    for &v in &y[1..5] {
        d0 = field.add_raw(d0, cube(v));
    }
    let mut out = [d0, 0, 0, 0, 0];
    for i in 1..5 {
        let mut prod = 1u32;
        for (k, &v) in y.iter().enumerate().skip(1) {
            if k != i {
                prod = field.mul_raw(prod, v);
            }
        }
        let t = field.add_raw(field.mul_raw(y[0], sq(y[i])), prod);
        out[i] = field.mul_raw(three, t);
    }
    out
}

/// Whether the normalized point `y` is singular on B.
pub fn is_node_raw(field: &FiniteField, y: &[u32]) -> bool {
    f_raw(field, y) == 0 && gradient_raw(field, y).iter().all(|&g| g == 0)
}

/// Nodes of B over GF(q), by exhaustive scan, sorted by normalized coordinates.
pub fn node_census(field: &FiniteField) -> Result<Vec<ProjPoint<FiniteField>>> {
    check_characteristic(field.p())?;
    let found = par_filter_points(field, 5, |y| is_node_raw(field, y));
    found.into_iter().map(|y| ProjPoint::new(field, y)).collect()
}

/// A generator of the symmetry group, acting on row vectors from the right.
#[derive(Clone, Debug)]
pub struct GroupGenerator<F: Field> {
    pub name: &'static str,
    pub matrix: Vec<Vec<F::Elem>>,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Generators 1 and 2 over Q.
pub fn rational_generators() -> [GroupGenerator<Rationals>; 2] {
    let m1 = [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0],
        [0, 0, 1, 0, 0],
    ];
    let m2 = [
        [1, 2, 2, 2, 2],
        [1, -1, -1, 2, -1],
        [1, -1, -1, -1, 2],
        [1, -1, 2, -1, -1],
        [1, 2, -1, -1, -1],
    ];
    [
        GroupGenerator {
            name: "M1",
            matrix: m1.iter().map(|r| r.iter().map(|&c| rat(-c, 1)).collect()).collect(),
        },
        GroupGenerator {
            name: "M2",
            matrix: m2.iter().map(|r| r.iter().map(|&c| rat(c, 3)).collect()).collect(),
        },
    ]
}

/// Generators 1 and 2 mapped into `field`, plus generator 3 when `zeta` is a
/// primitive cube root of unity.
pub fn generators<F: Field>(field: &F, zeta: Option<&F::Elem>) -> Result<Vec<GroupGenerator<F>>> {
    check_characteristic(field.characteristic())?;
    let mut out: Vec<GroupGenerator<F>> = rational_generators()
        .iter()
        .map(|g| {
            let m = g
                .matrix
                .iter()
                .map(|r| r.iter().map(|c| field.from_rational(c)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupGenerator { name: g.name, matrix: m })
        })
        .collect::<Result<_>>()?;
    if let Some(z) = zeta {
        let zi = field.inv(z).ok_or(Error::NoCubeRoot)?;
        let zero = field.zero();
        let m1 = field.neg(&field.one());
        let mut m = vec![vec![zero.clone(); 5]; 5];
        m[0][0] = m1.clone();
        m[1][1] = m1.clone();
        m[2][3] = field.neg(&zi);
        m[3][2] = field.neg(z);
        m[4][4] = m1;
        out.push(GroupGenerator { name: "M3", matrix: m });
    }
    Ok(out)
}

/// `p(y * M)`.
pub fn transform<F: Field>(p: &MultiPoly<F>, m: &[Vec<F::Elem>]) -> MultiPoly<F> {
    let ring = p.ring();
    let v = p.vars().clone();
    let subs: Vec<MultiPoly<F>> = (0..5)
        .map(|j| {
            (0..5).fold(MultiPoly::zero(ring, &v), |acc, i| {
                acc.add(&MultiPoly::var(ring, &v, i).scale(&m[i][j]))
            })
        })
        .collect();
    p.compose(&subs)
}

/// `c` with `a = c * b`, if one exists.
pub fn proportionality<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> Option<F::Elem> {
    let ring = b.ring();
    let (m, lead) = b.leading_term()?;
    let c = ring.div(&a.coeff(m), lead)?;
    (b.scale(&c) == *a).then_some(c)
}

/// Outcome of checking one generator.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub generator: String,
    /// The scalar `c` in `f(yM) = c f`, if `f(yM)` is a multiple of `f`.
    pub scalar: Option<String>,
    pub invariant: bool,
    /// Image of each rational j-plane, or `None` when the image is not one
    /// of the eight (only reported for generators defined over Q).
    pub jplane_images: Option<Vec<(String, Option<String>)>>,
}

/// Image of a j-plane under `y -> y M`, as one of the eight labels.
pub fn jplane_image<F: Field>(field: &F, plane: JPlane, m: &[Vec<F::Elem>]) -> Result<Option<JPlane>> {
    let sub = plane.subspace(field)?;
    let rows: Vec<Vec<F::Elem>> = sub
        .basis()
        .iter()
        .map(|r| {
            (0..5)
                .map(|j| {
                    (0..5).fold(field.zero(), |acc, i| field.add(&acc, &field.mul(&r[i], &m[i][j])))
                })
                .collect()
        })
        .collect();
    let img = LinearSubspace::new(field, rows)?;
    for cand in JPlane::all() {
        if cand.subspace(field)? == img {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Check `f(yM) = f` for each generator and record how generators 1 and 2
/// move the rational j-planes.
pub fn group_invariance_check<F: Field>(field: &F, zeta: Option<&F::Elem>) -> Result<Vec<GeneratorReport>> {
    let f = burkhardt_form().to_ring(field);
    let gens = generators(field, zeta)?;
    gens.iter()
        .map(|g| {
            let img = transform(&f, &g.matrix);
            let c = proportionality(&img, &f);
            let invariant = c.as_ref().is_some_and(|c| field.is_one(c));
            let planes = if g.name == "M3" {
                None
            } else {
                Some(
                    JPlane::all()
                        .iter()
                        .map(|&j| Ok((j.label(), jplane_image(field, j, &g.matrix)?.map(|x| x.label()))))
                        .collect::<Result<Vec<_>>>()?,
                )
            };
            Ok(GeneratorReport {
                generator: g.name.to_string(),
                scalar: c.map(|c| field.fmt_elem(&c)),
                invariant,
                jplane_images: planes,
            })
        })
        .collect()
}

/// The primitive cube root of unity with the smaller encoding, if any.
pub fn default_zeta(field: &FiniteField) -> Option<u32> {
    field.cube_roots_of_unity().first().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_basics() {
        let f = burkhardt_form();
        assert_eq!(f.degree(), Some(4));
        assert!(f.is_homogeneous());
        let z = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(f.eval(&z(&[1, 0, 0, 0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(f.eval(&z(&[-1, 1, 1, 1, 1])).unwrap(), BigInt::from(0));
        assert_eq!(f.eval(&z(&[-1, 1, -1, 0, 1])).unwrap(), BigInt::from(0));
        for g in gradient() {
            assert_eq!(g.eval(&z(&[-1, 1, 1, 1, 1])).unwrap(), BigInt::from(0));
        }
        let s = f.specialize(&[(0, BigInt::from(0))]);
        assert_eq!(s, parse_poly_z("3*y1*y2*y3*y4", &y_vars()).unwrap());
    }

    #[test]
    fn hessian_content_and_degree() {
        let h = hessian_form();
        assert_eq!(h.degree(), Some(10));
        assert!(h.is_homogeneous());
        assert_eq!(h.content(), BigInt::from(1));
        for j in JPlane::all() {
            assert!(restrict_to_plane(h, j).is_zero(), "{}", j.label());
            assert!(restrict_to_plane(burkhardt_form(), j).is_zero(), "{}", j.label());
        }
    }

    #[test]
    fn polar_examples() {
        let z = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let [_, _, p3] = polars(&Integers, &z(&[-1, 1, 1, 1, 1])).unwrap();
        assert!(p3.is_zero());
        // P3 is the gradient up to the constants 4 and 3
        let a = z(&[2, -1, 5, 0, 3]);
        let [p1, p2, p3] = polars(&Integers, &a).unwrap();
        assert_eq!(p1.degree(), Some(3));
        assert_eq!(p2.degree(), Some(2));
        for (i, g) in gradient().iter().enumerate() {
            let coef = p3.coeff_of(&std::array::from_fn::<u32, 5, _>(|k| (k == i) as u32));
            assert_eq!(coef, g.eval(&a).unwrap());
        }
        // restriction to y0 = y1 = 0
        let v = polars_symbolic()[0].specialize(&[(5, BigInt::from(0)), (6, BigInt::from(0))]);
        let expect = parse_poly_z("a0*(y2^3 + y3^3 + y4^3) + 3*a1*y2*y3*y4", &ay_vars()).unwrap();
        assert_eq!(v, expect);
    }

    #[test]
    fn node_counts() {
        for (q, k, n) in [(7, 1, 45), (5, 1, 7), (2, 1, 7), (2, 2, 45)] {
            let f = FiniteField::new(q, k, None).unwrap();
            assert_eq!(node_census(&f).unwrap().len(), n, "q = {q}^{k}");
        }
        assert!(matches!(
            node_census(&FiniteField::prime(3).unwrap()),
            Err(Error::CharacteristicThree)
        ));
    }

    #[test]
    fn generators_preserve_form() {
        let reps = group_invariance_check(&Rationals, None).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().all(|r| r.invariant));
        let m2 = reps[1].jplane_images.as_ref().unwrap();
        for (from, to) in &m2[..4] {
            assert!(from.starts_with('J') && to.as_ref().unwrap().ends_with('\''), "{from} -> {to:?}");
        }
        let f7 = FiniteField::prime(7).unwrap();
        let z = default_zeta(&f7).unwrap();
        let reps = group_invariance_check(&f7, Some(&z)).unwrap();
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(|r| r.invariant));
    }
}
