use std::sync::OnceLock;

use num_bigint::BigInt;
use proptest::prelude::*;

use burkhardt::algebra::binary::{cubic_discriminant, discriminant, mul_forms};
use burkhardt::algebra::gf::FiniteField;
use burkhardt::algebra::igusa::{igusa_clebsch, igusa_weighted_equal, weighted_scale};
use burkhardt::algebra::matrix::{det, det_bareiss, det_cofactor};
use burkhardt::algebra::poly::{vars, MultiPoly};
use burkhardt::algebra::{Field, Integers, Ring};
use burkhardt::maps::{phi_eval, psi_eval};
use burkhardt::moduli::census::off_hessian_census;
use burkhardt::moduli::curve::{curve_from_point, level3_decompositions, verify_order3_certificate, Decomposition};
use burkhardt::moduli::kummer::{trope_line_of_divisor, verify_divisor_line, DivisorPair};
use burkhardt::projective::ProjPoint;
use burkhardt::zeta::{ZetaFunction, DEFAULT_SCAN_CAP};

const FIELDS: [(u64, u32); 7] = [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (13, 1)];

fn field_and_elems(n: usize) -> impl Strategy<Value = (FiniteField, Vec<u32>)> {
    (0..FIELDS.len()).prop_flat_map(move |i| {
        let (p, k) = FIELDS[i];
        let f = FiniteField::new(p, k, None).unwrap();
        let q = f.order() as u32;
        (Just(f), prop::collection::vec(0..q, n))
    })
}

proptest! {
    #[test]
    fn field_axioms((f, e) in field_and_elems(3)) {
        let (a, b, c) = (e[0], e[1], e[2]);
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
        match f.inv(&a) {
            Some(i) => prop_assert_eq!(f.mul(&a, &i), f.one()),
            None => prop_assert!(f.is_zero(&a)),
        }
        prop_assert_eq!(f.pow(&a, f.order()), a);
    }
}

fn int_poly(coeffs: &[i64]) -> MultiPoly<Integers> {
    let v = vars(&["s", "t"]);
    let s = MultiPoly::var(&Integers, &v, 0);
    let t = MultiPoly::var(&Integers, &v, 1);
    MultiPoly::from_int(&Integers, &v, coeffs[0])
        .add(&s.scale_int(coeffs[1]))
        .add(&t.scale_int(coeffs[2]))
        .add(&s.mul(&t).scale_int(coeffs[3]))
}

proptest! {
    #[test]
    fn determinants_agree(n in 1usize..5, cs in prop::collection::vec(-4i64..5, 64), s in -3i64..4, t in -3i64..4) {
        let m: Vec<Vec<MultiPoly<Integers>>> =
            (0..n).map(|i| (0..n).map(|j| int_poly(&cs[4 * (i * n + j)..])).collect()).collect();
        let a = det_bareiss(&m).unwrap();
        prop_assert_eq!(&a, &det_cofactor(&m).unwrap());
        let f = FiniteField::prime(101).unwrap();
        let pt = [f.from_i64(s), f.from_i64(t)];
        let num: Vec<Vec<u32>> = m.iter().map(|r| r.iter().map(|p| p.to_ring(&f).eval(&pt).unwrap()).collect()).collect();
        prop_assert_eq!(a.to_ring(&f).eval(&pt).unwrap(), det(&f, &num).unwrap());
    }

    #[test]
    fn cubic_discriminant_from_roots(a in 1i64..5, r in prop::collection::vec(-6i64..7, 3)) {
        let v = vars(&[]);
        let c = |n: i64| MultiPoly::from_int(&Integers, &v, n);
        let (s1, s2, s3) = (r[0] + r[1] + r[2], r[0] * r[1] + r[0] * r[2] + r[1] * r[2], r[0] * r[1] * r[2]);
        let d = cubic_discriminant(&c(a), &c(-a * s1), &c(a * s2), &c(-a * s3));
        let prod = (r[0] - r[1]) * (r[0] - r[2]) * (r[1] - r[2]);
        prop_assert_eq!(d.constant_term(), BigInt::from(a.pow(4) * prod * prod));
        let forms = discriminant(&Integers, &[BigInt::from(a), BigInt::from(-a * s1), BigInt::from(a * s2), BigInt::from(-a * s3)]).unwrap();
        prop_assert_eq!(forms, d.constant_term());
    }
}

/// `f(a x + b z, c x + d z)` for a sextic with the `x^6` coefficient first.
fn substitute(f: &FiniteField, s: &[u32], g: [u32; 4]) -> Vec<u32> {
    let (lx, lz) = ([g[0], g[2]], [g[1], g[3]]);
    let mut out = vec![0; 7];
    for (i, c) in s.iter().enumerate() {
        let mut term = vec![*c];
        for _ in 0..6 - i {
            term = mul_forms(f, &term, &lx);
        }
        for _ in 0..i {
            term = mul_forms(f, &term, &lz);
        }
        out = out.iter().zip(&term).map(|(a, b)| f.add(a, b)).collect();
    }
    out
}

proptest! {
    #[test]
    fn igusa_scaling(p in prop::sample::select(vec![7u64, 11, 13]), s in prop::collection::vec(0u32..7, 7), g in prop::collection::vec(0u32..7, 4), l in 1u32..7) {
        let f = FiniteField::prime(p).unwrap();
        prop_assume!(f.sub(&f.mul(&g[0], &g[3]), &f.mul(&g[1], &g[2])) != 0);
        let ic = igusa_clebsch(&f, &s).unwrap();
        let scaled: Vec<u32> = s.iter().map(|c| f.mul(c, &l)).collect();
        prop_assert_eq!(igusa_clebsch(&f, &scaled).unwrap(), weighted_scale(&f, &ic, &l));
        let moved = substitute(&f, &s, [g[0], g[1], g[2], g[3]]);
        prop_assert!(igusa_weighted_equal(&f, &ic, &igusa_clebsch(&f, &moved).unwrap()));
    }

    #[test]
    fn zeta_group_law(a in prop::collection::vec((-9i64..10, -3i64..4), 0..5), b in prop::collection::vec((-9i64..10, -3i64..4), 0..5), n in 1u32..5) {
        let a: Vec<_> = a.into_iter().filter(|(c, _)| *c != 0).collect();
        let b: Vec<_> = b.into_iter().filter(|(c, _)| *c != 0).collect();
        let (za, zb) = (ZetaFunction::from_linear(&a), ZetaFunction::from_linear(&b));
        let prod = za.mul(&zb);
        prop_assert_eq!(prod.count(n), za.count(n) + zb.count(n));
        prop_assert_eq!(prod.div(&zb), za.clone());
        prop_assert_eq!(za.mul(&za.inverse()), ZetaFunction::one());
        prop_assert_eq!(za.pow(3).count(n), za.count(n) * 3);
    }

    #[test]
    fn maps_roundtrip(p in prop::sample::select(vec![2u64, 5, 7, 11, 13, 101]), t in prop::collection::vec(0i64..1000, 3)) {
        let f = FiniteField::prime(p).unwrap();
        let t: Vec<u32> = t.iter().map(|&x| f.from_i64(x)).collect();
        if let Ok(y) = phi_eval(&f, &t) {
            let (back, _) = psi_eval(&f, &y).or_else(|e| if e == burkhardt::Error::BaseLocus {
                Err(TestCaseError::reject("psi undefined"))
            } else {
                Err(TestCaseError::fail(e.to_string()))
            })?;
            let want = ProjPoint::new(&f, [vec![1], t].concat()).unwrap();
            prop_assert_eq!(back.normalized().key(), want.normalized().key());
        }
    }

    #[test]
    fn divisor_lines_are_symmetric(p in prop::sample::select(vec![7u64, 11, 13]), e in prop::collection::vec(0u32..13, 5)) {
        let f = FiniteField::prime(p).unwrap();
        let e: Vec<u32> = e.iter().map(|x| x % p as u32).collect();
        let (a, b) = ((e[0], e[1]), (e[2], e[3]));
        prop_assume!(a != (0, 0) && b != (0, 0) && e[4] != 0);
        let d = DivisorPair { first: a, second: b };
        let swapped = DivisorPair { first: b, second: a };
        prop_assert_eq!(trope_line_of_divisor(&f, &d), trope_line_of_divisor(&f, &swapped));
        let scaled = DivisorPair { first: (f.mul(&a.0, &e[4]), f.mul(&a.1, &e[4])), second: b };
        let l = trope_line_of_divisor(&f, &d);
        prop_assert_eq!(trope_line_of_divisor(&f, &scaled), l.map(|c| f.mul(&c, &e[4])));
        prop_assert!(verify_divisor_line(&f, &d));
    }
}

fn f11_certificates() -> &'static Vec<(Vec<u32>, Vec<Decomposition<FiniteField>>)> {
    static CELL: OnceLock<Vec<(Vec<u32>, Vec<Decomposition<FiniteField>>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let f = FiniteField::prime(11).unwrap();
        off_hessian_census(&f, DEFAULT_SCAN_CAP)
            .unwrap()
            .iter()
            .filter_map(|a| Some((curve_from_point(&f, a).ok()?.sextic, level3_decompositions(&f, a).ok()?)))
            .collect()
    })
}

proptest! {
    #[test]
    fn twists_are_coherent(i in 0usize..700, s in 1i64..11) {
        let f = FiniteField::prime(11).unwrap();
        let all = f11_certificates();
        let (sextic, decs) = &all[i % all.len()];
        for d in decs {
            let t = d.twist_by_square(&f, s).unwrap();
            prop_assert_eq!(t.d, d.d * s * s);
            prop_assert_eq!(&t.sextic(&f), sextic);
            prop_assert!(verify_order3_certificate(&f, sextic, &t).unwrap().passed());
        }
    }
}
