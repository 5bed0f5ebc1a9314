//! Binary forms as dense coefficient vectors.
//!
//! A form of degree `n` is stored as `[c0, ..., cn]` meaning
//! `c0*x^n + c1*x^(n-1)*z + ... + cn*z^n`. The degree is the formal one:
//! leading zeros are allowed and mean roots at `(1:0)`.

use super::poly::MultiPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Fraction-free determinant of a matrix over an integral domain.
fn det_domain<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&a[i][j], &a[k][k]), &ring.mul(&a[i][k], &a[k][j]));
                a[i][j] = ring.div_exact(&t, &prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        ring.neg(&d)
    } else {
        d
    }
}

/// Sylvester resultant of two binary forms of formal degrees `f.len()-1` and
/// `g.len()-1`. It vanishes iff the forms share a root in P^1 over the
/// algebraic closure (including `(1:0)` when both leading coefficients are 0).
pub fn resultant<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Result<R::Elem> {
    if f.is_empty() || g.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return Ok(ring.one());
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![ring.zero(); size];
        r[i..i + m + 1].clone_from_slice(f);
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![ring.zero(); size];
        r[i..i + n + 1].clone_from_slice(g);
        rows.push(r);
    }
    Ok(det_domain(ring, &rows))
}

/// Coefficients of `d/dx` as a form of formal degree `n-1`.
pub fn derivative_x<R: Ring>(ring: &R, f: &[R::Elem]) -> Vec<R::Elem> {
    let n = f.len() - 1;
    (0..n).map(|i| ring.mul(&ring.from_i64((n - i) as i64), &f[i])).collect()
}

/// Coefficients of `d/dz` as a form of formal degree `n-1`.
pub fn derivative_z<R: Ring>(ring: &R, f: &[R::Elem]) -> Vec<R::Elem> {
    (1..f.len()).map(|i| ring.mul(&ring.from_i64(i as i64), &f[i])).collect()
}

/// Discriminant of a binary form, normalized as
/// `(-1)^(n(n-1)/2) * Res(f, f_x) / c0`; when `c0 = 0` this is
/// `c1^2 * disc(f / z)`. Zero iff the form has a repeated root in P^1.
pub fn discriminant<R: Ring>(ring: &R, f: &[R::Elem]) -> Result<R::Elem> {
    let n = f.len().saturating_sub(1);
    if n < 2 {
        return Err(Error::Precondition("discriminant needs degree >= 2".into()));
    }
    if ring.is_zero(&f[0]) {
        if n == 2 {
            return Ok(ring.mul(&f[1], &f[1]));
        }
        let inner = discriminant(ring, &f[1..])?;
        return Ok(ring.mul(&ring.mul(&f[1], &f[1]), &inner));
    }
    let res = resultant(ring, f, &derivative_x(ring, f))?;
    let q = ring
        .div_exact(&res, &f[0])
        .ok_or_else(|| Error::Precondition("resultant not divisible by leading coefficient".into()))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { ring.neg(&q) } else { q })
}

/// `18abcd - 4b^3 d + b^2 c^2 - 4a c^3 - 27 a^2 d^2` for `a w^3 + b w^2 + c w + d`.
pub fn cubic_discriminant<R: Ring>(
    a: &MultiPoly<R>,
    b: &MultiPoly<R>,
    c: &MultiPoly<R>,
    d: &MultiPoly<R>,
) -> MultiPoly<R> {
    let abcd = a.mul(b).mul(c).mul(d).scale_int(18);
    let b3d = b.pow(3).mul(d).scale_int(4);
    let b2c2 = b.square().mul(&c.square());
    let ac3 = a.mul(&c.pow(3)).scale_int(4);
    let a2d2 = a.square().mul(&d.square()).scale_int(27);
    abcd.sub(&b3d).add(&b2c2).sub(&ac3).sub(&a2d2)
}

/// Coefficient vector of a homogeneous form in two variables `(x, z)` given
/// by their positions in the polynomial's variable list.
pub fn form_coeffs<R: Ring>(p: &MultiPoly<R>, x: usize, z: usize, degree: u32) -> Result<Vec<R::Elem>> {
    let ring = p.ring();
    let nv = p.nvars();
    let mut out = vec![ring.zero(); degree as usize + 1];
    for (m, c) in p.terms() {
        let ex = m.exponent(x);
        let ez = m.exponent(z);
        let others = (0..nv).filter(|&i| i != x && i != z).any(|i| m.exponent(i) > 0);
        if others || ex + ez != degree {
            return Err(Error::Precondition(format!(
                "not a binary form of degree {degree} in the chosen variables"
            )));
        }
        out[(degree - ex) as usize] = c.clone();
    }
    Ok(out)
}

/// Coefficient vector of `p(X)` read as the dehomogenization `z = 1` of a
/// form of formal degree `degree`.
pub fn univariate_coeffs<R: Ring>(p: &MultiPoly<R>, x: usize, degree: u32) -> Result<Vec<R::Elem>> {
    let ring = p.ring();
    let mut out = vec![ring.zero(); degree as usize + 1];
    for (m, c) in p.terms() {
        let ex = m.exponent(x);
        if m.degree() != ex || ex > degree {
            return Err(Error::Precondition(format!(
                "not a univariate polynomial of degree <= {degree}"
            )));
        }
        out[(degree - ex) as usize] = c.clone();
    }
    Ok(out)
}

/// Evaluate the form at `(x : z)`.
pub fn eval_form<R: Ring>(ring: &R, f: &[R::Elem], x: &R::Elem, z: &R::Elem) -> R::Elem {
    let n = f.len() - 1;
    let mut acc = ring.zero();
    for (i, c) in f.iter().enumerate() {
        let t = ring.mul(&ring.pow(x, (n - i) as u64), &ring.pow(z, i as u64));
        acc = ring.add(&acc, &ring.mul(c, &t));
    }
    acc
}

/// Product of two forms.
pub fn mul_forms<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FiniteField;
    use crate::algebra::parse::parse_poly_z;
    use crate::algebra::poly::vars;
    use crate::algebra::ring::Integers;
    use num_bigint::BigInt;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cubic_examples() {
        let v = vars(&["w"]);
        let c = |n: i64| MultiPoly::from_int(&Integers, &v, n);
        assert_eq!(cubic_discriminant(&c(1), &c(0), &c(-1), &c(0)), c(4));
        assert_eq!(cubic_discriminant(&c(1), &c(0), &c(0), &c(0)), c(0));
        assert_eq!(discriminant(&Integers, &z(&[1, 0, -1, 0])).unwrap(), BigInt::from(4));
    }

    #[test]
    fn cubic_symbolic_identity() {
        let v = vars(&["l", "H", "G"]);
        let p = |s: &str| parse_poly_z(s, &v).unwrap();
        let d = cubic_discriminant(&p("1"), &p("0"), &p("3*l*H"), &p("l*G"));
        assert_eq!(d, p("-27*l^2*(G^2 + 4*l*H^3)"));
    }

    #[test]
    fn quadratic_and_infinite_roots() {
        // x^2 - 4 z^2: b^2 - 4ac = 16
        assert_eq!(discriminant(&Integers, &z(&[1, 0, -4])).unwrap(), BigInt::from(16));
        // z*(x^2 - z^2) has distinct roots including (1:0)
        assert_ne!(discriminant(&Integers, &z(&[0, 1, 0, -1])).unwrap(), BigInt::from(0));
        // z^2 * x: double root at infinity
        assert_eq!(discriminant(&Integers, &z(&[0, 0, 1, 0])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn resultant_detects_common_root() {
        let f = FiniteField::prime(11).unwrap();
        // (x - z)(x + 2z) and (x - z)
        let a = vec![1, 1, f.from_i64(-2)];
        let b = vec![1, f.from_i64(-1)];
        assert_eq!(resultant(&f, &a, &b).unwrap(), 0);
        let c = vec![1, 3];
        assert_ne!(resultant(&f, &a, &c).unwrap(), 0);
        // both vanish at (1:0)
        assert_eq!(resultant(&f, &[0, 1, 1], &[0, 1]).unwrap(), 0);
    }

    #[test]
    fn form_coefficient_extraction() {
        let v = vars(&["x", "z"]);
        let p = parse_poly_z("x^2 - 3*x*z + 2*z^2", &v).unwrap();
        assert_eq!(form_coeffs(&p, 0, 1, 2).unwrap(), z(&[1, -3, 2]));
        assert!(form_coeffs(&p, 0, 1, 3).is_err());
        let v1 = vars(&["X"]);
        let u = parse_poly_z("X + 5", &v1).unwrap();
        assert_eq!(univariate_coeffs(&u, 0, 3).unwrap(), z(&[0, 0, 1, 5]));
    }
}
