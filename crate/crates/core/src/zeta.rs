//! Point counts and zeta functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::compiled::CompiledPoly;
use crate::algebra::gf::FiniteField;
use crate::algebra::poly::MultiPoly;
use crate::algebra::ring::{Integers, Ring};
use crate::burkhardt::{check_characteristic, f_raw, hessian_form};
use crate::error::{Error, Result};
use crate::projective::{par_sum_points, projective_size};

/// Default bound on the number of projective points a generic scan visits.
pub const DEFAULT_SCAN_CAP: u128 = 1 << 24;

/// `(q / 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonSymbol {
    pub q: u64,
    pub eps: i64,
}

impl EpsilonSymbol {
    pub fn new(q: u64) -> Result<Self> {
        match q % 3 {
            0 => Err(Error::CharacteristicThree),
            1 => Ok(EpsilonSymbol { q, eps: 1 }),
            _ => Ok(EpsilonSymbol { q, eps: -1 }),
        }
    }
}

/// `prod (1 - c T^deg)^(-e)` with `deg` in {1, 2}.
///
/// Quadratic factors with `c` a perfect square are split into two linear
/// ones, so equal functions have equal factor maps.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZetaFunction {
    factors: BTreeMap<(u8, i64), i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaFactor {
    pub c: i64,
    pub e: i64,
    pub deg: u8,
}

impl ZetaFunction {
    pub fn one() -> Self {
        Self::default()
    }

    /// From `(c, e)` pairs, all linear.
    pub fn from_linear(pairs: &[(i64, i64)]) -> Self {
        let mut z = Self::one();
        for &(c, e) in pairs {
            z.push(c, e, 1);
        }
        z
    }

    pub fn from_factors(factors: impl IntoIterator<Item = ZetaFactor>) -> Self {
        let mut z = Self::one();
        for f in factors {
            z.push(f.c, f.e, f.deg);
        }
        z
    }

    fn push(&mut self, c: i64, e: i64, deg: u8) {
        assert!(deg == 1 || deg == 2, "factor degree must be 1 or 2");
        if e == 0 || c == 0 {
            return;
        }
        if deg == 2 && c > 0 {
            let d = c.sqrt();
            if d * d == c {
                self.push(d, e, 1);
                self.push(-d, e, 1);
                return;
            }
        }
        let slot = self.factors.entry((deg, c)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&(deg, c));
        }
    }

    pub fn factors(&self) -> Vec<ZetaFactor> {
        self.factors.iter().map(|(&(deg, c), &e)| ZetaFactor { c, e, deg }).collect()
    }

    /// Exponent of the linear factor `(1 - cT)^(-e)`.
    pub fn exponent(&self, c: i64) -> i64 {
        self.factors.get(&(1, c)).copied().unwrap_or(0)
    }

    /// `#X(F_{q^n})`.
    pub fn count(&self, n: u32) -> BigInt {
        assert!(n >= 1);
        let mut acc = BigInt::zero();
        for (&(deg, c), &e) in &self.factors {
            let c = BigInt::from(c);
            match deg {
                1 => acc += BigInt::from(e) * num_traits::pow(c, n as usize),
                _ if n % 2 == 0 => acc += BigInt::from(2 * e) * num_traits::pow(c, (n / 2) as usize),
                _ => {}
            }
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut z = self.clone();
        for (&(deg, c), &e) in &other.factors {
            z.push(c, e, deg);
        }
        z
    }

    pub fn inverse(&self) -> Self {
        let mut z = Self::one();
        for (&(deg, c), &e) in &self.factors {
            z.push(c, -e, deg);
        }
        z
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut z = Self::one();
        for (&(deg, c), &e) in &self.factors {
            z.push(c, e * k, deg);
        }
        z
    }

    /// `Z(X/F_q, T) = Z(Y/F_{q^2}, T^2)` for `X` the Weil restriction-style
    /// pair of conjugate copies of `Y`.
    pub fn conjugate_pair(&self) -> Result<Self> {
        let mut z = Self::one();
        for (&(deg, c), &e) in &self.factors {
            if deg != 1 {
                return Err(Error::Precondition("conjugate_pair expects linear factors only".into()));
            }
            z.push(c, e, 2);
        }
        Ok(z)
    }

    /// Numerator and denominator polynomials in `T`, low degree first.
    pub fn rational_function(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut num = vec![BigInt::one()];
        let mut den = vec![BigInt::one()];
        for (&(deg, c), &e) in &self.factors {
            let mut f = vec![BigInt::zero(); deg as usize + 1];
            f[0] = BigInt::one();
            f[deg as usize] = BigInt::from(-c);
            let target = if e > 0 { &mut den } else { &mut num };
            for _ in 0..e.unsigned_abs() {
                *target = poly_mul(target, &f);
            }
        }
        (num, den)
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |c: i64, deg: u8, e: i64| {
            let t = if deg == 1 { "T".to_string() } else { "T^2".to_string() };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            let base = if c < 0 { format!("(1+{mag}{t})") } else { format!("(1-{mag}{t})") };
            if e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        };
        let num: Vec<String> =
            self.factors.iter().filter(|(_, &e)| e < 0).map(|(&(d, c), &e)| show(c, d, -e)).collect();
        let den: Vec<String> =
            self.factors.iter().filter(|(_, &e)| e > 0).map(|(&(d, c), &e)| show(c, d, e)).collect();
        let num = if num.is_empty() { "1".to_string() } else { num.join("") };
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num} / ({})", den.join(""))
        }
    }
}

impl Serialize for ZetaFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let lin: Vec<[i64; 2]> =
            self.factors.iter().filter(|((d, _), _)| *d == 1).map(|(&(_, c), &e)| [c, e]).collect();
        let quad: Vec<[i64; 2]> =
            self.factors.iter().filter(|((d, _), _)| *d == 2).map(|(&(_, c), &e)| [c, e]).collect();
        let mut st = s.serialize_struct("ZetaFunction", 3)?;
        st.serialize_field("factors", &lin)?;
        st.serialize_field("quadratic_factors", &quad)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

/// `1 / ((1 - T)(1 - qT) ... (1 - q^n T))`.
pub fn zeta_pn(n: u32, q: u64) -> ZetaFunction {
    let q = q as i64;
    ZetaFunction::from_linear(&(0..=n).map(|i| (q.pow(i), 1)).collect::<Vec<_>>())
}

/// Zeta function of B over GF(q).
pub fn zeta_burkhardt(q: u64) -> Result<ZetaFunction> {
    let eps = EpsilonSymbol::new(q)?.eps;
    let q = q as i64;
    Ok(ZetaFunction::from_linear(&[
        (q, -15),
        (eps * q, -14),
        (1, 1),
        (q * q, 10),
        (eps * q * q, 6),
        (q * q * q, 1),
    ]))
}

/// Zeta function of the small resolution of B over GF(q).
pub fn zeta_desing(q: u64) -> Result<ZetaFunction> {
    let eps = EpsilonSymbol::new(q)?.eps;
    let q = q as i64;
    Ok(ZetaFunction::from_linear(&[
        (1, 1),
        (q, 36),
        (eps * q, 25),
        (eps * q * q, 25),
        (q * q, 36),
        (q * q * q, 1),
    ]))
}

/// Product of the per-node corrections. Over GF(q) with q = 1 mod 3 every
/// node contributes `[(1-qT)^2 (1-q^2 T)]^-1`; otherwise 19 conjugate pairs
/// contribute `[(1-q^2T^2)^2 (1-q^4T^2)]^-1`, six split nodes the same
/// factor as above, and one non-split node `[(1+qT)(1-qT)(1-q^2T)]^-1`.
pub fn node_corrections(q: u64) -> Result<ZetaFunction> {
    let eps = EpsilonSymbol::new(q)?.eps;
    let q = q as i64;
    let split = ZetaFunction::from_linear(&[(q, 2), (q * q, 1)]);
    if eps == 1 {
        return Ok(split.pow(45));
    }
    let pair = ZetaFunction::from_factors([
        ZetaFactor { c: q * q, e: 2, deg: 2 },
        ZetaFactor { c: q.pow(4), e: 1, deg: 2 },
    ]);
    let nonsplit = ZetaFunction::from_linear(&[(-q, 1), (q, 1), (q * q, 1)]);
    Ok(pair.pow(19).mul(&split.pow(6)).mul(&nonsplit))
}

pub fn verify_desing_correction(q: u64) -> Result<bool> {
    Ok(zeta_burkhardt(q)?.mul(&node_corrections(q)?) == zeta_desing(q)?)
}

/// Closed form for `#(B \ He)(GF(q))`.
pub fn off_hessian_formula(q: u64) -> Result<i128> {
    let eps = EpsilonSymbol::new(q)?.eps;
    let q = q as i128;
    Ok(if eps == 1 { (q - 4) * (q - 7) * (q - 13) } else { (q - 2) * (q * q - 2 * q - 1) })
}

fn check_cap(points: u128, cap: u128) -> Result<()> {
    if points > cap {
        Err(Error::CapExceeded { points, cap })
    } else {
        Ok(())
    }
}

/// `GF(q^n)` where `base = GF(q)`, built with the default modulus.
pub fn extension(base: &FiniteField, n: u32) -> Result<FiniteField> {
    if n == 1 {
        return Ok(base.clone());
    }
    FiniteField::new(base.p(), base.degree() * n, None)
}

/// Number of points of `{F = 0}` in projective space over `GF(q^n)`, by
/// exhaustive scan of normalized representatives. `F` must be homogeneous.
pub fn count_hypersurface(f: &MultiPoly<Integers>, base: &FiniteField, n: u32, cap: u128) -> Result<u128> {
    if !f.is_homogeneous() {
        return Err(Error::Precondition("hypersurface equation must be homogeneous".into()));
    }
    let q = (base.order() as u128).checked_pow(n).ok_or(Error::CapExceeded { points: u128::MAX, cap })?;
    let size = projective_size(q.min(u64::MAX as u128) as u64, f.nvars());
    check_cap(size, cap)?;
    let field = extension(base, n)?;
    let cf = CompiledPoly::from_integer(f, &field);
    Ok(par_sum_points(&field, f.nvars(), |v| (cf.eval(v) == 0) as u64) as u128)
}

/// `#B(GF(Q))`, exact, in `O(Q^3)` steps.
///
/// With `y0 = 1` the equation is `y4^3 + a y4 + b = 0` with
/// `a = 3 y1 y2 y3`, `b = 1 + y1^3 + y2^3 + y3^3`; the number of roots of
/// each such cubic is tabulated once. With `y0 = 0` it reduces to
/// `y1 y2 y3 y4 = 0` in P^3.
pub fn count_burkhardt(field: &FiniteField) -> Result<u128> {
    use rayon::prelude::*;
    check_characteristic(field.p())?;
    let q = field.order() as usize;
    let mut table = vec![0u8; q * q];
    for a in 0..q as u32 {
        for y in 0..q as u32 {
            let v = field.add_raw(field.mul_raw(field.mul_raw(y, y), y), field.mul_raw(a, y));
            let b = field.neg_raw(v);
            table[a as usize * q + b as usize] += 1;
        }
    }
    let three = field.from_i64(3);
    let cubes: Vec<u32> = (0..q as u32).map(|y| field.mul_raw(field.mul_raw(y, y), y)).collect();
    let affine: u64 = (0..q as u32)
        .into_par_iter()
        .map(|y1| {
            let mut acc = 0u64;
            let b1 = field.add_raw(1, cubes[y1 as usize]);
            let a1 = field.mul_raw(three, y1);
            for y2 in 0..q as u32 {
                let b2 = field.add_raw(b1, cubes[y2 as usize]);
                let a2 = field.mul_raw(a1, y2);
                for y3 in 0..q as u32 {
                    let b = field.add_raw(b2, cubes[y3 as usize]);
                    let a = field.mul_raw(a2, y3);
                    acc += table[a as usize * q + b as usize] as u64;
                }
            }
            acc
        })
        .sum();
    let qq = q as u128;
    let at_infinity = projective_size(q as u64, 4) - (qq - 1).pow(3);
    Ok(affine as u128 + at_infinity)
}

/// Brute-force `#B(GF(Q))` via `f_raw`, for cross-checking.
pub fn count_burkhardt_brute(field: &FiniteField, cap: u128) -> Result<u128> {
    check_characteristic(field.p())?;
    check_cap(projective_size(field.order(), 5), cap)?;
    Ok(par_sum_points(field, 5, |y| (f_raw(field, y) == 0) as u64) as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    Formula,
    Brute,
}

/// `#(B \ He)(GF(q))`.
pub fn off_hessian_count(field: &FiniteField, mode: CountMode, cap: u128) -> Result<i128> {
    check_characteristic(field.p())?;
    match mode {
        CountMode::Formula => off_hessian_formula(field.order()),
        CountMode::Brute => {
            check_cap(projective_size(field.order(), 5), cap)?;
            let he = CompiledPoly::from_integer(hessian_form(), field);
            Ok(par_sum_points(field, 5, |y| (f_raw(field, y) == 0 && he.eval(y) != 0) as u64) as i128)
        }
    }
}

/// `#(B \cap He)(GF(q))` by direct scan.
pub fn hessian_intersection_count(field: &FiniteField, cap: u128) -> Result<u128> {
    check_characteristic(field.p())?;
    check_cap(projective_size(field.order(), 5), cap)?;
    let he = CompiledPoly::from_integer(hessian_form(), field);
    Ok(par_sum_points(field, 5, |y| (f_raw(field, y) == 0 && he.eval(y) == 0) as u64) as u128)
}

/// Solve `e M = (1, ..., 1)` over Z, with `M[i][j] = 1` iff `X_j` is
/// contained in `X_i`, and assemble `prod Z(X_i)^(e_i)`.
pub fn inclusion_exclusion(m: &[Vec<i64>], zetas: &[ZetaFunction]) -> Result<(Vec<i64>, ZetaFunction)> {
    let k = m.len();
    if zetas.len() != k || m.iter().any(|r| r.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, got: zetas.len() });
    }
    // M^T e^T = 1, augmented
    let mut a: Vec<Vec<BigRational>> = (0..k)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..k).map(|i| BigRational::from_integer(m[i][j].into())).collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    for c in 0..k {
        let p = (c..k)
            .find(|&r| !a[r][c].is_zero())
            .ok_or_else(|| Error::Unsolvable("containment matrix is singular".into()))?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..k {
            if r != c && !a[r][c].is_zero() {
                let fct = a[r][c].clone();
                for j in c..=k {
                    let t = &fct * &a[c][j];
                    a[r][j] -= t;
                }
            }
        }
    }
    let mut e = Vec::with_capacity(k);
    for row in &a {
        let v = &row[k];
        if !v.is_integer() {
            return Err(Error::Unsolvable(format!("non-integral exponent {v}")));
        }
        let n = v.to_integer();
        e.push(n.to_i64().filter(|x| x.abs() < i64::MAX / 2).ok_or_else(|| {
            Error::Unsolvable(format!("exponent {} out of range", n.abs()))
        })?);
    }
    let z = e.iter().zip(zetas).fold(ZetaFunction::one(), |acc, (&ei, zi)| acc.mul(&zi.pow(ei)));
    Ok((e, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly_z;
    use crate::burkhardt::{burkhardt_form, y_vars};

    #[test]
    fn closed_form_examples() {
        let z7 = zeta_burkhardt(7).unwrap();
        assert_eq!(z7.exponent(7), -29);
        assert_eq!(z7.exponent(49), 16);
        assert_eq!(z7.count(1), BigInt::from(925));
        let z2 = zeta_burkhardt(2).unwrap();
        assert_eq!(z2.count(1), BigInt::from(23));
        assert_eq!(z2.to_string(), "(1+2T)^14(1-2T)^15 / ((1+4T)^6(1-T)(1-4T)^10(1-8T))");
        assert!(zeta_burkhardt(9).is_err());
    }

    #[test]
    fn desing_bookkeeping() {
        for q in [2, 4, 5, 7, 8, 11, 13] {
            assert!(verify_desing_correction(q).unwrap(), "q = {q}");
        }
        let z = zeta_desing(7).unwrap();
        assert_eq!((z.exponent(7), z.exponent(49)), (61, 61));
        let c = zeta_burkhardt(2).unwrap().mul(&node_corrections(2).unwrap());
        assert_eq!([c.exponent(2), c.exponent(-2), c.exponent(4), c.exponent(-4)], [36, 25, 36, 25]);
        let corr = node_corrections(2).unwrap();
        assert_eq!([corr.exponent(2), corr.exponent(-2), corr.exponent(4), corr.exponent(-4)], [51, 39, 26, 19]);
    }

    #[test]
    fn calculus() {
        let p3 = zeta_pn(3, 5);
        assert_eq!(p3.count(1), BigInt::from(156));
        assert_eq!(p3.count(2), BigInt::from(1 + 25 + 625 + 15625));
        let w = zeta_burkhardt(5).unwrap();
        assert_eq!(p3.mul(&w.div(&p3)), w);
        // two conjugate lines meeting in a rational point
        let q = 3i64;
        let line = zeta_pn(1, (q * q) as u64);
        let pair = line.conjugate_pair().unwrap();
        let lines = pair.div(&ZetaFunction::from_linear(&[(1, 1)]).conjugate_pair().unwrap())
            .mul(&ZetaFunction::from_linear(&[(1, 1)]));
        assert_eq!(lines, ZetaFunction::from_factors([
            ZetaFactor { c: 1, e: 1, deg: 1 },
            ZetaFactor { c: q * q, e: 1, deg: 2 },
        ]));
        assert_eq!(lines.count(1), BigInt::from(1));
        assert_eq!(lines.count(2), BigInt::from(2 * q * q + 1));
    }

    #[test]
    fn conjugate_lines_by_brute_force() {
        // x^2 + xy + y^2 = 0 in P^2 is a pair of lines conjugate over GF(2)
        let v = crate::algebra::poly::vars(&["x", "y", "z"]);
        let f = parse_poly_z("x^2 + x*y + y^2", &v).unwrap();
        let f2 = FiniteField::prime(2).unwrap();
        let z = ZetaFunction::from_factors([
            ZetaFactor { c: 1, e: 1, deg: 1 },
            ZetaFactor { c: 2, e: 1, deg: 2 },
        ]);
        let z_sq = ZetaFunction::from_factors([
            ZetaFactor { c: 1, e: 1, deg: 1 },
            ZetaFactor { c: 4, e: 1, deg: 2 },
        ]);
        for n in 1..=4 {
            let brute = count_hypersurface(&f, &f2, n, DEFAULT_SCAN_CAP).unwrap();
            assert_eq!(BigInt::from(brute), z_sq.count(n), "n = {n}");
            if n == 2 {
                assert_ne!(BigInt::from(brute), z.count(n));
            }
        }
    }

    #[test]
    fn counting_examples() {
        let f2 = FiniteField::prime(2).unwrap();
        let h = parse_poly_z("y0", &y_vars()).unwrap();
        assert_eq!(count_hypersurface(&h, &f2, 1, DEFAULT_SCAN_CAP).unwrap(), 15);
        assert_eq!(count_hypersurface(burkhardt_form(), &f2, 1, DEFAULT_SCAN_CAP).unwrap(), 23);
        let f7 = FiniteField::prime(7).unwrap();
        assert_eq!(count_hypersurface(burkhardt_form(), &f7, 1, DEFAULT_SCAN_CAP).unwrap(), 925);
        assert!(matches!(
            count_hypersurface(burkhardt_form(), &f7, 4, DEFAULT_SCAN_CAP),
            Err(Error::CapExceeded { .. })
        ));
        for (p, k) in [(2, 1), (2, 2), (2, 3), (5, 1), (7, 1), (2, 4), (11, 1), (5, 2)] {
            let f = FiniteField::new(p, k, None).unwrap();
            assert_eq!(count_burkhardt(&f).unwrap(), count_burkhardt_brute(&f, DEFAULT_SCAN_CAP).unwrap());
        }
    }

    #[test]
    fn off_hessian() {
        assert_eq!(off_hessian_formula(7).unwrap(), 0);
        assert_eq!(off_hessian_formula(5).unwrap(), 42);
        assert_eq!(off_hessian_formula(19).unwrap(), 1080);
        let f5 = FiniteField::prime(5).unwrap();
        assert_eq!(off_hessian_count(&f5, CountMode::Brute, DEFAULT_SCAN_CAP).unwrap(), 42);
        let b = count_burkhardt(&f5).unwrap();
        assert_eq!(hessian_intersection_count(&f5, DEFAULT_SCAN_CAP).unwrap(), b - 42);
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let line = zeta_pn(1, 5);
        let pt = zeta_pn(0, 5);
        let plane = zeta_pn(2, 5);
        let m = vec![vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 1]];
        let (e, z) = inclusion_exclusion(&m, &[line.clone(), line.clone(), pt.clone()]).unwrap();
        assert_eq!(e, vec![1, 1, -1]);
        assert_eq!(z, line.pow(2).div(&pt));
        let (e, _) = inclusion_exclusion(&[vec![1]], &[pt.clone()]).unwrap();
        assert_eq!(e, vec![1]);
        let (e, z) = inclusion_exclusion(&[vec![1, 0], vec![1, 1]], &[line, plane.clone()]).unwrap();
        assert_eq!(e, vec![0, 1]);
        assert_eq!(z, plane);
        assert!(inclusion_exclusion(&[vec![0]], &[pt]).is_err());
    }
}
