//! Igusa–Clebsch invariants of binary sextics.
//!
//! Normalization: with the transvectant
//!
//! ```text
//! (f, g)_k = (m-k)!(n-k)!/(m! n!) * sum_j (-1)^j C(k,j) d^k f/dx^(k-j) dz^j * d^k g/dx^j dz^(k-j)
//! ```
//!
//! and `i = (f,f)_4`, `D = (i,i)_2`, `y1 = (f,i)_4`, `y2 = (i,y1)_2`, `y3 = (i,y2)_2`,
//! `A = (f,f)_6`, `B = (i,i)_4`, `C = (i,D)_4`, `Dd = (y3,y1)_2`, we set
//!
//! ```text
//! I2  = -120 A
//! I4  = -720 A^2 + 6750 B
//! I6  = 8640 A^3 - 108000 A B + 202500 C
//! I10 = -62208 A^5 + 972000 A^3 B + 1620000 A^2 C - 3037500 A B^2
//!       - 6075000 B C - 4556250 Dd
//! ```
//!
//! For monic `f = prod (x - r_i)` these agree with the root-difference
//! definition; in particular `I10` is the product of squared root
//! differences, i.e. the discriminant of `f` when `f` is monic.

use num_bigint::BigInt;

use super::binary::{derivative_x, derivative_z, mul_forms};
use super::ring::Field;
use crate::error::{Error, Result};

/// The tuple `(I2, I4, I6, I10)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaClebsch<E> {
    pub i2: E,
    pub i4: E,
    pub i6: E,
    pub i10: E,
}

pub const WEIGHTS: [u64; 4] = [2, 4, 6, 10];

impl<E: Clone> IgusaClebsch<E> {
    pub fn as_array(&self) -> [E; 4] {
        [self.i2.clone(), self.i4.clone(), self.i6.clone(), self.i10.clone()]
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn add_forms<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

/// `d^a/dx^a d^b/dz^b f`.
fn partial<F: Field>(field: &F, f: &[F::Elem], a: usize, b: usize) -> Vec<F::Elem> {
    let mut g = f.to_vec();
    for _ in 0..a {
        g = derivative_x(field, &g);
    }
    for _ in 0..b {
        g = derivative_z(field, &g);
    }
    g
}

/// k-th transvectant of forms of degrees `f.len()-1`, `g.len()-1`.
pub fn transvectant<F: Field>(field: &F, f: &[F::Elem], g: &[F::Elem], k: usize) -> Result<Vec<F::Elem>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    if k > m || k > n {
        return Err(Error::Precondition("transvectant order exceeds degree".into()));
    }
    let num = factorial(m - k) * factorial(n - k);
    let den = factorial(m) * factorial(n);
    let scale = field.from_rational(&num_rational::BigRational::new(num, den))?;
    let mut acc = vec![field.zero(); m + n - 2 * k + 1];
    for j in 0..=k {
        let coef = binom(k, j) * if j % 2 == 0 { 1 } else { -1 };
        let prod = mul_forms(field, &partial(field, f, k - j, j), &partial(field, g, j, k - j));
        let c = field.from_i64(coef);
        let scaled: Vec<_> = prod.iter().map(|x| field.mul(x, &c)).collect();
        acc = add_forms(field, &acc, &scaled);
    }
    Ok(acc.iter().map(|x| field.mul(x, &scale)).collect())
}

fn scalar<F: Field>(form: Vec<F::Elem>) -> F::Elem {
    debug_assert_eq!(form.len(), 1);
    form.into_iter().next().expect("degree-0 transvectant")
}

/// Igusa–Clebsch invariants of a binary sextic given as 7 coefficients
/// (`x^6` first). Characteristic 2, 3 and 5 are refused.
pub fn igusa_clebsch<F: Field>(field: &F, f: &[F::Elem]) -> Result<IgusaClebsch<F::Elem>> {
    if f.len() != 7 {
        return Err(Error::DimensionMismatch { expected: 7, got: f.len() });
    }
    let p = field.characteristic();
    if matches!(p, 2 | 3 | 5) {
        return Err(Error::UnsupportedCharacteristic(p, "Igusa-Clebsch invariants need char 0 or >= 7"));
    }
    let i = transvectant(field, f, f, 4)?;
    let delta = transvectant(field, &i, &i, 2)?;
    let y1 = transvectant(field, f, &i, 4)?;
    let y2 = transvectant(field, &i, &y1, 2)?;
    let y3 = transvectant(field, &i, &y2, 2)?;
    let a = scalar::<F>(transvectant(field, f, f, 6)?);
    let b = scalar::<F>(transvectant(field, &i, &i, 4)?);
    let c = scalar::<F>(transvectant(field, &i, &delta, 4)?);
    let d = scalar::<F>(transvectant(field, &y3, &y1, 2)?);

    let k = |n: i64| field.from_i64(n);
    let lin = |terms: &[(i64, F::Elem)]| {
        terms.iter().fold(field.zero(), |acc, (n, t)| field.add(&acc, &field.mul(&k(*n), t)))
    };
    let a2 = field.mul(&a, &a);
    let a3 = field.mul(&a2, &a);
    let a5 = field.mul(&a3, &a2);
    let ab = field.mul(&a, &b);
    let i2 = lin(&[(-120, a.clone())]);
    let i4 = lin(&[(-720, a2.clone()), (6750, b.clone())]);
    let i6 = lin(&[(8640, a3.clone()), (-108000, ab.clone()), (202500, c.clone())]);
    let i10 = lin(&[
        (-62208, a5),
        (972000, field.mul(&a3, &b)),
        (1620000, field.mul(&a2, &c)),
        (-3037500, field.mul(&ab, &b)),
        (-6075000, field.mul(&b, &c)),
        (-4556250, d),
    ]);
    Ok(IgusaClebsch { i2, i4, i6, i10 })
}

/// Scale by `c`: `(c^2 I2, c^4 I4, c^6 I6, c^10 I10)`.
pub fn weighted_scale<F: Field>(field: &F, ic: &IgusaClebsch<F::Elem>, c: &F::Elem) -> IgusaClebsch<F::Elem> {
    let [a, b, cc, d] = ic.as_array();
    let s = |x: &F::Elem, w: u64| field.mul(x, &field.pow(c, w));
    IgusaClebsch { i2: s(&a, 2), i4: s(&b, 4), i6: s(&cc, 6), i10: s(&d, 10) }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether `b = (c^2 I2, c^4 I4, c^6 I6, c^10 I10)(a)` for some nonzero `c`
/// in an algebraic closure.
///
/// Both tuples must vanish in the same positions. For every pair of indices
/// `j, k` with `g = gcd(w_j, w_k)` we require
/// `a_j^(w_k/g) b_k^(w_j/g) = a_k^(w_j/g) b_j^(w_k/g)`. When the common
/// support is empty (both tuples zero) the answer is `true`. Otherwise the
/// ratios `r_j = b_j / a_j` on the support satisfy the cross relations,
/// which is exactly solvability of `t^(w_j/2) = r_j` for one `t = c^2`, since
/// all weights are even.
pub fn igusa_weighted_equal<F: Field>(
    field: &F,
    a: &IgusaClebsch<F::Elem>,
    b: &IgusaClebsch<F::Elem>,
) -> bool {
    let xa = a.as_array();
    let xb = b.as_array();
    for j in 0..4 {
        if field.is_zero(&xa[j]) != field.is_zero(&xb[j]) {
            return false;
        }
    }
    for j in 0..4 {
        for k in j + 1..4 {
            let g = gcd(WEIGHTS[j], WEIGHTS[k]);
            let (ej, ek) = (WEIGHTS[k] / g, WEIGHTS[j] / g);
            let lhs = field.mul(&field.pow(&xa[j], ej), &field.pow(&xb[k], ek));
            let rhs = field.mul(&field.pow(&xa[k], ek), &field.pow(&xb[j], ej));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{Rationals, Ring};
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    fn ic(v: &[i64]) -> Vec<BigRational> {
        igusa_clebsch(&Rationals, &q(v)).unwrap().as_array().to_vec()
    }

    // Values computed independently from the root-difference definition.
    #[test]
    fn regression_values() {
        assert_eq!(ic(&[1, 0, 0, 8, 0, 0, 1]), q(&[144, 22356, -99144, 157464000]));
        assert_eq!(ic(&[1, 0, 0, 0, 0, 0, 1]), q(&[-240, 1620, -119880, -46656]));
        assert_eq!(
            ic(&[2, -1, 3, 0, 5, 1, -4]),
            q(&[1640, 163216, 74474548, 10236949932])
        );
        assert_eq!(
            ic(&[1, 3, 0, -2, 1, 0, 7]),
            q(&[-1656, 107472, -57105648, 1102533845])
        );
        assert_eq!(ic(&[1, 0, 1, 0, 3, 0, 0]), q(&[-48, 1332, -13608, 0]));
    }

    #[test]
    fn weighted_comparison() {
        let a = igusa_clebsch(&Rationals, &q(&[1, 0, 0, 0, 0, 0, 1])).unwrap();
        let b = igusa_clebsch(&Rationals, &q(&[1, 0, 0, 8, 0, 0, 1])).unwrap();
        assert!(igusa_weighted_equal(&Rationals, &a, &a));
        assert!(!igusa_weighted_equal(&Rationals, &a, &b));
        let scaled = igusa_clebsch(&Rationals, &q(&[3, 0, 0, 0, 0, 0, 3])).unwrap();
        assert!(igusa_weighted_equal(&Rationals, &a, &scaled));
    }

    #[test]
    fn refuses_small_characteristic() {
        let f5 = crate::algebra::gf::FiniteField::prime(5).unwrap();
        assert!(igusa_clebsch(&f5, &[1, 0, 0, 0, 0, 0, 1]).is_err());
    }
}
