//! Fractions of polynomials without gcd reduction.

use std::fmt;

use super::poly::{MultiPoly, Vars};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// `num / den` with `den != 0`. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc<R: Ring> {
    num: MultiPoly<R>,
    den: MultiPoly<R>,
}

impl<R: Ring> RatFunc<R> {
    pub fn new(num: MultiPoly<R>, den: MultiPoly<R>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: MultiPoly<R>) -> Self {
        let den = MultiPoly::one(p.ring(), p.vars());
        RatFunc { num: p, den }
    }

    pub fn zero(ring: &R, vars: &Vars) -> Self {
        Self::from_poly(MultiPoly::zero(ring, vars))
    }

    pub fn numer(&self) -> &MultiPoly<R> {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly<R> {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly<R>, MultiPoly<R>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial `num / den` when the division is exact.
    pub fn as_poly(&self) -> Option<MultiPoly<R>> {
        self.num.div_exact(&self.den)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc { num: self.num.add(&other.num), den: self.den.clone() };
        }
        RatFunc {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den == other.num && !other.num.is_zero() {
            return RatFunc { num: self.num.clone(), den: other.den.clone() };
        }
        RatFunc { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num: self.num.mul(&other.den), den: self.den.mul(&other.num) })
    }

    pub fn scale_int(&self, n: i64) -> Self {
        RatFunc { num: self.num.scale_int(n), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// `a/b == c/d` iff `a*d - c*b == 0`.
    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Map both parts into another ring.
    pub fn try_map<S: Ring>(
        &self,
        target: &S,
        f: impl Fn(&R::Elem) -> Result<S::Elem> + Copy,
    ) -> Result<RatFunc<S>> {
        RatFunc::new(self.num.try_map(target, f)?, self.den.try_map(target, f)?)
    }

    /// Substitute polynomials for every variable.
    pub fn compose(&self, subs: &[MultiPoly<R>]) -> Result<Self> {
        RatFunc::new(self.num.compose(subs), self.den.compose(subs))
    }
}

impl<F: Field> RatFunc<F> {
    /// Evaluate at a point; fails if the denominator vanishes there.
    pub fn eval(&self, pt: &[F::Elem]) -> Result<F::Elem> {
        let d = self.den.eval(pt)?;
        let n = self.num.eval(pt)?;
        self.den.ring().div(&n, &d).ok_or(Error::DivisionByZero)
    }
}

impl<R: Ring> PartialEq for RatFunc<R> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<R: Ring> fmt::Debug for RatFunc<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::vars;
    use crate::algebra::ring::Integers;

    #[test]
    fn cross_multiplication_equality() {
        let v = vars(&["a", "b"]);
        let a = MultiPoly::var(&Integers, &v, 0);
        let b = MultiPoly::var(&Integers, &v, 1);
        let lhs = RatFunc::new(a.mul(&b), b.pow(2)).unwrap();
        let rhs = RatFunc::new(a.clone(), b.clone()).unwrap();
        assert_eq!(lhs, rhs);
        let sum = rhs.add(&RatFunc::from_poly(a.clone()));
        let expect = RatFunc::new(a.mul(&b).add(&a), b.clone()).unwrap();
        assert_eq!(sum, expect);
        assert!(RatFunc::new(a.clone(), MultiPoly::zero(&Integers, &v)).is_err());
    }
}
