//! Sparse multivariate polynomials in graded-lex order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{Field, Integers, Rationals, Ring};
use crate::error::{Error, Result};

/// Maximum number of variables a polynomial may have.
pub const MAX_VARS: usize = 16;

/// An exponent vector packed one byte per variable, first variable in the
/// most significant byte. Deriving `Ord` on `(total, packed)` gives graded
/// lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    total: u32,
    packed: u128,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { total: 0, packed: 0 };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut packed = 0u128;
        let mut total = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 256, "exponent {e} too large");
            packed |= (e as u128) << shift(i);
            total += e;
        }
        Monomial { total, packed }
    }

    pub fn var(i: usize, e: u32) -> Self {
        assert!(e < 256 && i < MAX_VARS);
        Monomial { total: e, packed: (e as u128) << shift(i) }
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.packed >> shift(i)) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.total
    }

    #[inline]
    fn mul(self, other: Monomial) -> Monomial {
        Monomial { total: self.total + other.total, packed: self.packed + other.packed }
    }

    fn divides(&self, other: &Monomial, nvars: usize) -> bool {
        (0..nvars).all(|i| self.exponent(i) <= other.exponent(i))
    }

    fn div(self, other: Monomial) -> Monomial {
        Monomial { total: self.total - other.total, packed: self.packed - other.packed }
    }
}

#[inline]
fn shift(i: usize) -> u32 {
    (8 * (MAX_VARS - 1 - i)) as u32
}

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// A polynomial over `R`: no stored zero coefficients, keys in graded-lex
/// order, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    vars: Vars,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: &R, vars: &Vars) -> Self {
        MultiPoly { ring: ring.clone(), vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &R, vars: &Vars, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, vars);
        if !ring.is_zero(&c) {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(ring: &R, vars: &Vars) -> Self {
        Self::constant(ring, vars, ring.one())
    }

    pub fn from_int(ring: &R, vars: &Vars, n: i64) -> Self {
        Self::constant(ring, vars, ring.from_i64(n))
    }

    /// The variable with index `i`.
    pub fn var(ring: &R, vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Self::monomial(ring, vars, ring.one(), Monomial::var(i, 1))
    }

    pub fn var_named(ring: &R, vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::VariableMismatch(format!("unknown variable {name}")))?;
        Ok(Self::var(ring, vars, i))
    }

    pub fn monomial(ring: &R, vars: &Vars, c: R::Elem, m: Monomial) -> Self {
        let mut p = Self::zero(ring, vars);
        if !ring.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(ring: &R, vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, R::Elem)>,
    {
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => ring.add_assign(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        MultiPoly { ring: ring.clone(), vars: vars.clone(), terms }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn coeff_of(&self, exps: &[u32]) -> R::Elem {
        self.coeff(&Monomial::from_exponents(exps))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&Monomial::ONE)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    fn check_compat(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "variable lists differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compat(other);
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            match out.get_mut(m) {
                Some(e) => {
                    self.ring.add_assign(e, c);
                    if self.ring.is_zero(e) {
                        out.remove(m);
                    }
                }
                None => {
                    out.insert(*m, c.clone());
                }
            }
        }
        MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, self.ring.neg(c))).collect();
        MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        if self.ring.is_zero(c) {
            return Self::zero(&self.ring, &self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (*m, self.ring.mul(a, c)))
            .filter(|(_, a)| !self.ring.is_zero(a))
            .collect();
        MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&self.ring.from_i64(n))
    }

    fn check_degree_room(&self, other: &Self) {
        for i in 0..self.nvars() {
            assert!(
                self.degree_in(i) + other.degree_in(i) < 256,
                "exponent overflow in variable {}",
                self.vars[i]
            );
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compat(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring, &self.vars);
        }
        self.check_degree_room(other);
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<Monomial, R::Elem> =
            HashMap::with_capacity(small.terms.len() * large.terms.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(*mb);
                let prod = self.ring.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => self.ring.add_assign(e, &prod),
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !self.ring.is_zero(c)).collect();
        MultiPoly { ring: self.ring.clone(), vars: self.vars.clone(), terms }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring, &self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None` if `d` does
    /// not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_compat(d);
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let n = self.nvars();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ring, &self.vars);
        while let Some((rm, rc)) = rem.leading_term() {
            if !lm.divides(rm, n) {
                return None;
            }
            let c = self.ring.div_exact(rc, &lc)?;
            let t = Self::monomial(&self.ring, &self.vars, c, rm.div(lm));
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            (e > 0).then(|| {
                let c2 = self.ring.mul(c, &self.ring.from_i64(e as i64));
                (m.div(Monomial::var(var, 1)), c2)
            })
        });
        Self::from_terms(&self.ring, &self.vars, terms)
    }

    /// Evaluate at a point of the coefficient ring.
    pub fn eval(&self, pt: &[R::Elem]) -> Result<R::Elem> {
        if pt.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: pt.len() });
        }
        let powers = self.power_table(pt);
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t = self.ring.mul(&t, &pw[e]);
                }
            }
            self.ring.add_assign(&mut acc, &t);
        }
        Ok(acc)
    }

    fn power_table(&self, pt: &[R::Elem]) -> Vec<Vec<R::Elem>> {
        pt.iter()
            .enumerate()
            .map(|(i, x)| {
                let d = self.degree_in(i) as usize;
                let mut pw = Vec::with_capacity(d + 1);
                pw.push(self.ring.one());
                for j in 1..=d {
                    let next = self.ring.mul(&pw[j - 1], x);
                    pw.push(next);
                }
                pw
            })
            .collect()
    }

    /// Substitute polynomials (all over a common variable list) for every
    /// variable.
    pub fn compose(&self, subs: &[MultiPoly<R>]) -> Self {
        assert_eq!(subs.len(), self.nvars(), "one substitution per variable");
        let target = subs[0].vars.clone();
        let mut cache: Vec<Vec<MultiPoly<R>>> = subs
            .iter()
            .map(|s| vec![MultiPoly::one(&self.ring, &target), s.clone()])
            .collect();
        let mut acc = MultiPoly::zero(&self.ring, &target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&self.ring, &target, c.clone());
            for (i, pw) in cache.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = pw[pw.len() - 1].mul(&subs[i]);
                    pw.push(next);
                }
                t = t.mul(&pw[e]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute ring elements for some variables, keeping the variable list.
    pub fn specialize(&self, assignments: &[(usize, R::Elem)]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut c = c.clone();
            let mut exps = m.exponents(self.nvars());
            for (i, v) in assignments {
                let e = exps[*i];
                if e > 0 {
                    c = self.ring.mul(&c, &self.ring.pow(v, e as u64));
                    exps[*i] = 0;
                }
            }
            (Monomial::from_exponents(&exps), c)
        });
        Self::from_terms(&self.ring, &self.vars, terms)
    }

    /// Re-express over a new variable list; `map[i]` is the new index of old
    /// variable `i`. Panics if an old variable that occurs has no image.
    pub fn rename(&self, new_vars: &Vars, map: &[Option<usize>]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; new_vars.len()];
            for (i, slot) in map.iter().enumerate() {
                let e = m.exponent(i);
                match slot {
                    Some(j) => exps[*j] += e,
                    None => assert!(e == 0, "variable {} has no image", self.vars[i]),
                }
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        MultiPoly::from_terms(&self.ring, new_vars, terms)
    }

    /// Re-express over `new_vars`, matching variables by name.
    pub fn with_vars(&self, new_vars: &Vars) -> Result<Self> {
        let map: Vec<Option<usize>> =
            self.vars.iter().map(|v| new_vars.iter().position(|w| w == v)).collect();
        for (i, slot) in map.iter().enumerate() {
            if slot.is_none() && self.degree_in(i) > 0 {
                return Err(Error::VariableMismatch(format!(
                    "variable {} missing from target list",
                    self.vars[i]
                )));
            }
        }
        Ok(self.rename(new_vars, &map))
    }

    /// Map coefficients into another ring.
    pub fn try_map<S: Ring>(
        &self,
        target: &S,
        f: impl Fn(&R::Elem) -> Result<S::Elem>,
    ) -> Result<MultiPoly<S>> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !target.is_zero(&v) {
                terms.insert(*m, v);
            }
        }
        Ok(MultiPoly { ring: target.clone(), vars: self.vars.clone(), terms })
    }

    /// Coefficients as a univariate polynomial in `var`: entry `i` is the
    /// coefficient of `var^i`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, R::Elem)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            buckets[e as usize].push((m.div(Monomial::var(var, e)), c.clone()));
        }
        buckets.into_iter().map(|b| Self::from_terms(&self.ring, &self.vars, b)).collect()
    }
}

impl MultiPoly<Integers> {
    /// Image in any ring via `Z -> R`.
    pub fn to_ring<S: Ring>(&self, target: &S) -> MultiPoly<S> {
        self.try_map(target, |c| Ok(target.from_int(c))).expect("integer maps never fail")
    }

    /// gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::from(0), |g, c| g.gcd(c))
    }

    pub fn to_rationals(&self) -> MultiPoly<Rationals> {
        self.to_ring(&Rationals)
    }
}

impl MultiPoly<Rationals> {
    /// Image in a field; fails if a denominator vanishes there.
    pub fn to_field<F: Field>(&self, target: &F) -> Result<MultiPoly<F>> {
        self.try_map(target, |c| target.from_rational(c))
    }

    /// The polynomial over Z, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<MultiPoly<Integers>> {
        self.try_map(&Integers, |c: &BigRational| {
            if c.is_integer() {
                Ok(c.numer().clone())
            } else {
                Err(Error::Precondition("non-integral".into()))
            }
        })
        .ok()
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    /// Renders in the shared polynomial grammar, highest term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut cs = self.ring.fmt_elem(c);
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for i in 0..self.nvars() {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    e => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", cs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FiniteField;

    fn xyz() -> Vars {
        vars(&["x", "y", "z"])
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_exponents(&[1, 0, 0]);
        let b = Monomial::from_exponents(&[0, 2, 0]);
        let c = Monomial::from_exponents(&[0, 1, 1]);
        assert!(a < b);
        assert!(c < b);
        assert!(Monomial::from_exponents(&[0, 0, 1]) < a);
    }

    #[test]
    fn arithmetic_and_display() {
        let v = xyz();
        let x = MultiPoly::var(&Integers, &v, 0);
        let y = MultiPoly::var(&Integers, &v, 1);
        let p = x.add(&y).pow(2);
        assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(p.sub(&p), MultiPoly::zero(&Integers, &v));
        assert_eq!(x.sub(&y).mul(&x.add(&y)).to_string(), "x^2 - y^2");
    }

    #[test]
    fn exact_division() {
        let v = xyz();
        let x = MultiPoly::var(&Integers, &v, 0);
        let y = MultiPoly::var(&Integers, &v, 1);
        let z = MultiPoly::var(&Integers, &v, 2);
        let a = x.add(&y.scale_int(2)).sub(&z);
        let b = x.mul(&y).sub(&z.pow(3)).add(&MultiPoly::from_int(&Integers, &v, 5));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.add(&x).div_exact(&a), None);
        // 2x is not divisible by 3 over Z
        assert_eq!(x.scale_int(2).div_exact(&x.scale_int(3)), None);
    }

    #[test]
    fn derivative_and_eval() {
        let v = xyz();
        let x = MultiPoly::var(&Integers, &v, 0);
        let y = MultiPoly::var(&Integers, &v, 1);
        let p = x.pow(3).mul(&y).add(&y.pow(2));
        assert_eq!(p.derivative(0).to_string(), "3*x^2*y");
        let pt: Vec<BigInt> = [2, 3, 7].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(p.eval(&pt).unwrap(), BigInt::from(8 * 3 + 9));
    }

    #[test]
    fn composition() {
        let v = xyz();
        let w = vars(&["s", "t"]);
        let s = MultiPoly::var(&Integers, &w, 0);
        let t = MultiPoly::var(&Integers, &w, 1);
        let x = MultiPoly::var(&Integers, &v, 0);
        let y = MultiPoly::var(&Integers, &v, 1);
        let p = x.mul(&y);
        let q = p.compose(&[s.add(&t), s.sub(&t), t.clone()]);
        assert_eq!(q, s.pow(2).sub(&t.pow(2)));
    }

    #[test]
    fn reduce_mod_p() {
        let v = xyz();
        let x = MultiPoly::var(&Integers, &v, 0);
        let f = FiniteField::prime(5).unwrap();
        let p = x.scale_int(10).add(&MultiPoly::from_int(&Integers, &v, 7));
        assert_eq!(p.to_ring(&f).to_string(), "2");
    }
}
