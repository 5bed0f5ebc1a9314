//! Finite fields GF(p^k) backed by discrete-logarithm tables.
//!
//! An element is a `u32` holding the base-`p` digits of its coefficient
//! vector in the power basis `1, x, .., x^(k-1)` (least significant digit is
//! the constant term). The prime field is the range `0..p` with the usual
//! integers.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::ring::{reduce_mod, Field, Ring};
use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length k + 1). `[0, 1]` for k = 1.
    modulus: Vec<u32>,
    /// exp[i] = g^i for i in 0..2(q-1)
    exp: Vec<u32>,
    /// log[a] for a != 0
    log: Vec<u32>,
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
    generator: u32,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}) mod {}", self.0.p, self.0.k, self.modulus_string())
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomial helpers over GF(p), coefficients low to high.
mod dense {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
            for (i, &mi) in m.iter().enumerate() {
                let sub = (c as u64 * mi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
        trim(&mut out);
        out
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        pow_mod(a as u64, p as u64 - 2, p as u64) as u32
    }

    pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
        let mut acc = 1 % m;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        acc
    }
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

fn decode(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for enc in 0..count {
            let mut cand = decode(enc as u32, p, d as u32);
            cand.push(1);
            if dense::rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `k` whose lower coefficient vector, read as
/// a base-`p` number with the `x^(k-1)` coefficient most significant, is least.
pub fn default_modulus(p: u64, k: u32) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p32 = p as u32;
    let total = p
        .checked_pow(k)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or(Error::FieldTooLarge(p.saturating_pow(k)))?;
    for enc in 0..total {
        let mut m = decode(enc as u32, p32, k);
        m.push(1);
        if m[0] != 0 && is_irreducible(&m, p32) {
            return Ok(m);
        }
    }
    Err(Error::InvalidField(format!("no irreducible of degree {k} over GF({p})")))
}

impl FiniteField {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(p^k), with the default modulus when none is supplied.
    pub fn new(p: u64, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(k)))?;
        let p32 = p as u32;
        let modulus = match (k, modulus) {
            (1, Some(_)) => {
                return Err(Error::InvalidField(
                    "a modulus is only allowed for extension degree > 1".into(),
                ))
            }
            (1, None) => vec![0, 1],
            (_, Some(m)) => {
                let mut m: Vec<u32> = m.into_iter().map(|c| c % p32).collect();
                dense::trim(&mut m);
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus must be monic of degree {k}"
                    )));
                }
                if !is_irreducible(&m, p32) {
                    return Err(Error::ReducibleModulus(poly_string(&m, "x"), p));
                }
                m
            }
            (_, None) => default_modulus(p, k)?,
        };
        Ok(Self(Arc::new(Inner::build(p32, k, q as u32, modulus))))
    }

    pub fn p(&self) -> u64 {
        self.0.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q as u64
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn modulus_string(&self) -> String {
        poly_string(&self.0.modulus, "x")
    }

    /// The multiplicative generator used for the log tables.
    pub fn generator(&self) -> u32 {
        self.0.generator
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.0.q
    }

    /// Coefficients of `a` in the power basis, constant term first.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        decode(a, self.0.p, self.0.k)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> u32 {
        let reduced: Vec<u32> = coeffs.iter().map(|c| c % self.0.p).collect();
        let r = dense::rem(&reduced, &self.0.modulus, self.0.p);
        encode(&r, self.0.p)
    }

    /// Primitive cube roots of unity, in increasing encoding order.
    pub fn cube_roots_of_unity(&self) -> Vec<u32> {
        if (self.0.q - 1) % 3 != 0 {
            return Vec::new();
        }
        let third = (self.0.q - 1) / 3;
        let mut roots = vec![self.0.exp[third as usize], self.0.exp[2 * third as usize]];
        roots.sort_unstable();
        roots
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(&a, self.0.p as u64)
    }

    /// A ring homomorphism `self -> big`, given as an image table indexed by
    /// element encoding. Requires `self.degree()` to divide `big.degree()`.
    pub fn embedding_into(&self, big: &FiniteField) -> Result<Vec<u32>> {
        if self.p() != big.p() || big.degree() % self.degree() != 0 {
            return Err(Error::InvalidField(format!(
                "{self:?} does not embed into {big:?}"
            )));
        }
        if self.degree() == 1 {
            return Ok((0..self.0.q).collect());
        }
        let m = &self.0.modulus;
        let root = big
            .elements()
            .find(|&r| {
                let mut acc = 0u32;
                for &c in m.iter().rev() {
                    acc = big.add(&big.mul(&acc, &r), &c);
                }
                acc == 0
            })
            .ok_or_else(|| Error::InvalidField("modulus has no root in target".into()))?;
        let powers: Vec<u32> = (0..self.degree()).map(|i| big.pow(&root, i as u64)).collect();
        Ok(self
            .elements()
            .map(|a| {
                self.coefficients(a)
                    .iter()
                    .zip(&powers)
                    .fold(0u32, |acc, (&c, &pw)| big.add(&acc, &big.mul(&c, &pw)))
            })
            .collect())
    }

    #[inline]
    pub fn add_raw(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.k == 1 {
            let s = a + b;
            if s >= inner.p {
                s - inner.p
            } else {
                s
            }
        } else if inner.p == 2 {
            a ^ b
        } else if let Some(t) = &inner.add {
            t[(a * inner.q + b) as usize]
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..inner.k {
                let d = (a % inner.p + b % inner.p) % inner.p;
                out += d * place;
                place *= inner.p;
                a /= inner.p;
                b /= inner.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg_raw(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        if inner.k == 1 {
            return ((a as u64 * b as u64) % inner.p as u64) as u32;
        }
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let inner = &*self.0;
        Some(inner.exp[((inner.q - 1 - inner.log[a as usize]) % (inner.q - 1)) as usize])
    }
}

impl Inner {
    fn build(p: u32, k: u32, q: u32, modulus: Vec<u32>) -> Self {
        let slow_mul = |a: u32, b: u32| -> u32 {
            let prod = dense::mul(&decode(a, p, k), &decode(b, p, k), p);
            encode(&dense::rem(&prod, &modulus, p), p)
        };
        let order = q as u64 - 1;
        let factors = prime_factors(order);
        let slow_pow = |a: u32, mut e: u64| -> u32 {
            let mut acc = 1u32;
            let mut b = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, b);
                }
                b = slow_mul(b, b);
                e >>= 1;
            }
            acc
        };
        let generator = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| factors.iter().all(|&r| slow_pow(g, order / r) != 1))
                .expect("multiplicative group of a finite field is cyclic")
        };
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..n.max(1) {
            exp[i] = cur;
            log[cur as usize] = i as u32;
            cur = slow_mul(cur, generator);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let c: Vec<u32> = decode(a, p, k).into_iter().map(|d| (p - d) % p).collect();
                encode(&c, p)
            })
            .collect();
        let add = (k > 1 && p != 2 && q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = decode(a, p, k);
                for b in 0..q {
                    let db = decode(b, p, k);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = encode(&s, p);
                }
            }
            t
        });
        Inner { p, k, q, modulus, exp, log, add, neg, generator }
    }
}

fn poly_string(coeffs: &[u32], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl Ring for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.add_raw(*a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add_raw(*a, self.neg_raw(*b))
    }
    fn neg(&self, a: &u32) -> u32 {
        self.neg_raw(*a)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul_raw(*a, *b)
    }
    fn from_int(&self, n: &BigInt) -> u32 {
        reduce_mod(n, self.0.p as u64) as u32
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }
    fn div_exact(&self, a: &u32, b: &u32) -> Option<u32> {
        self.inv_raw(*b).map(|bi| self.mul_raw(*a, bi))
    }
    fn characteristic(&self) -> u64 {
        self.0.p as u64
    }
    fn fmt_elem(&self, a: &u32) -> String {
        if self.0.k == 1 {
            a.to_string()
        } else {
            let c = decode(*a, self.0.p, self.0.k);
            format!("[{}]", poly_string(&c, "x"))
        }
    }
    fn pow(&self, a: &u32, e: u64) -> u32 {
        if *a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let inner = &*self.0;
        let n = (inner.q - 1) as u64;
        if inner.k == 1 {
            return dense::pow_mod(*a as u64, e, inner.p as u64) as u32;
        }
        inner.exp[((inner.log[*a as usize] as u64 * (e % n)) % n) as usize]
    }
}

impl Field for FiniteField {
    fn inv(&self, a: &u32) -> Option<u32> {
        self.inv_raw(*a)
    }
}
