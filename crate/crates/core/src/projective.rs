//! Points and linear subspaces of projective space.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::gf::FiniteField;
use crate::algebra::matrix::rank;
use crate::algebra::ring::Field;
use crate::error::{Error, Result};

/// A point of P^n: a nonzero coordinate vector up to scaling.
#[derive(Clone)]
pub struct ProjPoint<F: Field> {
    field: F,
    coords: Vec<F::Elem>,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(field: &F, coords: Vec<F::Elem>) -> Result<Self> {
        if coords.iter().all(|c| field.is_zero(c)) {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjPoint { field: field.clone(), coords })
    }

    pub fn from_ints(field: &F, coords: &[i64]) -> Result<Self> {
        Self::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Parse `"1:2:0:-3:1/2"`.
    pub fn parse(field: &F, text: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for (i, part) in text.split(':').enumerate() {
            let part = part.trim();
            let bad = || Error::Parse { pos: i, msg: format!("bad coordinate {part:?}") };
            let r = match part.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d == BigInt::from(0) {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(part.parse().map_err(|_| bad())?),
            };
            coords.push(field.from_rational(&r)?);
        }
        Self::new(field, coords)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Scaled so that the first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let lead = self.coords.iter().find(|c| !self.field.is_zero(c)).expect("nonzero point");
        let inv = self.field.inv(lead).expect("nonzero lead");
        ProjPoint {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| self.field.mul(c, &inv)).collect(),
        }
    }

    /// Scaled so that coordinate `i` is 1; `None` if it vanishes.
    pub fn dehomogenize(&self, i: usize) -> Option<Vec<F::Elem>> {
        let inv = self.field.inv(&self.coords[i])?;
        Some(self.coords.iter().map(|c| self.field.mul(c, &inv)).collect())
    }
}

impl<F: Field> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords.len() == other.coords.len() && self.normalized().coords == other.normalized().coords
    }
}

impl<F: Field> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| self.field.fmt_elem(c)).collect();
        write!(f, "{}", parts.join(":"))
    }
}

impl ProjPoint<FiniteField> {
    /// Canonical sort key: encodings of the normalized coordinates.
    pub fn key(&self) -> Vec<u32> {
        self.normalized().coords
    }
}

/// A linear subspace of P^n spanned by independent rows.
#[derive(Clone)]
pub struct LinearSubspace<F: Field> {
    field: F,
    basis: Vec<Vec<F::Elem>>,
}

impl<F: Field> LinearSubspace<F> {
    pub fn new(field: &F, basis: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = basis.first().map(|r| r.len()).ok_or(Error::ZeroPoint)?;
        if basis.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: 0 });
        }
        if rank(field, &basis) != basis.len() {
            return Err(Error::Precondition("basis rows are linearly dependent".into()));
        }
        Ok(LinearSubspace { field: field.clone(), basis })
    }

    /// The subspace cut out by the given linear forms (rows of coefficients).
    pub fn from_equations(field: &F, equations: &[Vec<F::Elem>], ambient: usize) -> Result<Self> {
        let basis = crate::algebra::matrix::nullspace(field, equations, ambient);
        Self::new(field, basis)
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn ambient_len(&self) -> usize {
        self.basis[0].len()
    }

    pub fn contains(&self, p: &ProjPoint<F>) -> bool {
        if p.len() != self.ambient_len() {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(p.coords().to_vec());
        rank(&self.field, &rows) == self.basis.len()
    }

    /// The point with homogeneous parameters `s` (one per basis row).
    pub fn point_at(&self, s: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.ambient_len()];
        for (coef, row) in s.iter().zip(&self.basis) {
            for (o, r) in out.iter_mut().zip(row) {
                *o = f.add(o, &f.mul(coef, r));
            }
        }
        out
    }
}

impl<F: Field> PartialEq for LinearSubspace<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.basis.len() != other.basis.len() || self.ambient_len() != other.ambient_len() {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        rank(&self.field, &rows) == self.basis.len()
    }
}

impl<F: Field> fmt::Debug for LinearSubspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| r.iter().map(|c| self.field.fmt_elem(c)).collect::<Vec<_>>().join(":"))
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

/// All normalized points of P^(n-1)(F), ordered by normalization stratum
/// and then by encoding.
pub fn projective_points(field: &FiniteField, n: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    let q = field.order() as u32;
    (0..n).flat_map(move |lead| {
        let free = n - lead - 1;
        let count = (q as u64).pow(free as u32);
        (0..count).map(move |mut idx| {
            let mut v = vec![0u32; n];
            v[lead] = 1;
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = (idx % q as u64) as u32;
                idx /= q as u64;
            }
            v
        })
    })
}

/// Work units for a parallel scan of P^(n-1)(F): each unit fixes the
/// leading coordinate position and, when there is one, the next coordinate.
fn scan_units(q: u32, n: usize) -> Vec<(usize, u32)> {
    (0..n)
        .flat_map(|lead| {
            let m = if lead + 1 < n { q } else { 1 };
            (0..m).map(move |a| (lead, a))
        })
        .collect()
}

fn for_each_in_unit(q: u32, n: usize, lead: usize, a: u32, mut visit: impl FnMut(&[u32])) {
    let mut v = vec![0u32; n];
    v[lead] = 1;
    if lead + 1 == n {
        visit(&v);
        return;
    }
    v[lead + 1] = a;
    let tail = lead + 2;
    loop {
        visit(&v);
        // odometer on v[tail..]
        let mut i = n;
        loop {
            if i == tail {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Sum of `weight` over all normalized points of P^(n-1)(F), in parallel.
pub fn par_sum_points(field: &FiniteField, n: usize, weight: impl Fn(&[u32]) -> u64 + Sync) -> u64 {
    use rayon::prelude::*;
    let q = field.order() as u32;
    scan_units(q, n)
        .into_par_iter()
        .map(|(lead, a)| {
            let mut acc = 0u64;
            for_each_in_unit(q, n, lead, a, |v| acc += weight(v));
            acc
        })
        .sum()
}

/// Normalized points of P^(n-1)(F) satisfying `keep`, sorted.
pub fn par_filter_points(field: &FiniteField, n: usize, keep: impl Fn(&[u32]) -> bool + Sync) -> Vec<Vec<u32>> {
    use rayon::prelude::*;
    let q = field.order() as u32;
    let mut out: Vec<Vec<u32>> = scan_units(q, n)
        .into_par_iter()
        .flat_map_iter(|(lead, a)| {
            let mut found = Vec::new();
            for_each_in_unit(q, n, lead, a, |v| {
                if keep(v) {
                    found.push(v.to_vec());
                }
            });
            found
        })
        .collect();
    out.sort();
    out
}

/// `#P^(n-1)(F_q)`.
pub fn projective_size(q: u64, n: usize) -> u128 {
    (0..n as u32).map(|i| (q as u128).pow(i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{Rationals, Ring};

    #[test]
    fn proportional_points_are_equal() {
        let f = FiniteField::prime(7).unwrap();
        let a = ProjPoint::from_ints(&f, &[2, 4, 0]).unwrap();
        let b = ProjPoint::from_ints(&f, &[1, 2, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.key(), vec![1, 2, 0]);
        assert!(ProjPoint::from_ints(&f, &[0, 7, 0]).is_err());
        let q = ProjPoint::parse(&Rationals, "1/2:-1:3").unwrap();
        assert_eq!(q, ProjPoint::from_ints(&Rationals, &[1, -2, 6]).unwrap());
        assert_eq!(q.to_string(), "1/2:-1:3");
    }

    #[test]
    fn parse_reduces_mod_p() {
        let f = FiniteField::prime(5).unwrap();
        let p = ProjPoint::parse(&f, "-1:1:1/2:0:6").unwrap();
        assert_eq!(p.coords(), &[4, 1, 3, 0, 1]);
        assert!(ProjPoint::parse(&f, "1:1/5").is_err());
        assert!(ProjPoint::parse(&f, "1:x").is_err());
    }

    #[test]
    fn subspace_membership() {
        let f = FiniteField::prime(5).unwrap();
        let z = f.zero();
        let o = f.one();
        // y0 = y1 = 0 in P^4
        let eq = vec![vec![o, z, z, z, z], vec![z, o, z, z, z]];
        let j1 = LinearSubspace::from_equations(&f, &eq, 5).unwrap();
        assert_eq!(j1.dim(), 2);
        assert!(j1.contains(&ProjPoint::from_ints(&f, &[0, 0, 1, 2, 3]).unwrap()));
        assert!(!j1.contains(&ProjPoint::from_ints(&f, &[0, 1, 1, 2, 3]).unwrap()));
    }

    #[test]
    fn enumerates_projective_space() {
        let f = FiniteField::prime(3).unwrap();
        let pts: Vec<_> = projective_points(&f, 3).collect();
        assert_eq!(pts.len(), 13);
        let f4 = FiniteField::new(2, 2, None).unwrap();
        assert_eq!(projective_points(&f4, 5).count(), 341);
        assert_eq!(par_sum_points(&f4, 5, |_| 1), 341);
        assert_eq!(projective_size(4, 5), 341);
        let all = par_filter_points(&f, 3, |_| true);
        let mut seq: Vec<_> = projective_points(&f, 3).collect();
        seq.sort();
        assert_eq!(all, seq);
    }
}
