//! Determinants over polynomial rings, and dense linear algebra over fields.

use super::poly::MultiPoly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
    }
    Ok(n)
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
pub fn det_bareiss<R: Ring>(m: &[Vec<MultiPoly<R>>]) -> Result<MultiPoly<R>> {
    let n = check_square(m)?;
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let mut a: Vec<Vec<MultiPoly<R>>> = m.to_vec();
    let mut negate = false;
    let mut prev: Option<MultiPoly<R>> = None;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(m[0][0].ring(), m[0][0].vars())),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = match &prev {
                    Some(p) => t.div_exact(p).expect("Bareiss step divides exactly"),
                    None => t,
                };
            }
        }
        prev = Some(a[k][k].clone());
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Laplace expansion along the first row. Exponential; meant for n <= 5.
pub fn det_cofactor<R: Ring>(m: &[Vec<MultiPoly<R>>]) -> Result<MultiPoly<R>> {
    let n = check_square(m)?;
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    Ok(cofactor_rec(m, &(0..n).collect::<Vec<_>>(), 0))
}

fn cofactor_rec<R: Ring>(m: &[Vec<MultiPoly<R>>], cols: &[usize], row: usize) -> MultiPoly<R> {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = MultiPoly::zero(m[0][0].ring(), m[0][0].vars());
    for (pos, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].mul(&cofactor_rec(m, &rest, row + 1));
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Row echelon form in place; returns pivot columns and the sign of the row
/// permutation.
fn echelon<F: Field>(field: &F, a: &mut [Vec<F::Elem>]) -> (Vec<usize>, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut swapped = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swapped = !swapped;
        }
        let inv = field.inv(&a[r][c]).expect("nonzero pivot");
        for i in r + 1..rows {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for j in c..cols {
                let t = field.mul(&factor, &a[r][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, swapped)
}

pub fn det<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Result<F::Elem> {
    let n = check_square(m)?;
    let mut a = m.to_vec();
    let mut sign = false;
    let mut acc = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return Ok(field.zero());
        };
        if p != c {
            a.swap(p, c);
            sign = !sign;
        }
        let inv = field.inv(&a[c][c]).expect("nonzero pivot");
        acc = field.mul(&acc, &a[c][c]);
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for j in c..n {
                let t = field.mul(&factor, &a[c][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
    }
    Ok(if sign { field.neg(&acc) } else { acc })
}

pub fn rank<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut a = m.to_vec();
    echelon(field, &mut a).0.len()
}

/// A basis of `{v : M v = 0}`.
pub fn nullspace<F: Field>(field: &F, m: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut a = m.to_vec();
    let (pivots, _) = echelon(field, &mut a);
    // back-substitute to reduced form
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = field.inv(&a[r][c]).expect("nonzero pivot");
        for j in c..ncols {
            a[r][j] = field.mul(&a[r][j], &inv);
        }
        for i in 0..r {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = a[i][c].clone();
            for j in c..ncols {
                let t = field.mul(&factor, &a[r][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = field.neg(&a[r][f]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gf::FiniteField;
    use crate::algebra::parse::parse_poly_z;
    use crate::algebra::poly::vars;
    use crate::algebra::ring::Integers;

    #[test]
    fn diagonal_and_one_by_one() {
        let v = vars(&["y0", "y1", "y2", "y3"]);
        let p = |s: &str| parse_poly_z(s, &v).unwrap();
        let m = vec![vec![p("y0^2 + 1")]];
        assert_eq!(det_bareiss(&m).unwrap(), p("y0^2 + 1"));
        let z = p("0");
        let d = vec![
            vec![p("y0"), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), p("y1"), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), p("y2"), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), p("y3")],
        ];
        assert_eq!(det_bareiss(&d).unwrap(), p("y0*y1*y2*y3"));
        assert_eq!(det_cofactor(&d).unwrap(), p("y0*y1*y2*y3"));
    }

    #[test]
    fn pivoting_needed() {
        let v = vars(&["a"]);
        let p = |s: &str| parse_poly_z(s, &v).unwrap();
        let m = vec![vec![p("0"), p("a")], vec![p("1"), p("a^2")]];
        assert_eq!(det_bareiss(&m).unwrap(), p("-a"));
        assert_eq!(det_cofactor(&m).unwrap(), p("-a"));
        let _ = Integers;
    }

    #[test]
    fn field_rank_and_nullspace() {
        let f = FiniteField::prime(7).unwrap();
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&f, &m), 2);
        assert_eq!(det(&f, &m).unwrap(), 0);
        let ns = nullspace(&f, &m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let s = row.iter().zip(&ns[0]).fold(0, |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            assert_eq!(s, 0);
        }
        let id = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det(&f, &id).unwrap(), 6);
    }
}
