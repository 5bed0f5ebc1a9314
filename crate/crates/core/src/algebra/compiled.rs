//! Polynomials over a finite field flattened for repeated evaluation.

use super::gf::FiniteField;
use super::poly::MultiPoly;
use super::ring::Integers;

/// A polynomial with coefficients reduced into a finite field, stored as a
/// flat term list. Evaluation reuses per-variable power tables.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    field: FiniteField,
    nvars: usize,
    max_deg: Vec<usize>,
    terms: Vec<(Vec<u8>, u32)>,
}

impl CompiledPoly {
    pub fn new(p: &MultiPoly<FiniteField>) -> Self {
        let nvars = p.nvars();
        let terms: Vec<(Vec<u8>, u32)> = p
            .terms()
            .map(|(m, c)| (m.exponents(nvars).iter().map(|&e| e as u8).collect(), *c))
            .collect();
        let max_deg = (0..nvars).map(|i| p.degree_in(i) as usize).collect();
        CompiledPoly { field: p.ring().clone(), nvars, max_deg, terms }
    }

    pub fn from_integer(p: &MultiPoly<Integers>, field: &FiniteField) -> Self {
        Self::new(&p.to_ring(field))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, pt: &[u32]) -> u32 {
        debug_assert_eq!(pt.len(), self.nvars);
        let f = &self.field;
        let powers: Vec<Vec<u32>> = pt
            .iter()
            .zip(&self.max_deg)
            .map(|(&x, &d)| {
                let mut pw = Vec::with_capacity(d + 1);
                pw.push(1u32);
                for j in 1..=d {
                    pw.push(f.mul_raw(pw[j - 1], x));
                }
                pw
            })
            .collect();
        let mut acc = 0u32;
        for (exps, c) in &self.terms {
            let mut t = *c;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t = f.mul_raw(t, powers[i][e as usize]);
                    if t == 0 {
                        break;
                    }
                }
            }
            acc = f.add_raw(acc, t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly_z;
    use crate::algebra::poly::vars;
    use crate::algebra::ring::Ring;

    #[test]
    fn matches_generic_eval() {
        let f = FiniteField::new(2, 3, None).unwrap();
        let v = vars(&["a", "b", "c"]);
        let p = parse_poly_z("a^3*b + 5*b*c^2 - c + 1", &v).unwrap();
        let pf = p.to_ring(&f);
        let cp = CompiledPoly::new(&pf);
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    assert_eq!(cp.eval(&[a, b, c]), pf.eval(&[a, b, c]).unwrap());
                }
            }
        }
        let _ = f.zero();
    }
}
