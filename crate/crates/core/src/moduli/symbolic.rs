//! The decomposition data over `Q(a1, a2, a3, a4)[X]` and the identities it
//! satisfies.

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::parse::{parse_poly_z, parse_ratfunc};
use crate::algebra::poly::{vars, MultiPoly, Vars};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::ring::Integers;
use crate::data::{HLGS, HLG_DUAL};

/// `a1, a2, a3, a4, X`.
pub fn hlg_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| vars(&["a1", "a2", "a3", "a4", "X"])).clone()
}

pub const X_INDEX: usize = 4;

/// A triple `(H, lambda, G)` of rational functions in `a1..a4, X`.
pub type Triple = [RatFunc<Integers>; 3];

/// The four triples marked by `y0 = yi = 0` followed by the dual triple.
pub fn hlg_triples() -> &'static [Triple; 5] {
    static T: OnceLock<[Triple; 5]> = OnceLock::new();
    T.get_or_init(|| {
        let v = hlg_vars();
        let parse = |s: &str| parse_ratfunc(s, &v).expect("valid decomposition data");
        [HLGS[0], HLGS[1], HLGS[2], HLGS[3], HLG_DUAL].map(|t| t.map(parse))
    })
}

/// `G^2 + 4 lambda H^3`.
pub fn triple_sextic(t: &Triple) -> RatFunc<Integers> {
    let [h, l, g] = t;
    g.pow(2).add(&l.mul(&h.pow(3)).scale_int(4))
}

/// `1 + a1^3 + a2^3 + a3^3 + a4^3 + 3 a1 a2 a3 a4`, monic of degree 3 in `a4`.
pub fn burkhardt_relation() -> MultiPoly<Integers> {
    parse_poly_z("1 + a1^3 + a2^3 + a3^3 + a4^3 + 3*a1*a2*a3*a4", &hlg_vars()).expect("valid")
}

/// Remainder of `p` modulo a polynomial monic in variable `var`.
pub fn reduce_monic(p: &MultiPoly<Integers>, var: usize, r: &MultiPoly<Integers>) -> MultiPoly<Integers> {
    let d = r.degree_in(var);
    let v = MultiPoly::var(&Integers, p.vars(), var);
    let mut p = p.clone();
    loop {
        let k = p.degree_in(var);
        if k < d || p.is_zero() {
            return p;
        }
        let lead = p.coefficients_in(var).pop().expect("nonzero");
        p = p.sub(&lead.mul(&v.pow(k - d)).mul(r));
    }
}

/// Whether `a = c * b` as rational functions, optionally modulo the relation.
fn ratio_is(a: &RatFunc<Integers>, b: &RatFunc<Integers>, c: i64, modulo: bool) -> bool {
    let lhs = a.numer().mul(b.denom());
    let rhs = b.numer().mul(a.denom()).scale_int(c);
    let diff = lhs.sub(&rhs);
    if modulo {
        reduce_monic(&diff, 3, &burkhardt_relation()).is_zero()
    } else {
        diff.is_zero()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MasterReport {
    pub modulo_relation: bool,
    /// Triple `i` (`J1..J4`) gives the same sextic as triple 1.
    pub agree_with_first: Vec<bool>,
    /// `G'^2 + 4 lambda' H'^3 = -3 F` for the dual triple.
    pub dual_ratio_minus_three: bool,
}

impl MasterReport {
    pub fn passed(&self) -> bool {
        self.agree_with_first.iter().all(|&b| b) && self.dual_ratio_minus_three
    }
}

/// The four `J1..J4` sextics coincide and the dual one is `-3` times them,
/// either as exact identities or modulo `f(1, a1, ..., a4)`.
pub fn verify_master_identity(modulo_relation: bool) -> MasterReport {
    let t = hlg_triples();
    let sextics: Vec<RatFunc<Integers>> = t.iter().map(triple_sextic).collect();
    let agree_with_first = (0..4).map(|i| ratio_is(&sextics[i], &sextics[0], 1, modulo_relation)).collect();
    let dual_ratio_minus_three = ratio_is(&sextics[4], &sextics[0], -3, modulo_relation);
    MasterReport { modulo_relation, agree_with_first, dual_ratio_minus_three }
}

/// The triple displayed with the explicit curve, in `a1..a4, X` (`z = 1`).
pub fn explicit_triple() -> &'static Triple {
    static T: OnceLock<Triple> = OnceLock::new();
    T.get_or_init(|| {
        let v = hlg_vars();
        let h = "a2*X^2 - a3*X - a1*a4";
        let g = "(a1^3*a4^3 + 3*a1*a2*a3*a4^4 + 2*a2^3*a4^3 + a2^3 + a3^3*a4^3)*X^3 \
                 + 3*a2*(a4^3 + 1)*(a1^2*a4^2 - a2*a3)*X^2 \
                 - 3*a3*(a4^3 + 1)*(a1^2*a4^2 - a2*a3)*X \
                 + (-2*a1^3*a4^6 - a1^3*a4^3 + 3*a1*a2*a3*a4^4 + a2^3*a4^3 - a3^3)";
        let l = "a4^3*(a4^3 + 1)*(a1*a4 - a2 - a3)\
                 *(a1^2*a4^2 + a1*a2*a4 + a1*a3*a4 + a2^2 - a2*a3 + a3^2)";
        [h, l, g].map(|s| parse_ratfunc(s, &v).expect("valid"))
    })
}

/// `G` with `(a4^2 + 1)` in place of `(a4^3 + 1)` in the `X` coefficient.
/// This variant does not reproduce the sextic.
pub const G_VARIANT_A4_SQUARED: &str = "(a1^3*a4^3 + 3*a1*a2*a3*a4^4 + 2*a2^3*a4^3 + a2^3 + a3^3*a4^3)*X^3 \
     + 3*a2*(a4^3 + 1)*(a1^2*a4^2 - a2*a3)*X^2 \
     - 3*a3*(a4^2 + 1)*(a1^2*a4^2 - a2*a3)*X \
     + (-2*a1^3*a4^6 - a1^3*a4^3 + 3*a1*a2*a3*a4^4 + a2^3*a4^3 - a3^3)";

/// The explicit triple with `G` replaced by [`G_VARIANT_A4_SQUARED`].
pub fn variant_triple() -> Triple {
    let mut t = explicit_triple().clone();
    t[2] = parse_ratfunc(G_VARIANT_A4_SQUARED, &hlg_vars()).expect("valid");
    t
}

/// Whether two triples give the same sextic.
pub fn same_sextic(a: &Triple, b: &Triple, modulo_relation: bool) -> bool {
    ratio_is(&triple_sextic(a), &triple_sextic(b), 1, modulo_relation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn master_identity_holds_without_relation() {
        let r = verify_master_identity(false);
        assert!(r.passed(), "{r:?}");
        assert!(verify_master_identity(true).passed());
    }

    #[test]
    fn explicit_triple_is_the_third() {
        let e = explicit_triple();
        let t = &hlg_triples()[2];
        assert!(same_sextic(e, t, false));
        for k in [0, 2] {
            assert!(ratio_is(&e[k], &t[k], 1, false));
        }
        assert!(!ratio_is(&e[0], &hlg_triples()[0][0], 1, false));
        let mut printed = e.clone();
        printed[2] = parse_ratfunc(G_VARIANT_A4_SQUARED, &hlg_vars()).unwrap();
        assert!(!same_sextic(&printed, e, false));
        assert!(!same_sextic(&printed, e, true));
    }

    #[test]
    fn perturbed_triple_fails() {
        let mut t = hlg_triples()[0].clone();
        let x3 = RatFunc::from_poly(MultiPoly::var(&Integers, &hlg_vars(), X_INDEX).pow(3));
        t[2] = t[2].add(&x3);
        assert!(!same_sextic(&t, &hlg_triples()[0], false));
        assert!(!same_sextic(&t, &hlg_triples()[0], true));
    }

    #[test]
    fn reduction_modulo_relation() {
        let r = burkhardt_relation();
        let v = hlg_vars();
        let p = parse_poly_z("a4^5 + X*a4^3", &v).unwrap();
        let q = reduce_monic(&p, 3, &r);
        assert!(q.degree_in(3) < 3);
        assert!(reduce_monic(&p.sub(&q), 3, &r).is_zero());
        assert!(reduce_monic(&r.mul(&p), 3, &r).is_zero());
    }
}
