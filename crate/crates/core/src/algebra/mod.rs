//! Exact coefficient arithmetic, polynomials, determinants and invariants.

pub mod binary;
pub mod compiled;
pub mod gf;
pub mod igusa;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod ring;

pub use binary::{cubic_discriminant, discriminant, resultant};
pub use compiled::CompiledPoly;
pub use gf::{default_modulus, is_prime, FiniteField};
pub use igusa::{igusa_clebsch, igusa_weighted_equal, IgusaClebsch};
pub use matrix::{det_bareiss, det_cofactor};
pub use parse::{parse_poly_q, parse_poly_z, parse_ratfunc};
pub use poly::{vars, Monomial, MultiPoly, Vars};
pub use ratfunc::RatFunc;
pub use ring::{Field, Integers, Rationals, Ring};

use crate::error::{Error, Result};

/// A coefficient field: the rationals or a finite field.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldDesc {
    Rationals,
    Finite(FiniteField),
}

impl FieldDesc {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDesc::Rationals => 0,
            FieldDesc::Finite(f) => f.p(),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteField> {
        match self {
            FieldDesc::Finite(f) => Some(f),
            FieldDesc::Rationals => None,
        }
    }
}

/// `p = 0` (with `k = 1`) gives the rationals; otherwise GF(p^k), using the
/// default modulus when `k > 1` and none is supplied.
pub fn field_make(p: u64, k: u32, modulus: Option<Vec<u32>>) -> Result<FieldDesc> {
    if p == 0 {
        if k != 1 || modulus.is_some() {
            return Err(Error::InvalidField("characteristic 0 requires k = 1 and no modulus".into()));
        }
        return Ok(FieldDesc::Rationals);
    }
    Ok(FieldDesc::Finite(FiniteField::new(p, k, modulus)?))
}
