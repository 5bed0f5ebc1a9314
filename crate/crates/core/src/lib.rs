//! Arithmetic and geometry of the Burkhardt quartic threefold.

pub mod algebra;
pub mod burkhardt;
pub mod data;
pub mod error;
pub mod maps;
pub mod moduli;
pub mod projective;
pub mod suite;
pub mod zeta;

pub use error::{Error, Result};
