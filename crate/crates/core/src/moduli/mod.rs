//! Genus-2 curves attached to points of B, their level-3 certificates and
//! the Kummer and Weddle geometry.

pub mod symbolic;

pub mod curve;
pub mod kummer;
pub mod cover;
pub mod census;
