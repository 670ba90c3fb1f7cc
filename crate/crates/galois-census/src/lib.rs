//! Exact-arithmetic toolkit for parametric integer polynomials: Galois
//! resolvent construction, Galois group identification of integer
//! specializations, and exhaustive specialization censuses with exponent
//! fitting.

pub mod census;
pub mod config;
pub mod error;
pub mod galois;
pub mod perm;
pub mod poly;
pub mod resolvent;

pub use error::{Error, Result};
