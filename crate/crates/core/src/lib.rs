//! Exact braided-tensor-category data for the quantum group of sl2 and the
//! first row of the Virasoro Kac table.
//!
//! Everything on the quantum-group side is computed in the field of rational
//! functions of `v = q^(1/2)` with arbitrary-precision integer coefficients,
//! so all structural identities (intertwining, pentagon, hexagon, ribbon)
//! are decided exactly. The Virasoro side carries exact rational data where
//! the statements are polynomial in the parameter `t` (central charge,
//! conformal weights, Shapovalov determinants) and double-precision phases
//! where they are genuinely transcendental.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `qcat` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braid;
pub mod cache;
pub mod complex;
pub mod error;
pub mod fusion;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod sixj;
pub mod virasoro;

pub use cache::Cache;
pub use complex::QComplex;
pub use error::{Error, Result};
pub use poly::LaurentPoly;
pub use rep::{CoproductSide, Gen, Irrep, LinMap, TensorWord};
pub use report::CheckReport;
pub use scalar::{qfact, qint, ScalarQ};
pub use sixj::SixJTable;
