//! Exact computation with braided vector spaces: symmetrizer ranks and
//! graded dimensions, defining relations with primitivity certificates,
//! skew-derivation membership tests, Cartan matrices and reflections,
//! reflection groupoids with their root systems, and the rank-2
//! classification by cyclic sequences.
//!
//! Everything is exact: scalars live in cyclotomic fields (dense
//! rational coordinate vectors modulo a cyclotomic polynomial), in
//! Laurent polynomials over the integers, or in their fraction field.
//! A seeded evaluation homomorphism into a prime field provides an
//! optional fast path for generic ranks; it is clearly labeled as
//! one-sided and never replaces the exact routes in tests.

#![forbid(unsafe_code)]

pub mod braiding;
pub mod cartan;
pub mod config;
pub mod cyclotomic;
pub mod deriv;
pub mod elements;
pub mod engine;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod laurent;
pub mod linalg;
pub mod perm;
pub mod qcalc;
pub mod rank2;
pub mod ring;

pub use error::{EngineError, Result};
