//! Exact-arithmetic toolkit for the nilpotent-orbit data attached to
//! admissible levels of the simple Lie algebras.
//!
//! The crate builds finite root systems over the integers, classifies the
//! relevant classical nilpotent orbits by partitions, evaluates the
//! Elashvili-Kac-Vinberg counting formulas, counts integral roots of the
//! weights `rho/q - rho` and `rho^v/q - rho`, verifies the admissible-weight
//! translation identity on a truncated affine root window, and cross-checks
//! everything against an independent matrix oracle. A CLI (`orbitq`) batches
//! the verification and reproduces the bundled orbit tables.
//!
//! No floating point is used anywhere; all arithmetic is exact.

#![forbid(unsafe_code)]

mod error;

pub mod affine;
pub mod ekv;
pub mod integral_roots;
pub mod oracle;
pub mod orbits;
pub mod partitions;
pub mod render;
pub mod report;
pub mod rootsys;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
