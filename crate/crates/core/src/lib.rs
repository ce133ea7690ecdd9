//! Schubert calculus toolkit: Schubert polynomials and structure constants, layered
//! vanishing tests for Schubert coefficients in all classical types, and lifted
//! polynomial systems whose solution counts are Schubert coefficients.

pub mod cli;
pub mod error;
pub mod filters;
pub mod fp;
pub mod groebner;
pub mod lifted;
pub mod matrix;
pub mod poly;
pub mod purbhoo;
pub mod schubert;
pub mod selftest;
pub mod weyl;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use poly::{IntPolynomial, Monomial};
pub use weyl::{LieKind, LieType, Permutation, SignedPermutation, WeylElement};
