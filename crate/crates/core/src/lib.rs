//! Exact combinatorics of classical and non-commutative toric varieties.
//!
//! Every number is a [`Scalar`]: an element of `ℚ` or of a real quadratic
//! field `ℚ(√d)`. No decision procedure uses floating point.

pub mod cli;
pub mod error;
pub mod fvec;
pub mod fan;
pub mod hj;
pub mod hochschild;
pub mod json;
pub mod linalg;
pub mod lvm;
pub mod nctorus;
pub mod polytope;
pub mod quotient;
pub mod scalar;
pub mod svg;

pub use error::Error;
pub use scalar::{galois_conjugate, Scalar, ScalarError};
