//! Exact-arithmetic verification of Dipper-Donkin quantum GL₂ representations,
//! admissible q-spinors, and inner actions on the Clifford algebra C(1,3).
//!
//! All linear algebra is generic over [`Field`]; the concrete types below fix
//! it to ℚ(i)(q), with `q` a transcendental symbol, or to ℚ(i) for numeric
//! cross-checks at a sample point.

pub mod catalog;
pub mod clifford;
pub mod conjugacy;
pub mod error;
pub mod field;
pub mod gl2;
pub mod io;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod spinor;

pub use error::{Error, Result};
pub use field::{ComplexField, Field};
pub use matrix::{MatSpace as Space, Matrix};
pub use scalar::{GaussRational, Poly, RatFunc};

/// Coefficient field ℚ(i)(q).
pub type Scalar = RatFunc;

/// Square matrix over ℚ(i)(q).
pub type Mat = Matrix<Scalar>;

/// Matrix subspace over ℚ(i)(q).
pub type MatSpace = matrix::MatSpace<Scalar>;

/// Matrix after substituting a numeric sample point for `q`.
pub type NumMat = Matrix<GaussRational>;
