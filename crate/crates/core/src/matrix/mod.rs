//! Dense matrices over an exact field and the subspace engines built on them.

mod dense;
mod elim;
mod space;

pub use dense::Matrix;
pub use elim::{determinant, inverse, nullspace, rank, rref};
pub use space::MatSpace;
