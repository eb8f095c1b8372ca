//! Exact scalars: Gaussian rationals and rational functions in `q` over them.

mod gauss;
mod poly;
mod ratfunc;
mod text;

pub use gauss::GaussRational;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::{parse_gauss, parse_scalar};
