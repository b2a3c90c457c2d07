//! Exact scalars and sparse linear combinations.

mod lincomb;
mod scalar;

pub use lincomb::{KeyDisplay, LinComb};
pub use scalar::{rational, Coeff, Field, Integral, Ordered, Zp};
