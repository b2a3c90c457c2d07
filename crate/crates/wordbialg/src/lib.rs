//! Exact computations with word bialgebras, word relations and their
//! canonical morphisms into quasi-symmetric functions.
//!
//! Coefficient-carrying types are generic over a [`Coeff`] ring; the aliases
//! below fix the rational field used throughout the command-line harness.

pub mod bialgebra;
pub mod character;
pub mod combinat;
pub mod error;
pub mod linear;
pub mod qsym;
pub mod relation;

pub use error::{Error, Result};
pub use linear::{Coeff, Field, LinComb, Ordered, Zp};

/// Exact rationals, the default coefficient field.
pub type Q = num_rational::BigRational;

/// Quasi-symmetric functions with rational coefficients.
pub type QSymQ = qsym::QSym<Q>;

/// Symmetric expansions with rational coefficients.
pub type SymQ = qsym::SymExpansion<Q>;

/// Elements of `W` with rational coefficients.
pub type WElementQ = LinComb<combinat::AnchoredWord, Q>;

/// Elements of `W_P` with rational coefficients.
pub type PackedElementQ = LinComb<combinat::Word, Q>;
