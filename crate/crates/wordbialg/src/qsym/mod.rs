//! Truncated quasi-symmetric and symmetric function arithmetic.
//!
//! Everything is stored in the monomial basis `M_α`; the fundamental, peak
//! and symmetric bases are conversion layers on top.

pub mod bases;
pub mod element;
pub mod sym;

pub use bases::{
    complete_h, elementary_e, from_variable_series, fundamental_l, monomial_sym, multi_fundamental, multi_fundamental_coefficient, peak_k,
    q_function, to_peak,
};
pub use element::{quasi_shuffle, rearrangement_count, QSym};
pub use sym::{
    is_schur_q_positive, kostka, kostka_row, schur, schur_expand, schur_p, schur_p_expand, schur_positive, schur_q, schur_q_coefficient,
    schur_q_expand, schur_q_positive, schur_q_row, to_monomial_sym, PositivityCertificate, SymBasis, SymExpansion,
};
