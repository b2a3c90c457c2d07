//! Characters `ζ`, the morphisms `ψ` into quasi-symmetric functions, and the
//! special families and scans built on them.

pub mod families;
pub mod psi;
pub mod scan;
pub mod tables;
pub mod zeta;

pub use families::{grothendieck_family, hecke_words, increasing_tableau_shapes, j_lambda, k_tilde_lambda, stanley, tableau_j_sum, tableau_k_tilde_sum, GrothendieckFamily};
pub use psi::{psi, psi_class, psi_class_of, psi_members, psi_word, psi_word_direct, HasLetters, PsiAccumulator};
pub use scan::{judge, scan_instance, scan_packed, ClassVerdict, PositivityBasis, ScanBounds, ScanReport};
pub use tables::{word_table_identities, TableIdentity};
pub use zeta::{peak_zeta_closed_form, zeta_alpha, Character, Order};
