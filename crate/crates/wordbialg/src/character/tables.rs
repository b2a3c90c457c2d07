//! Closed forms of single-word images in the fundamental and peak bases.

use super::psi::psi_word;
use super::zeta::{Character, Order};
use crate::combinat::{Composition, Word};
use crate::error::Result;
use crate::qsym::{fundamental_l, peak_k, QSym};

/// One identity `ψ(word) = closed form` evaluated on a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableIdentity {
    pub name: &'static str,
    pub holds: bool,
}

/// The eight identities for `w`:
/// `ψ_≤(w) = L_α`, `ψ_>(w) = L_{α^c}`, `ψ_≥(w^r) = L_{α^r}`, `ψ_<(w^r) = L_{α^t}`
/// with `I(α) = Des(w)`, and
/// `ψ_{>|≤}(w) = K_γ`, `ψ_{<|≥}(w) = K_β`, `ψ_{≥|<}(w^r) = K_{γ^♭}`,
/// `ψ_{≤|>}(w^r) = K_{β^♭}` with `I(γ) = Peak(w)`, `I(β) = Val(w)`.
pub fn word_table_identities(w: &Word) -> Result<Vec<TableIdentity>> {
    let n = w.len();
    let r = w.reversed();
    let alpha = Composition::from_descent_set(n, &w.descents());
    let gamma = Composition::from_descent_set(n, &w.peaks());
    let beta = Composition::from_descent_set(n, &w.valleys());
    let image = |c: Character, x: &Word| -> QSym<i64> { psi_word(c, x.letters(), n) };
    let conv = |a, b| Character::Conv(a, b);
    use Order::*;
    let cases: Vec<(&'static str, QSym<i64>, QSym<i64>)> = vec![
        ("psi_le(w) = L_a", image(Character::LE, w), fundamental_l(&alpha, n)?),
        ("psi_gt(w) = L_{a^c}", image(Character::GT, w), fundamental_l(&alpha.complement(), n)?),
        ("psi_ge(w^r) = L_{a^r}", image(Character::GE, &r), fundamental_l(&alpha.reverse(), n)?),
        ("psi_lt(w^r) = L_{a^t}", image(Character::LT, &r), fundamental_l(&alpha.transpose(), n)?),
        ("psi_gt|le(w) = K_peak", image(conv(Gt, Le), w), peak_k(&gamma, n)?),
        ("psi_lt|ge(w) = K_val", image(conv(Lt, Ge), w), peak_k(&beta, n)?),
        ("psi_ge|lt(w^r) = K_peak^flat", image(conv(Ge, Lt), &r), peak_k(&gamma.flat()?, n)?),
        ("psi_le|gt(w^r) = K_val^flat", image(conv(Le, Gt), &r), peak_k(&beta.flat()?, n)?),
    ];
    Ok(cases.into_iter().map(|(name, a, b)| TableIdentity { name, holds: a == b }).collect())
}
