//! Named families of quasi-symmetric functions realized as `ψ`-images:
//! stable Grothendieck functions from Hecke words and their relatives.

use std::collections::BTreeMap;

use serde::Serialize;

use super::psi::psi_members;
use super::zeta::Character;
use crate::combinat::{semistandard_shape, Partition, Permutation, Word};
use crate::combinat::{is_increasing_tableau, word::Letters};
use crate::linear::Coeff;
use crate::qsym::QSym;

/// Hecke words of `π ∈ S_N` (letters in `[N-1]`) of length at most `max_len`,
/// grouped by length. Built layer by layer over `(length, Demazure product)`,
/// discarding prefixes whose product leaves the Bruhat interval below `π`.
pub fn hecke_words(pi: &Permutation, max_len: usize) -> Vec<Vec<Word>> {
    let n = pi.size();
    let mut layer: BTreeMap<Permutation, Vec<Letters>> = BTreeMap::new();
    layer.insert(Permutation::identity(n), vec![Letters::new()]);
    let mut out: Vec<Vec<Word>> = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        out.push(layer.get(pi).map(|ws| ws.iter().map(|l| Word::from_letters(l.clone())).collect()).unwrap_or_default());
        if len == max_len {
            break;
        }
        let mut next: BTreeMap<Permutation, Vec<Letters>> = BTreeMap::new();
        for (p, words) in &layer {
            for a in 1..n as u8 {
                let mut q = p.clone();
                q.demazure_step(a);
                if !q.bruhat_le(pi) {
                    continue;
                }
                let slot = next.entry(q).or_default();
                for w in words {
                    let mut x = w.clone();
                    x.push(a);
                    slot.push(x);
                }
            }
        }
        layer = next;
    }
    for ws in &mut out {
        ws.sort();
    }
    out
}

/// `K̃_π = ψ_>([[π]])`, `J_π = ψ_≤([[π]])` and `G_π = (-1)^{ℓ(π)} K̃_π(-x)`.
#[derive(Clone, Debug, Serialize)]
pub struct GrothendieckFamily<S: Coeff> {
    pub permutation: String,
    pub k_tilde: QSym<S>,
    pub j: QSym<S>,
    pub g: QSym<S>,
}

pub fn grothendieck_family<S: Coeff>(pi: &Permutation, degree: usize) -> GrothendieckFamily<S> {
    let words: Vec<Word> = hecke_words(pi, degree).into_iter().flatten().collect();
    let k_tilde: QSym<S> = psi_members(Character::GT, &words, degree);
    let j = psi_members(Character::LE, &words, degree);
    let mut g = k_tilde.negate_variables();
    if pi.length() % 2 == 1 {
        g = g.neg();
    }
    GrothendieckFamily { permutation: pi.to_string(), k_tilde, j, g }
}

/// `ψ_>` over the reduced words of `π`, the lowest-degree part of `G_π`.
pub fn stanley<S: Coeff>(pi: &Permutation, degree: usize) -> QSym<S> {
    let l = pi.length();
    let words = if l <= degree { hecke_words(pi, l).pop().unwrap_or_default() } else { Vec::new() };
    psi_members(Character::GT, &words, degree)
}

/// `J_λ` through a Grassmannian permutation of shape `λ`.
pub fn j_lambda<S: Coeff>(lambda: &Partition, degree: usize) -> QSym<S> {
    grothendieck_family(&Permutation::grassmannian(lambda), degree).j
}

/// `K̃_λ` through a Grassmannian permutation of shape `λ`.
pub fn k_tilde_lambda<S: Coeff>(lambda: &Partition, degree: usize) -> QSym<S> {
    grothendieck_family(&Permutation::grassmannian(lambda), degree).k_tilde
}

/// Shapes of the increasing tableaux among `members`.
pub fn increasing_tableau_shapes(members: &[Word]) -> Vec<Partition> {
    members.iter().filter(|w| is_increasing_tableau(w)).filter_map(semistandard_shape).collect()
}

/// `Σ J_{λ^t}` over the shapes `λ` of the increasing tableaux among
/// `members`. Tableaux are read row by row from the bottom, so a one-row
/// tableau has lowest term `h_n`, which is the lowest term of `J_{(1^n)}`.
pub fn tableau_j_sum<S: Coeff>(members: &[Word], degree: usize) -> QSym<S> {
    tableau_sum(members, degree, |lam| j_lambda(lam, degree))
}

/// `Σ K̃_{λ^t}` over the same shapes as [`tableau_j_sum`].
pub fn tableau_k_tilde_sum<S: Coeff>(members: &[Word], degree: usize) -> QSym<S> {
    tableau_sum(members, degree, |lam| k_tilde_lambda(lam, degree))
}

fn tableau_sum<S: Coeff, F: Fn(&Partition) -> QSym<S>>(members: &[Word], degree: usize, f: F) -> QSym<S> {
    let mut out = QSym::zero(degree);
    for lam in increasing_tableau_shapes(members) {
        if lam.size() <= degree {
            out = out.add(&f(&lam.transpose()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{eval_hecke_word, w, words_up_to};
    use crate::qsym::{complete_h, elementary_e};

    fn perm(s: &str) -> Permutation {
        Permutation::new(w(s).letters().to_vec()).unwrap()
    }

    #[test]
    fn hecke_words_match_evaluation() {
        let pi = perm("321");
        let layers = hecke_words(&pi, 5);
        for (len, ws) in layers.iter().enumerate() {
            let direct: Vec<Word> =
                words_up_to(2, 5).into_iter().filter(|x| x.len() == len && eval_hecke_word(x, 2).unwrap() == pi).collect();
            assert_eq!(ws, &direct);
        }
        assert_eq!(layers[3], vec![w("121"), w("212")]);
    }

    #[test]
    fn simple_transposition_family() {
        // Hecke words of s_1 are 1, 11, 111, …
        let s1 = perm("21");
        let f = grothendieck_family::<i64>(&s1, 4);
        assert_eq!(f.j.homogeneous(1), complete_h(1, 4).unwrap());
        assert_eq!(f.k_tilde.homogeneous(2), elementary_e(2, 4).unwrap());
        assert_eq!(f.j, f.k_tilde.omega_l());
        assert_eq!(stanley::<i64>(&s1, 4), complete_h(1, 4).unwrap());
    }
}
