//! The terminal morphisms `ψ(v) = Σ_α ζ_α(v) M_α` on words, linear
//! combinations and relation classes.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;

use super::zeta::{sign_key, signs_of_key, zeta_alpha, Character};
use crate::combinat::{AnchoredWord, Composition, Word};
use crate::error::{Error, Result};
use crate::linear::{Coeff, LinComb};
use crate::qsym::QSym;
use crate::relation::RelationInstance;

/// Basis elements that carry a word.
pub trait HasLetters {
    fn letters(&self) -> &[u8];
}

impl HasLetters for Word {
    fn letters(&self) -> &[u8] {
        Word::letters(self)
    }
}

impl HasLetters for AnchoredWord {
    fn letters(&self) -> &[u8] {
        self.word.letters()
    }
}

/// `ψ(w)` straight from the definition, one composition at a time.
pub fn psi_word_direct<S: Coeff>(c: Character, w: &[u8], degree: usize) -> QSym<S> {
    let mut out = QSym::zero(degree);
    if w.len() > degree {
        return out;
    }
    for alpha in Composition::all_of(w.len()) {
        let z = zeta_alpha(c, w, &alpha);
        if z != 0 {
            out.add_term(alpha, S::int(z));
        }
    }
    out
}

/// M-coefficients of `ψ(w)` indexed by the descent mask of `α`, for a word
/// known only through its length and comparison signs.
fn table_for(c: Character, len: usize, signs: &[u8]) -> Vec<i64> {
    if len == 0 {
        return vec![1];
    }
    // piece[i][j]: value of the piece w_i..w_{j-1}
    let mut piece = vec![vec![0i64; len + 1]; len + 1];
    for i in 0..len {
        for j in i + 1..=len {
            piece[i][j] = c.value_from_signs(j - i, &signs[i..j - 1]);
        }
    }
    let masks = 1usize << (len - 1);
    let mut out = vec![0i64; masks];
    for (mask, slot) in out.iter_mut().enumerate() {
        let mut start = 0;
        let mut acc = 1;
        for cut in 1..=len {
            if cut == len || mask >> (cut - 1) & 1 == 1 {
                acc *= piece[start][cut];
                if acc == 0 {
                    break;
                }
                start = cut;
            }
        }
        *slot = acc;
    }
    out
}

type TableCache = OnceLock<RwLock<HashMap<(Character, usize, u64), Arc<Vec<i64>>>>>;

fn table(c: Character, len: usize, key: u64) -> Arc<Vec<i64>> {
    static CACHE: TableCache = OnceLock::new();
    let lock = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().unwrap().get(&(c, len, key)) {
        return t.clone();
    }
    let t = Arc::new(table_for(c, len, &signs_of_key(len, key)));
    lock.write().unwrap().entry((c, len, key)).or_insert(t).clone()
}

/// Sums `ψ` over many words. Words are grouped by their adjacent comparison
/// signs, on which every character depends.
pub struct PsiAccumulator<S: Coeff> {
    character: Character,
    degree: usize,
    counts: FxHashMap<(usize, u64), S>,
}

impl<S: Coeff> PsiAccumulator<S> {
    pub fn new(character: Character, degree: usize) -> Self {
        PsiAccumulator { character, degree, counts: FxHashMap::default() }
    }

    /// Adds `c·ψ(w)`; words longer than the degree bound vanish.
    pub fn add(&mut self, w: &[u8], c: S) {
        if w.len() > self.degree {
            return;
        }
        let e = self.counts.entry(sign_key(w)).or_insert_with(S::zero);
        *e = e.clone() + c;
    }

    /// Per-degree coefficient vectors indexed by descent mask.
    pub fn mask_totals(&self) -> Vec<Vec<S>> {
        let mut by_len: Vec<Vec<S>> = (0..=self.degree).map(|n| vec![S::zero(); 1usize << n.saturating_sub(1)]).collect();
        for (&(len, key), c) in &self.counts {
            if c.is_zero() {
                continue;
            }
            let t = table(self.character, len, key);
            let slot = &mut by_len[len];
            for (m, &v) in t.iter().enumerate() {
                if v != 0 {
                    slot[m] = slot[m].clone() + c.clone() * S::int(v);
                }
            }
        }
        by_len
    }

    pub fn finish(&self) -> QSym<S> {
        let mut out = QSym::zero(self.degree);
        for (n, v) in self.mask_totals().into_iter().enumerate() {
            for (m, c) in v.into_iter().enumerate() {
                out.add_term(Composition::from_descent_mask(n, m as u64), c);
            }
        }
        out
    }
}

/// `ψ(w)` truncated at `degree`.
pub fn psi_word<S: Coeff>(c: Character, w: &[u8], degree: usize) -> QSym<S> {
    let mut acc = PsiAccumulator::new(c, degree);
    acc.add(w, S::one());
    acc.finish()
}

/// `ψ` extended linearly, on `W` or `W_P`.
pub fn psi<S: Coeff, K: Ord + Clone + HasLetters>(c: Character, x: &LinComb<K, S>, degree: usize) -> QSym<S> {
    let mut acc = PsiAccumulator::new(c, degree);
    for (k, v) in x.iter() {
        acc.add(k.letters(), v.clone());
    }
    acc.finish()
}

/// `ψ` of the sum of the given words.
pub fn psi_members<S: Coeff>(c: Character, members: &[Word], degree: usize) -> QSym<S> {
    let mut acc = PsiAccumulator::new(c, degree);
    for w in members {
        acc.add(w.letters(), S::one());
    }
    acc.finish()
}

/// `ψ(κ_E)` for the class `E` with index `id`, truncated at `degree`. The
/// instance must enumerate every member of length at most `degree`, which is
/// certified by headroom stability.
pub fn psi_class<S: Coeff>(inst: &RelationInstance, id: u32, c: Character, degree: usize) -> Result<QSym<S>> {
    if degree > inst.max_len() {
        return Err(Error::DegreeOverflow { degree, bound: inst.max_len() });
    }
    inst.require_stable()?;
    Ok(psi_members(c, &inst.class(id).members, degree))
}

/// `ψ` of the class containing `w`.
pub fn psi_class_of<S: Coeff>(inst: &RelationInstance, w: &Word, c: Character, degree: usize) -> Result<QSym<S>> {
    let id = inst.class_id(w.letters()).ok_or_else(|| Error::OutsideUniverse(w.to_string()))?;
    psi_class(inst, id, c, degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{comp, w, words_up_to};
    use crate::qsym::fundamental_l;

    #[test]
    fn table_path_matches_definition() {
        for c in Character::all() {
            for word in words_up_to(3, 5) {
                let a: QSym<i64> = psi_word(c, word.letters(), 5);
                let b: QSym<i64> = psi_word_direct(c, word.letters(), 5);
                assert_eq!(a, b, "{c} {word}");
            }
        }
    }

    #[test]
    fn fundamental_image() {
        let f: QSym<i64> = psi_word(Character::LE, w("312").letters(), 3);
        assert_eq!(f, fundamental_l(&comp(&[1, 2]), 3).unwrap());
        let e: QSym<i64> = psi_word(Character::LE, &[], 3);
        assert_eq!(e, QSym::one(3));
        assert!(psi_word::<i64>(Character::LE, w("1234").letters(), 3).is_zero());
    }
}
