//! Weak equivalences and the doubling map `w ↦ w^r w`.
//!
//! The weak relation `≈` of `∼` is the equivalence generated by `∼` and by
//! swapping the first two letters. For Hecke equivalence, `v ≈ w` holds iff
//! `v^r v ∼ w^r w`; for K-Knuth equivalence the same statement is open.

use serde::Serialize;

use super::checks::show;
use super::closure::RelationInstance;
use crate::combinat::{words_up_to, Word};
use crate::error::{Error, Result};

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b) as usize] = a.min(b);
        }
    }
}

/// Pairs `(v, w)` counted on one side of the doubling comparison.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PairFailures {
    pub count: u64,
    /// The first failing pair in word order.
    pub witness: Option<(String, String)>,
}

/// Outcome of comparing `≈` with doubled `∼` on all words of bounded length.
#[derive(Clone, Debug, Serialize)]
pub struct DoublingReport {
    pub relation: String,
    pub alphabet: u8,
    pub word_len: usize,
    pub max_len: usize,
    pub headroom: usize,
    pub words: usize,
    pub weak_classes: usize,
    pub doubled_classes: usize,
    /// `v ≈ w` but `v^r v ≁ w^r w`.
    pub weak_not_doubled: PairFailures,
    /// `v^r v ∼ w^r w` but `v ≉ w`.
    pub doubled_not_weak: PairFailures,
}

impl DoublingReport {
    pub fn agrees(&self) -> bool {
        self.weak_not_doubled.count == 0 && self.doubled_not_weak.count == 0
    }
}

/// Weak class labels of the words `ws`: classes of `inst` joined whenever a
/// word in the universe and its first-two-letter swap lie in them.
fn weak_labels(inst: &RelationInstance, ws: &[Word]) -> Result<Vec<u32>> {
    let mut uf = UnionFind::new(inst.num_classes());
    for (id, cl) in inst.classes().iter().enumerate() {
        for m in &cl.members {
            let l = m.letters();
            if l.len() >= 2 && l[0] != l[1] {
                let mut s = l.to_vec();
                s.swap(0, 1);
                if let Some(other) = inst.class_id(&s) {
                    uf.union(id as u32, other);
                }
            }
        }
    }
    ws.iter()
        .map(|w| inst.class_id(w.letters()).map(|c| uf.find(c)).ok_or_else(|| Error::OutsideUniverse(w.to_string())))
        .collect()
}

/// Pairs with equal `a`-label but distinct `b`-label.
fn split_pairs(ws: &[Word], a: &[u32], b: &[u32]) -> PairFailures {
    let mut out = PairFailures::default();
    for i in 0..ws.len() {
        for j in i + 1..ws.len() {
            if a[i] == a[j] && b[i] != b[j] {
                out.count += 1;
                if out.witness.is_none() {
                    out.witness = Some((show(&ws[i]), show(&ws[j])));
                }
            }
        }
    }
    out
}

fn distinct(labels: &[u32]) -> usize {
    let mut v = labels.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Compares `v ≈ w` with `v^r v ∼ w^r w` for all words of length at most
/// `word_len` over the instance alphabet. The instance must contain the
/// doubled words, so `2·word_len ≤ max_len`.
pub fn doubling_check(inst: &RelationInstance, word_len: usize) -> Result<DoublingReport> {
    if 2 * word_len > inst.max_len() {
        return Err(Error::DegreeOverflow { degree: 2 * word_len, bound: inst.max_len() });
    }
    let n = inst.bounds.alphabet_size();
    let ws = words_up_to(n, word_len);
    let weak = weak_labels(inst, &ws)?;
    let doubled: Vec<u32> = ws
        .iter()
        .map(|w| {
            let d = w.reversed().concat(w);
            inst.class_id(d.letters()).ok_or_else(|| Error::OutsideUniverse(d.to_string()))
        })
        .collect::<Result<_>>()?;
    Ok(DoublingReport {
        relation: inst.presentation.name.clone(),
        alphabet: n,
        word_len,
        max_len: inst.max_len(),
        headroom: inst.bounds.headroom,
        words: ws.len(),
        weak_classes: distinct(&weak),
        doubled_classes: distinct(&doubled),
        weak_not_doubled: split_pairs(&ws, &weak, &doubled),
        doubled_not_weak: split_pairs(&ws, &doubled, &weak),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::{close, Builtin, ClosureBounds, RelationPresentation};

    #[test]
    fn weak_hecke_small() {
        let inst = close(&RelationPresentation::builtin(Builtin::Hecke), ClosureBounds::alphabet(2, 6, 1)).unwrap();
        let r = doubling_check(&inst, 3).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert!(r.weak_classes < r.words);
    }

    #[test]
    fn doubling_needs_room() {
        let inst = close(&RelationPresentation::builtin(Builtin::Hecke), ClosureBounds::alphabet(2, 5, 1)).unwrap();
        assert!(doubling_check(&inst, 3).is_err());
    }
}
