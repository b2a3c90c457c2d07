//! Bounded equivalence classes by union-find closure.

use std::sync::OnceLock;

use serde::Serialize;

use super::presentation::RelationPresentation;
use super::rewrite::Rewriter;
use super::universe::{Space, UniverseKind};
use crate::combinat::Word;
use crate::error::{Error, Result};

/// Default universe cap, in words.
pub const DEFAULT_CAP: u128 = 20_000_000;

/// Default headroom.
pub const DEFAULT_HEADROOM: usize = 2;

/// Bounds of a closure run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClosureBounds {
    pub universe: UniverseKind,
    pub max_len: usize,
    pub headroom: usize,
    #[serde(skip)]
    pub cap: u128,
}

impl ClosureBounds {
    pub fn alphabet(n: u8, max_len: usize, headroom: usize) -> Self {
        ClosureBounds { universe: UniverseKind::Alphabet(n), max_len, headroom, cap: DEFAULT_CAP }
    }

    pub fn letter_set(m: u8, max_len: usize, headroom: usize) -> Self {
        ClosureBounds { universe: UniverseKind::LetterSet(m), max_len, headroom, cap: DEFAULT_CAP }
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    /// Largest letter in the universe.
    pub fn alphabet_size(&self) -> u8 {
        match self.universe {
            UniverseKind::Alphabet(n) | UniverseKind::LetterSet(n) => n,
        }
    }
}

/// One equivalence class, truncated to words of length at most `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Class {
    /// The shortlex-least member.
    pub rep: Word,
    /// All members of length at most `L`, in shortlex order.
    pub members: Vec<Word>,
}

impl Class {
    /// Members of minimal length.
    pub fn reduced_members(&self) -> Vec<Word> {
        let l = self.rep.len();
        self.members.iter().filter(|w| w.len() == l).cloned().collect()
    }

    pub fn is_single_length(&self) -> bool {
        self.members.iter().all(|w| w.len() == self.rep.len())
    }
}

/// A relation closed over a bounded universe.
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub presentation: RelationPresentation,
    pub bounds: ClosureBounds,
    space: Space,
    /// Class index of each universe word of length at most `L`.
    class_ids: Vec<u32>,
    classes: Vec<Class>,
    /// Classes living entirely in the headroom.
    escaped: usize,
    stable: OnceLock<bool>,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Union keeping the smaller index as root, so roots are shortlex-least.
fn union(parent: &mut [u32], a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra < rb {
        parent[rb as usize] = ra;
    } else if rb < ra {
        parent[ra as usize] = rb;
    }
}

/// Closes a presentation over the bounded universe.
pub fn close(p: &RelationPresentation, bounds: ClosureBounds) -> Result<RelationInstance> {
    let total = bounds.max_len + bounds.headroom;
    let space = Space::new(bounds.universe, total, bounds.cap)?;
    let rw = Rewriter::new(p, bounds.alphabet_size())?;
    let size = space.len();
    let mut parent: Vec<u32> = (0..size as u32).collect();
    for i in 0..size as u32 {
        let w = space.word(i);
        rw.neighbors(&w, total, &mut |x| {
            let j = space.index(x).expect("rewrites preserve the universe");
            union(&mut parent, i, j);
        });
    }
    let slice = space.count_up_to(bounds.max_len);
    let mut class_of_root: Vec<u32> = vec![u32::MAX; size];
    let mut class_ids = Vec::with_capacity(slice);
    let mut classes: Vec<Class> = Vec::new();
    for i in 0..slice as u32 {
        let r = find(&mut parent, i) as usize;
        if class_of_root[r] == u32::MAX {
            class_of_root[r] = classes.len() as u32;
            classes.push(Class { rep: Word::from_letters(space.word(i)), members: Vec::new() });
        }
        let c = class_of_root[r];
        classes[c as usize].members.push(Word::from_letters(space.word(i)));
        class_ids.push(c);
    }
    let escaped = (slice as u32..size as u32).filter(|&i| find(&mut parent, i) == i).count();
    Ok(RelationInstance { presentation: p.clone(), bounds, space, class_ids, classes, escaped, stable: OnceLock::new() })
}

/// Bounded finite-type certificate: class counts meeting lengths `≤ L` and `≤ L+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteTypeCertificate {
    pub alphabet: u8,
    pub max_len: usize,
    pub classes_at_l: usize,
    pub classes_at_l_plus_1: usize,
    pub stable: bool,
}

impl RelationInstance {
    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn escaped(&self) -> usize {
        self.escaped
    }

    pub fn max_len(&self) -> usize {
        self.bounds.max_len
    }

    pub fn universe(&self) -> UniverseKind {
        self.bounds.universe
    }

    /// Class index of a word, if it is in the length-`≤ L` slice.
    pub fn class_id(&self, w: &[u8]) -> Option<u32> {
        if w.len() > self.bounds.max_len {
            return None;
        }
        self.space.index(w).map(|i| self.class_ids[i as usize])
    }

    pub fn class(&self, id: u32) -> &Class {
        &self.classes[id as usize]
    }

    /// The class of `w`, truncated to length `≤ L`.
    pub fn class_of(&self, w: &Word) -> Result<&Class> {
        self.class_id(w.letters())
            .map(|c| &self.classes[c as usize])
            .ok_or_else(|| Error::OutsideUniverse(w.to_string()))
    }

    pub fn equivalent(&self, v: &Word, w: &Word) -> Result<bool> {
        Ok(self.class_of(v)?.rep == self.class_of(w)?.rep)
    }

    /// Classes of packed words whose representative has length `len`.
    pub fn packed_classes(&self, len: usize) -> Vec<&Class> {
        self.classes.iter().filter(|c| c.rep.len() == len && c.rep.is_packed()).collect()
    }

    /// Number of classes meeting the words of length `≤ l`.
    pub fn classes_up_to(&self, l: usize) -> usize {
        let slice = self.space.count_up_to(l.min(self.bounds.max_len));
        self.class_ids[..slice].iter().map(|&c| c + 1).max().unwrap_or(0) as usize
    }

    /// True when every class has members of a single length.
    pub fn is_homogeneous(&self) -> bool {
        self.classes.iter().all(Class::is_single_length)
    }

    /// Recomputes with one more unit of headroom and compares the length-`≤ L` partitions.
    pub fn headroom_stability(&self) -> Result<bool> {
        if let Some(&s) = self.stable.get() {
            return Ok(s);
        }
        // length-preserving rewrites never leave the slice
        let s = if self.presentation.is_homogeneous() {
            true
        } else {
            let more = ClosureBounds { headroom: self.bounds.headroom + 1, ..self.bounds };
            close(&self.presentation, more)?.class_ids == self.class_ids
        };
        Ok(*self.stable.get_or_init(|| s))
    }

    /// Errors with [`Error::UnstableTruncation`] unless headroom-stable.
    pub fn require_stable(&self) -> Result<()> {
        if self.headroom_stability()? {
            Ok(())
        } else {
            Err(Error::UnstableTruncation)
        }
    }

    /// Compares class counts at `L` and `L+1`.
    pub fn finite_type_certificate(&self) -> Result<FiniteTypeCertificate> {
        let next = ClosureBounds { max_len: self.bounds.max_len + 1, ..self.bounds };
        let other = close(&self.presentation, next)?;
        let at_l = other.classes_up_to(self.bounds.max_len);
        let at_l1 = other.num_classes();
        Ok(FiniteTypeCertificate {
            alphabet: self.bounds.alphabet_size(),
            max_len: self.bounds.max_len,
            classes_at_l: at_l,
            classes_at_l_plus_1: at_l1,
            stable: at_l == at_l1,
        })
    }
}

/// Transitive closure of one-step rewrites by breadth-first search from `w`,
/// limited to length `max_len`. Independent of the union-find path.
pub fn bfs_class(p: &RelationPresentation, n: u8, w: &Word, max_len: usize) -> Result<Vec<Word>> {
    let rw = Rewriter::new(p, n)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for y in rw.neighbor_words(&x, max_len) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::w;
    use crate::relation::presentation::Builtin;

    fn inst(b: Builtin, n: u8, l: usize, h: usize) -> RelationInstance {
        close(&RelationPresentation::builtin(b), ClosureBounds::alphabet(n, l, h)).unwrap()
    }

    #[test]
    fn knuth_small() {
        let k = inst(Builtin::Knuth, 3, 3, 0);
        assert!(k.equivalent(&w("132"), &w("312")).unwrap());
        assert!(!k.equivalent(&w("123"), &w("321")).unwrap());
    }

    #[test]
    fn k_equivalence_chain() {
        let k = inst(Builtin::KEquivalence, 1, 4, 2);
        assert_eq!(k.class_of(&w("1")).unwrap().members, vec![w("1"), w("11"), w("111"), w("1111")]);
        assert_eq!(k.class_of(&w("11")).unwrap().reduced_members(), vec![w("1")]);
        let k3 = inst(Builtin::KEquivalence, 3, 4, 2);
        assert_eq!(k3.class_of(&w("1122")).unwrap().reduced_members(), vec![w("12")]);
        assert!(k3.headroom_stability().unwrap());
    }

    #[test]
    fn commutation_class() {
        let c = inst(Builtin::Commutation, 2, 2, 0);
        assert_eq!(c.class_of(&w("12")).unwrap().members, vec![w("12"), w("21")]);
        assert!(matches!(c.class_of(&w("13")), Err(Error::OutsideUniverse(_))));
        assert!(matches!(c.class_of(&w("121")), Err(Error::OutsideUniverse(_))));
    }

    #[test]
    fn hecke_counts_symmetric_group() {
        for (n, fact) in [(1u8, 2usize), (2, 6), (3, 24)] {
            let h = inst(Builtin::Hecke, n, 7, 2);
            assert_eq!(h.num_classes(), fact);
        }
    }

    #[test]
    fn unstable_truncation_detected() {
        let p = RelationPresentation::explicit("s", vec![(w("12"), w("112")), (w("21"), w("112"))], false).unwrap();
        let i = close(&p, ClosureBounds::alphabet(2, 2, 0)).unwrap();
        assert!(!i.headroom_stability().unwrap());
        let j = close(&p, ClosureBounds::alphabet(2, 2, 1)).unwrap();
        assert!(j.equivalent(&w("12"), &w("21")).unwrap());
    }

    #[test]
    fn k_knuth_class_matches_bfs() {
        let k = inst(Builtin::KKnuth, 2, 5, 2);
        let cls = k.class_of(&w("12")).unwrap();
        let bfs = bfs_class(&RelationPresentation::builtin(Builtin::KKnuth), 2, &w("12"), 7).unwrap();
        let bfs: Vec<Word> = bfs.into_iter().filter(|x| x.len() <= 5).collect();
        let mut mem = cls.members.clone();
        mem.sort();
        assert_eq!(mem, bfs);
        assert!(cls.members.contains(&w("1122")));
        assert!(!cls.members.contains(&w("21")));
    }

    #[test]
    fn finite_type_certificates() {
        let h = inst(Builtin::Hecke, 3, 6, 2);
        assert!(h.finite_type_certificate().unwrap().stable);
        let c = inst(Builtin::Commutation, 2, 3, 0);
        assert!(!c.finite_type_certificate().unwrap().stable);
    }

    #[test]
    fn letter_set_universe_packed() {
        let p = RelationPresentation::builtin(Builtin::KKnuth);
        let i = close(&p, ClosureBounds::letter_set(2, 4, 2)).unwrap();
        assert!(i.classes().iter().all(|c| c.rep.is_packed()));
        assert_eq!(i.packed_classes(2).len(), 2);
    }
}
