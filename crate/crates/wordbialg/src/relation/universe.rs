//! Finite word universes with dense shortlex indexing.

use rustc_hash::FxHashMap;

use crate::combinat::word::{letter_mask, Letters};
use crate::error::{Error, Result};

/// Which words are enumerated before closing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UniverseKind {
    /// All words over `[n]`.
    Alphabet(u8),
    /// Words whose letter set is exactly `[m]`.
    LetterSet(u8),
}

/// All words of a [`UniverseKind`] with length at most `max_len`, indexed in
/// shortlex order.
#[derive(Clone, Debug)]
pub struct Space {
    pub kind: UniverseKind,
    pub max_len: usize,
    /// `offsets[l]` is the index of the first word of length `l`.
    offsets: Vec<usize>,
    listed: Option<(Vec<Letters>, FxHashMap<Letters, u32>)>,
}

/// Number of surjections `[l] → [m]`.
fn surjections(l: usize, m: u8) -> u128 {
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for j in 0..=m as i128 {
        let term = binom * (m as i128 - j).pow(l as u32);
        total += if j % 2 == 0 { term } else { -term };
        binom = binom * (m as i128 - j) / (j + 1);
    }
    total.max(0) as u128
}

impl Space {
    /// Number of words the universe would hold.
    pub fn size_of(kind: UniverseKind, max_len: usize) -> u128 {
        match kind {
            UniverseKind::Alphabet(n) => (0..=max_len).map(|l| (n as u128).saturating_pow(l as u32)).sum(),
            UniverseKind::LetterSet(m) => (0..=max_len).map(|l| surjections(l, m)).sum(),
        }
    }

    pub fn new(kind: UniverseKind, max_len: usize, cap: u128) -> Result<Self> {
        let needed = Self::size_of(kind, max_len);
        if needed > cap || needed > u32::MAX as u128 {
            return Err(Error::UniverseCap { needed, cap });
        }
        match kind {
            UniverseKind::Alphabet(n) => {
                let mut offsets = vec![0usize];
                let mut p = 1usize;
                for _ in 0..=max_len {
                    let last = *offsets.last().unwrap();
                    offsets.push(last + p);
                    p *= n as usize;
                }
                Ok(Space { kind, max_len, offsets, listed: None })
            }
            UniverseKind::LetterSet(m) => {
                let full = if m == 0 { 0 } else { (1u64 << m) - 1 };
                let mut words = Vec::new();
                let mut offsets = vec![0usize];
                for l in 0..=max_len {
                    if m == 0 {
                        if l == 0 {
                            words.push(Letters::new());
                        }
                    } else {
                        let mut cur = vec![1u8; l];
                        loop {
                            if letter_mask(&cur) == full {
                                words.push(Letters::from_slice(&cur));
                            }
                            let mut i = l;
                            let mut done = true;
                            while i > 0 {
                                i -= 1;
                                if cur[i] < m {
                                    cur[i] += 1;
                                    cur[i + 1..].iter_mut().for_each(|c| *c = 1);
                                    done = false;
                                    break;
                                }
                            }
                            if done {
                                break;
                            }
                        }
                    }
                    offsets.push(words.len());
                }
                let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
                Ok(Space { kind, max_len, offsets, listed: Some((words, index)) })
            }
        }
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of words of length at most `l`.
    pub fn count_up_to(&self, l: usize) -> usize {
        self.offsets[(l + 1).min(self.offsets.len() - 1)]
    }

    pub fn index(&self, w: &[u8]) -> Option<u32> {
        if w.len() > self.max_len {
            return None;
        }
        match (&self.kind, &self.listed) {
            (UniverseKind::Alphabet(n), _) => {
                let n = *n as usize;
                let mut x = 0usize;
                for &a in w {
                    if a == 0 || a as usize > n {
                        return None;
                    }
                    x = x * n + (a as usize - 1);
                }
                Some((self.offsets[w.len()] + x) as u32)
            }
            (_, Some((_, index))) => index.get(w).copied(),
            _ => None,
        }
    }

    pub fn word(&self, i: u32) -> Letters {
        let i = i as usize;
        match (&self.kind, &self.listed) {
            (UniverseKind::Alphabet(n), _) => {
                let l = self.offsets.partition_point(|&o| o <= i) - 1;
                let mut x = i - self.offsets[l];
                let n = *n as usize;
                let mut out = Letters::from_elem(0, l);
                for k in (0..l).rev() {
                    out[k] = (x % n) as u8 + 1;
                    x /= n;
                }
                out
            }
            (_, Some((words, _))) => words[i].clone(),
            _ => unreachable!(),
        }
    }

    pub fn length_of(&self, i: u32) -> usize {
        self.offsets.partition_point(|&o| o <= i as usize) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_indexing_is_shortlex() {
        let s = Space::new(UniverseKind::Alphabet(3), 4, 1 << 20).unwrap();
        assert_eq!(s.len(), 1 + 3 + 9 + 27 + 81);
        let mut prev: Option<Letters> = None;
        for i in 0..s.len() as u32 {
            let w = s.word(i);
            assert_eq!(s.index(&w), Some(i));
            assert_eq!(s.length_of(i), w.len());
            if let Some(p) = prev {
                assert!((p.len(), p.as_slice()) < (w.len(), w.as_slice()));
            }
            prev = Some(w);
        }
        assert_eq!(s.index(&[4]), None);
        assert_eq!(s.index(&[1, 1, 1, 1, 1]), None);
    }

    #[test]
    fn letter_set_universe() {
        let s = Space::new(UniverseKind::LetterSet(3), 5, 1 << 20).unwrap();
        assert_eq!(s.len() as u128, 6 + 36 + 150);
        assert_eq!(Space::size_of(UniverseKind::LetterSet(3), 5), 192);
        assert_eq!(s.index(&[1, 2]), None);
        let i = s.index(&[3, 1, 2]).unwrap();
        assert_eq!(s.word(i).as_slice(), &[3, 1, 2]);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(Space::new(UniverseKind::Alphabet(9), 9, 1000), Err(Error::UniverseCap { .. })));
    }
}
