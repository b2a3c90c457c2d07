//! Packed classes of homogeneous relations, one content at a time.
//!
//! A homogeneous relation that preserves letter multiplicities never leaves
//! the set of rearrangements of a word, so the classes of packed words of a
//! given length split into independent blocks, one per content. Relations
//! that only preserve letter sets split by letter set instead.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::presentation::RelationPresentation;
use super::rewrite::Rewriter;
use crate::combinat::word::letter_mask;
use crate::combinat::{Composition, Word};
use crate::error::{Error, Result};

/// Largest length the 4-bit packed encoding supports.
pub const MAX_PACKED_LEN: usize = 16;

fn encode(w: &[u8]) -> u64 {
    w.iter().fold(0u64, |k, &a| (k << 4) | a as u64)
}

/// Distinct rearrangements of a sorted multiset, in lexicographic order.
fn rearrangements(sorted: &[u8]) -> Vec<Vec<u8>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// All words of length `len` over `[m]` using every letter, lexicographically.
fn surjective_words(m: u8, len: usize) -> Vec<Vec<u8>> {
    let full = (1u64 << m) - 1;
    let mut out = Vec::new();
    let mut cur = vec![1u8; len];
    loop {
        if letter_mask(&cur) == full {
            out.push(cur.clone());
        }
        let Some(i) = (0..len).rev().find(|&i| cur[i] < m) else { return out };
        cur[i] += 1;
        cur[i + 1..].iter_mut().for_each(|c| *c = 1);
    }
}

fn block_classes(words: &[Vec<u8>], rw: &Rewriter, len: usize) -> Vec<Vec<u32>> {
    let index: FxHashMap<u64, u32> = words.iter().enumerate().map(|(i, w)| (encode(w), i as u32)).collect();
    let mut parent: Vec<u32> = (0..words.len() as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for (i, w) in words.iter().enumerate() {
        rw.neighbors(w, len, &mut |x| {
            let j = index[&encode(x)];
            let (a, b) = (find(&mut parent, i as u32), find(&mut parent, j));
            if a < b {
                parent[b as usize] = a;
            } else if b < a {
                parent[a as usize] = b;
            }
        });
    }
    let mut slot: Vec<u32> = vec![u32::MAX; words.len()];
    let mut out: Vec<Vec<u32>> = Vec::new();
    for i in 0..words.len() as u32 {
        let r = find(&mut parent, i) as usize;
        if slot[r] == u32::MAX {
            slot[r] = out.len() as u32;
            out.push(Vec::new());
        }
        out[slot[r] as usize].push(i);
    }
    out
}

/// Runs `f` on every class of packed words of length `len`, given as its
/// lexicographically sorted members; returns the results sorted by
/// representative. Blocks are processed in parallel.
pub fn packed_slice_map<T, F>(p: &RelationPresentation, len: usize, f: F) -> Result<Vec<(Word, T)>>
where
    T: Send,
    F: Fn(&[Word]) -> T + Sync,
{
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous(p.name.clone()));
    }
    if len > MAX_PACKED_LEN {
        return Err(Error::Domain(format!("packed slice length {len} exceeds {MAX_PACKED_LEN}")));
    }
    if len == 0 {
        let e = vec![Word::empty()];
        return Ok(vec![(Word::empty(), f(&e))]);
    }
    let rw = Rewriter::new(p, len as u8)?;
    let blocks: Vec<Vec<u8>> = if p.preserves_content() {
        // one block per content, i.e. per composition of `len`
        Composition::all_of(len)
            .into_iter()
            .map(|c| c.parts().iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i as u8 + 1).take(k)).collect())
            .collect()
    } else {
        (1..=len as u8).map(|m| vec![m]).collect()
    };
    let by_content = p.preserves_content();
    let mut parts: Vec<Vec<(Word, T)>> = blocks
        .par_iter()
        .map(|b| {
            let words = if by_content { rearrangements(b) } else { surjective_words(b[0], len) };
            block_classes(&words, &rw, len)
                .into_iter()
                .map(|cls| {
                    let members: Vec<Word> = cls.iter().map(|&i| Word::from_slice(&words[i as usize])).collect();
                    let t = f(&members);
                    (members[0].clone(), t)
                })
                .collect()
        })
        .collect();
    let mut out: Vec<(Word, T)> = parts.drain(..).flatten().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Number of classes of packed words of length `len`.
pub fn count_packed_classes(p: &RelationPresentation, len: usize) -> Result<usize> {
    Ok(packed_slice_map(p, len, |_| ())?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::presentation::Builtin;

    #[test]
    fn rearrangement_counts() {
        assert_eq!(rearrangements(&[1, 1, 2, 3]).len(), 12);
        assert_eq!(rearrangements(&[]).len(), 1);
        assert_eq!(surjective_words(2, 3).len(), 6);
    }

    #[test]
    fn exotic_small_counts() {
        let p = RelationPresentation::builtin(Builtin::ExoticKnuth);
        let d: Vec<usize> = (0..=6).map(|n| count_packed_classes(&p, n).unwrap()).collect();
        assert_eq!(d, vec![1, 1, 3, 9, 31, 110, 412]);
    }

    #[test]
    fn commutation_packed_classes_are_contents() {
        let p = RelationPresentation::builtin(Builtin::Commutation);
        assert_eq!(count_packed_classes(&p, 4).unwrap(), 8);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let p = RelationPresentation::builtin(Builtin::KKnuth);
        assert!(matches!(count_packed_classes(&p, 3), Err(Error::Inhomogeneous(_))));
    }
}
