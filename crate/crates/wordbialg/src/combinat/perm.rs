//! Permutations in one-line notation and the Demazure product.

use std::fmt;

use super::composition::Partition;
use super::word::{Letters, Word};
use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &a in &one_line {
            let a = a as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Domain(format!("{one_line:?} is not a permutation")));
            }
            seen[a] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }

    /// Right descents, one-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `π∘s_i`: multiplies by `s_i` when that lengthens `π`, else returns `π`.
    pub fn demazure_step(&mut self, i: u8) {
        let i = i as usize;
        debug_assert!(i >= 1 && i < self.size());
        if self.0[i - 1] < self.0[i] {
            self.0.swap(i - 1, i);
        }
    }

    /// A reduced word, read left to right as `s_{a_1} s_{a_2} ⋯`.
    pub fn reduced_word(&self) -> Word {
        // Sort π to the identity by adjacent swaps of descents; the swaps in
        // reverse order build π from the identity.
        let mut p = self.0.clone();
        let mut swaps = Vec::new();
        loop {
            match (1..p.len()).find(|&i| p[i - 1] > p[i]) {
                Some(i) => {
                    p.swap(i - 1, i);
                    swaps.push(i as u8);
                }
                None => break,
            }
        }
        swaps.reverse();
        Word::from_letters(Letters::from_vec(swaps))
    }

    /// The Demazure product `u∘v`.
    pub fn demazure(&self, v: &Permutation) -> Result<Permutation> {
        if self.size() != v.size() {
            return Err(Error::AmbientMismatch(self.size(), v.size()));
        }
        let mut p = self.clone();
        for &a in v.reduced_word().letters() {
            p.demazure_step(a);
        }
        Ok(p)
    }

    /// Bruhat order `self ≤ other` via the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let n = self.size();
        debug_assert_eq!(n, other.size());
        for k in 1..=n as u8 {
            let (mut a, mut b) = (0, 0);
            for i in 0..n {
                a += (self.0[i] >= k) as usize;
                b += (other.0[i] >= k) as usize;
                if a > b {
                    return false;
                }
            }
        }
        true
    }

    /// `λ(π)` when `π` has at most one descent.
    pub fn grassmannian_shape(&self) -> Option<Partition> {
        let d = self.descents();
        match d.len() {
            0 => Some(Partition::new(Vec::new())),
            1 => {
                let p = d[0];
                Some(Partition::new((0..p).map(|i| self.0[i] as usize - (i + 1)).collect()))
            }
            _ => None,
        }
    }

    /// The Grassmannian permutation with descent at `ℓ(λ)` and shape `λ`.
    pub fn grassmannian(lambda: &Partition) -> Permutation {
        let p = lambda.len();
        let n = p + lambda.parts().first().copied().unwrap_or(0);
        let head: Vec<u8> = (0..p).map(|i| (lambda.parts()[p - 1 - i] + i + 1) as u8).collect();
        let mut tail: Vec<u8> = (1..=n as u8).filter(|a| !head.contains(a)).collect();
        let mut one_line = head;
        one_line.append(&mut tail);
        Permutation(one_line)
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all_of(n: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for a in 1..=n {
                if !used[a] {
                    used[a] = true;
                    cur.push(a as u8);
                    rec(cur, used, n, out);
                    cur.pop();
                    used[a] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
        out
    }

    pub fn as_word(&self) -> Word {
        Word::from_slice(&self.0)
    }
}

/// `s_{w_1}∘s_{w_2}∘⋯` in `S_{n+1}`.
pub fn eval_hecke_word(w: &Word, n: usize) -> Result<Permutation> {
    if w.max_letter() as usize > n {
        return Err(Error::Domain(format!("{w} has a letter above {n}")));
    }
    let mut p = Permutation::identity(n + 1);
    for &a in w.letters() {
        p.demazure_step(a);
    }
    Ok(p)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_word())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
