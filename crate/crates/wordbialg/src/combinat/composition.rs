//! Compositions and partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::KeyDisplay;

/// An integer composition `α = (α_1, …, α_l)` with positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    /// Builds a composition from parts known to be positive.
    pub fn from_parts(parts: &[usize]) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts.to_vec())
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `I(α) = {α_1, α_1+α_2, …, α_1+⋯+α_{l-1}}`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`descent_set`](Self::descent_set) for compositions of `n`.
    pub fn from_descent_set(n: usize, set: &[usize]) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &i in set {
            debug_assert!(prev < i && i < n);
            parts.push(i - prev);
            prev = i;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// `I(α)` as a bit mask with bit `i - 1` for each `i ∈ I(α)`.
    pub fn descent_mask(&self) -> u64 {
        self.descent_set().iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    pub fn from_descent_mask(n: usize, mask: u64) -> Self {
        let set: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        Self::from_descent_set(n, &set)
    }

    /// `α^r`.
    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `α^c`, with `I(α^c) = [n-1] ∖ I(α)`.
    pub fn complement(&self) -> Self {
        let n = self.total();
        if n == 0 {
            return self.clone();
        }
        let full = if n == 1 { 0 } else { (1u64 << (n - 1)) - 1 };
        Self::from_descent_mask(n, full & !self.descent_mask())
    }

    /// `α^t = (α^r)^c`.
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    /// `Λ(α)`, with `I(Λ(α)) = {i ∈ I(α) : i ≥ 2, i - 1 ∉ I(α)}`.
    pub fn peak_lambda(&self) -> Self {
        let set = self.descent_set();
        let kept: Vec<usize> = set.iter().copied().filter(|&i| i >= 2 && !set.contains(&(i - 1))).collect();
        Self::from_descent_set(self.total(), &kept)
    }

    /// True when `α_i ≥ 2` for all `i < l`.
    pub fn is_peak(&self) -> bool {
        self.0.iter().take(self.len().saturating_sub(1)).all(|&p| p >= 2)
    }

    /// `α^♭ = (α_l + 1, α_{l-1}, …, α_2, α_1 - 1)`; one-part compositions are fixed.
    pub fn flat(&self) -> Result<Self> {
        let l = self.len();
        if l <= 1 {
            return Ok(self.clone());
        }
        if self.0[0] < 2 {
            return Err(Error::NotPeakComposition(self.to_string()));
        }
        let mut parts: Vec<usize> = self.0.iter().rev().copied().collect();
        parts[0] += 1;
        parts[l - 1] -= 1;
        Ok(Composition(parts))
    }

    /// `sort(α)`.
    pub fn sort(&self) -> Partition {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    /// Concatenation `αβ`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut p = self.0.clone();
        p.extend_from_slice(&other.0);
        Composition(p)
    }

    /// All compositions of `n`, ordered by descent mask.
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        (0..1u64 << (n - 1)).map(|m| Self::from_descent_mask(n, m)).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl KeyDisplay for Composition {
    fn key_string(&self) -> String {
        self.to_string()
    }
}

/// Shorthand for composition literals; panics on zero parts.
pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("composition literal")
}

/// An integer partition `λ_1 ≥ λ_2 ≥ ⋯ > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, sorting and dropping zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|p| p[0] > p[1])
    }

    /// Conjugate partition `λ^T`.
    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `λ ⊵ μ` in dominance order, for partitions of the same size.
    pub fn dominates(&self, mu: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(mu.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += mu.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Partitions of `n` in lexicographically decreasing order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Strict partitions of `n` in lexicographically decreasing order.
    pub fn strict_of(n: usize) -> Vec<Partition> {
        Self::all_of(n).into_iter().filter(Partition::is_strict).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_composition())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl KeyDisplay for Partition {
    fn key_string(&self) -> String {
        self.to_string()
    }
}

/// Shorthand for partition literals.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_set_roundtrip() {
        assert_eq!(comp(&[2, 1]).descent_set(), vec![2]);
        for n in 0..7 {
            for a in Composition::all_of(n) {
                assert_eq!(Composition::from_descent_set(n, &a.descent_set()), a);
                assert_eq!(a.total(), n);
            }
        }
    }

    #[test]
    fn composition_maps() {
        let a = comp(&[1, 3, 2]);
        assert_eq!(a.reverse(), comp(&[2, 3, 1]));
        assert_eq!(a.complement().descent_set(), vec![2, 3, 5]);
        assert_eq!(a.transpose(), a.reverse().complement());
        assert_eq!(a.transpose(), a.complement().reverse());
        // I = {1,3}: 1 is dropped, 3 is kept.
        assert_eq!(comp(&[1, 2, 1]).peak_lambda().descent_set(), vec![3]);
        assert_eq!(comp(&[2, 3, 1]).flat().unwrap(), comp(&[2, 3, 1]));
        assert_eq!(comp(&[3, 2]).flat().unwrap(), comp(&[3, 2]));
        assert_eq!(comp(&[2, 2, 4]).flat().unwrap(), comp(&[5, 2, 1]));
        assert_eq!(comp(&[4]).flat().unwrap(), comp(&[4]));
        assert!(comp(&[1, 2]).flat().is_err());
    }

    #[test]
    fn involutions() {
        for n in 0..8 {
            for a in Composition::all_of(n) {
                assert_eq!(a.complement().complement(), a);
                assert_eq!(a.reverse().reverse(), a);
                assert_eq!(a.transpose().transpose(), a);
            }
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::all_of(4)[0], part(&[4]));
        assert_eq!(Partition::strict_of(6), vec![part(&[6]), part(&[5, 1]), part(&[4, 2]), part(&[3, 2, 1])]);
        assert_eq!(part(&[3, 1]).transpose(), part(&[2, 1, 1]));
        assert!(part(&[3, 1]).dominates(&part(&[2, 2])));
        assert!(!part(&[2, 2]).dominates(&part(&[3, 1])));
    }
}
