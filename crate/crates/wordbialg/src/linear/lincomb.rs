//! Finitely supported formal linear combinations.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::Coeff;

/// A formal sum `Σ c_k k` over an ordered basis with no stored zeros.
#[derive(Clone, PartialEq)]
pub struct LinComb<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord, S> Default for LinComb<K, S> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Coeff> LinComb<K, S> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `k` with coefficient one.
    pub fn basis(k: K) -> Self {
        Self::term(k, S::one())
    }

    pub fn term(k: K, c: S) -> Self {
        let mut x = Self::zero();
        x.add_term(k, c);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> S {
        self.terms.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn get(&self, k: &K) -> Option<&S> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, S> {
        self.terms.keys()
    }

    pub fn into_map(self) -> BTreeMap<K, S> {
        self.terms
    }

    /// Adds `c·k` in place, dropping the key if the result vanishes.
    pub fn add_term(&mut self, k: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, c: &S, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), c.clone() * v.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_assign(other);
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_scaled(&-S::one(), other);
        x
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut x = Self::zero();
        x.add_scaled(c, self);
        x
    }

    /// `Σ_{a,b} c_a d_b (a, b)`.
    pub fn tensor<K2: Ord + Clone>(&self, other: &LinComb<K2, S>) -> LinComb<(K, K2), S> {
        let mut out = LinComb::zero();
        for (a, c) in self.iter() {
            for (b, d) in other.iter() {
                out.add_term((a.clone(), b.clone()), c.clone() * d.clone());
            }
        }
        out
    }

    /// Linear extension of a basis map.
    pub fn apply_linear<K2, E, F>(&self, mut f: F) -> Result<LinComb<K2, S>, E>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Result<LinComb<K2, S>, E>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }

    /// Infallible form of [`apply_linear`](Self::apply_linear).
    pub fn map_linear<K2, F>(&self, mut f: F) -> LinComb<K2, S>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2, S>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels keys; colliding keys have their coefficients summed.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> LinComb<K2, S> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Keeps the terms whose key satisfies `keep`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> S {
        self.terms.values().fold(S::zero(), |a, c| a + c.clone())
    }
}

impl<K: Ord + Clone, S: Coeff> FromIterator<(K, S)> for LinComb<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut x = Self::zero();
        for (k, c) in iter {
            x.add_term(k, c);
        }
        x
    }
}

impl<'a, K: Ord, S> IntoIterator for &'a LinComb<K, S> {
    type Item = (&'a K, &'a S);
    type IntoIter = btree_map::Iter<'a, K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Debug, S: fmt::Display> fmt::Debug for LinComb<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{:?}", c, k)?;
        }
        Ok(())
    }
}

/// Keys that serialize through their display form.
pub trait KeyDisplay {
    fn key_string(&self) -> String;
}

impl<K: KeyDisplay> KeyDisplay for (K, K) {
    fn key_string(&self) -> String {
        format!("{} ⊗ {}", self.0.key_string(), self.1.key_string())
    }
}

impl<K: Ord + KeyDisplay, S: fmt::Display> Serialize for LinComb<K, S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        #[derive(Serialize)]
        struct Term {
            key: String,
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&Term { key: k.key_string(), coeff: c.to_string() })?;
        }
        seq.end()
    }
}
