//! Degree-truncated quasi-symmetric functions stored in the monomial basis.

use std::collections::HashMap;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::linear::{Coeff, LinComb};

/// `Σ c_α M_α` with every `|α| ≤ degree`.
#[derive(Clone, PartialEq)]
pub struct QSym<S: Coeff> {
    degree: usize,
    terms: LinComb<Composition, S>,
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Quasi-shuffle (overlapping shuffle) of two compositions, with multiplicities.
pub fn quasi_shuffle(a: &[usize], b: &[usize]) -> Vec<(Composition, i64)> {
    fn rec(a: &[usize], b: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), Vec<(Vec<usize>, i64)>>) -> Vec<(Vec<usize>, i64)> {
        if a.is_empty() {
            return vec![(b.to_vec(), 1)];
        }
        if b.is_empty() {
            return vec![(a.to_vec(), 1)];
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut acc: HashMap<Vec<usize>, i64> = HashMap::new();
        let mut push = |head: usize, tail: Vec<(Vec<usize>, i64)>| {
            for (t, c) in tail {
                let mut v = Vec::with_capacity(t.len() + 1);
                v.push(head);
                v.extend(t);
                *acc.entry(v).or_insert(0) += c;
            }
        };
        push(a[0], rec(&a[1..], b, memo));
        push(b[0], rec(a, &b[1..], memo));
        push(a[0] + b[0], rec(&a[1..], &b[1..], memo));
        let mut out: Vec<(Vec<usize>, i64)> = acc.into_iter().collect();
        out.sort();
        memo.insert(key, out.clone());
        out
    }
    rec(a, b, &mut HashMap::new()).into_iter().map(|(v, c)| (Composition::from_parts(&v), c)).collect()
}

impl<S: Coeff> QSym<S> {
    pub fn zero(degree: usize) -> Self {
        QSym { degree, terms: LinComb::zero() }
    }

    pub fn one(degree: usize) -> Self {
        Self::from_terms(degree, [(Composition::empty(), S::one())])
    }

    /// `M_α`.
    pub fn monomial(alpha: &Composition, degree: usize) -> Result<Self> {
        if alpha.total() > degree {
            return Err(Error::DegreeOverflow { degree: alpha.total(), bound: degree });
        }
        Ok(Self::from_terms(degree, [(alpha.clone(), S::one())]))
    }

    /// Collects terms, dropping those above the truncation degree.
    pub fn from_terms<I: IntoIterator<Item = (Composition, S)>>(degree: usize, terms: I) -> Self {
        let mut x = Self::zero(degree);
        for (a, c) in terms {
            x.add_term(a, c);
        }
        x
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &LinComb<Composition, S> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> S {
        self.terms.coeff(alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Adds `c M_α`; ignored when `|α|` exceeds the truncation degree.
    pub fn add_term(&mut self, alpha: Composition, c: S) {
        if alpha.total() <= self.degree {
            self.terms.add_term(alpha, c);
        }
    }

    fn common_degree(&self, other: &Self) -> usize {
        self.degree.min(other.degree)
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.common_degree(other);
        let mut x = self.truncate(d);
        for (a, c) in other.terms.iter() {
            x.add_term(a.clone(), c.clone());
        }
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QSym { degree: self.degree, terms: self.terms.neg() }
    }

    pub fn scale(&self, c: &S) -> Self {
        QSym { degree: self.degree, terms: self.terms.scale(c) }
    }

    /// Drops every term of degree above `d`.
    pub fn truncate(&self, d: usize) -> Self {
        let d = d.min(self.degree);
        QSym { degree: d, terms: self.terms.filter(|a| a.total() <= d) }
    }

    /// The degree-`n` component, keeping the truncation degree.
    pub fn homogeneous(&self, n: usize) -> Self {
        QSym { degree: self.degree, terms: self.terms.filter(|a| a.total() == n) }
    }

    /// Smallest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Composition::total).min()
    }

    /// Truncated product through the quasi-shuffle of monomial indices.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.common_degree(other);
        let mut out = Self::zero(d);
        for (a, c) in self.terms.iter() {
            for (b, e) in other.terms.iter() {
                if a.total() + b.total() > d {
                    continue;
                }
                let ce = c.clone() * e.clone();
                for (g, k) in quasi_shuffle(a.parts(), b.parts()) {
                    out.add_term(g, ce.clone() * S::int(k));
                }
            }
        }
        out
    }

    /// `Δ(M_α) = Σ_{α = βγ} M_β ⊗ M_γ`.
    pub fn coproduct(&self) -> LinComb<(Composition, Composition), S> {
        let mut out = LinComb::zero();
        for (a, c) in self.terms.iter() {
            let p = a.parts();
            for i in 0..=p.len() {
                out.add_term((Composition::from_parts(&p[..i]), Composition::from_parts(&p[i..])), c.clone());
            }
        }
        out
    }

    /// Coefficients in the fundamental basis, by Möbius inversion over descent sets.
    pub fn to_fundamental(&self) -> LinComb<Composition, S> {
        let mut out = LinComb::zero();
        let mut by_degree: HashMap<usize, HashMap<u64, S>> = HashMap::new();
        for (a, c) in self.terms.iter() {
            by_degree.entry(a.total()).or_default().insert(a.descent_mask(), c.clone());
        }
        for (n, coeffs) in by_degree {
            if n == 0 {
                out.add_term(Composition::empty(), coeffs[&0].clone());
                continue;
            }
            for a in 0..1u64 << (n - 1) {
                let mut total = S::zero();
                // d_α = Σ_{I(β) ⊆ I(α)} (-1)^{|I(α) ∖ I(β)|} c_β
                let mut b = a;
                loop {
                    if let Some(c) = coeffs.get(&b) {
                        if (a & !b).count_ones() % 2 == 0 {
                            total = total + c.clone();
                        } else {
                            total = total - c.clone();
                        }
                    }
                    if b == 0 {
                        break;
                    }
                    b = (b - 1) & a;
                }
                out.add_term(Composition::from_descent_mask(n, a), total);
            }
        }
        out
    }

    /// `Σ c_α L_α` in the monomial basis.
    pub fn from_fundamental(coeffs: &LinComb<Composition, S>, degree: usize) -> Self {
        let mut out = Self::zero(degree);
        for (a, c) in coeffs.iter() {
            let n = a.total();
            if n > degree {
                continue;
            }
            if n == 0 {
                out.add_term(a.clone(), c.clone());
                continue;
            }
            let full = (1u64 << (n - 1)) - 1;
            let m = a.descent_mask();
            let free = full & !m;
            let mut extra = free;
            loop {
                out.add_term(Composition::from_descent_mask(n, m | extra), c.clone());
                if extra == 0 {
                    break;
                }
                extra = (extra - 1) & free;
            }
        }
        out
    }

    fn map_fundamental<F: Fn(&Composition) -> Composition>(&self, f: F) -> Self {
        Self::from_fundamental(&self.to_fundamental().map_keys(f), self.degree)
    }

    /// `ω`, the involution `L_α ↦ L_{α^t}`.
    pub fn omega_l(&self) -> Self {
        self.map_fundamental(Composition::transpose)
    }

    /// `L_α ↦ L_{α^r}`, which is `M_α ↦ M_{α^r}`.
    pub fn reverse_l(&self) -> Self {
        self.map_fundamental(Composition::reverse)
    }

    /// `L_α ↦ L_{α^c}`.
    pub fn complement_l(&self) -> Self {
        self.map_fundamental(Composition::complement)
    }

    /// `f(-x)`: multiplies the degree-`n` part by `(-1)^n`.
    pub fn negate_variables(&self) -> Self {
        QSym {
            degree: self.degree,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), if a.total() % 2 == 0 { c.clone() } else { -c.clone() })).collect(),
        }
    }

    /// `f(x/(1-x))` truncated at the same degree. The flag reports whether
    /// any contribution was cut by the truncation.
    pub fn substitute_geometric(&self) -> (Self, bool) {
        let d = self.degree;
        let mut out = Self::zero(d);
        let mut truncated = false;
        for (a, c) in self.terms.iter() {
            let p = a.parts();
            if !p.is_empty() {
                truncated = true;
            }
            // β_i ≥ α_i with coefficient Π C(β_i - 1, α_i - 1)
            fn rec<S: Coeff>(p: &[usize], room: usize, cur: &mut Vec<usize>, w: i64, c: &S, out: &mut QSym<S>) {
                let Some((&a, rest)) = p.split_first() else {
                    out.add_term(Composition::from_parts(cur), c.clone() * S::int(w));
                    return;
                };
                let need: usize = rest.iter().sum();
                for b in a..=room.saturating_sub(need) {
                    if b + need > room {
                        break;
                    }
                    cur.push(b);
                    rec(rest, room - b, cur, w * binomial(b - 1, a - 1), c, out);
                    cur.pop();
                }
            }
            if a.total() <= d {
                rec(p, d, &mut Vec::new(), 1, c, &mut out);
            }
        }
        (out, truncated)
    }

    /// `ζ_QSym(f)`: coefficient of `t^n` is the coefficient of `M_(n)` (and of `M_∅` for `n = 0`).
    pub fn zeta_coefficients(&self) -> Vec<S> {
        let mut out = vec![S::zero(); self.degree + 1];
        for (a, c) in self.terms.iter() {
            if a.len() <= 1 {
                out[a.total()] = c.clone();
            }
        }
        out
    }

    /// True when coefficients are constant on every fiber of `sort`.
    pub fn is_symmetric(&self) -> bool {
        let mut fibers: HashMap<crate::combinat::Partition, (S, usize)> = HashMap::new();
        for (a, c) in self.terms.iter() {
            let e = fibers.entry(a.sort()).or_insert_with(|| (c.clone(), 0));
            if e.0 != *c {
                return false;
            }
            e.1 += 1;
        }
        fibers.iter().all(|(lam, (_, k))| *k as u128 == rearrangement_count(lam.parts()))
    }

    /// Evaluates at finitely many commuting variables.
    pub fn evaluate(&self, xs: &[S]) -> S {
        let mut total = S::zero();
        for (a, c) in self.terms.iter() {
            total = total + c.clone() * eval_monomial(a.parts(), xs);
        }
        total
    }
}

/// Number of distinct rearrangements of a multiset of parts.
pub fn rearrangement_count(parts: &[usize]) -> u128 {
    let mut counts: HashMap<usize, u128> = HashMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    let fact = |k: u128| (1..=k).product::<u128>();
    counts.values().fold(fact(parts.len() as u128), |acc, &k| acc / fact(k))
}

/// `M_α(x_1, …, x_k)`.
fn eval_monomial<S: Coeff>(a: &[usize], xs: &[S]) -> S {
    // dp[j] = value of M_{α_1..α_i} over the first j variables
    let pow = |x: &S, e: usize| (0..e).fold(S::one(), |acc, _| acc * x.clone());
    let mut dp = vec![S::one(); xs.len() + 1];
    for &e in a {
        let mut next = vec![S::zero(); xs.len() + 1];
        for j in 1..=xs.len() {
            next[j] = next[j - 1].clone() + dp[j - 1].clone() * pow(&xs[j - 1], e);
        }
        dp = next;
    }
    dp[xs.len()].clone()
}

impl<S: Coeff> fmt::Debug for QSym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Coeff> fmt::Display for QSym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·M{a}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    comp: &'a [usize],
    coeff: String,
}

impl<S: Coeff> Serialize for QSym<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let terms: Vec<TermJson<'_>> = self.terms.iter().map(|(a, c)| TermJson { comp: a.parts(), coeff: c.to_string() }).collect();
        let mut st = s.serialize_struct("QSym", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
