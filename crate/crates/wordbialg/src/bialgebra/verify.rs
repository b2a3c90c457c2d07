//! Exhaustive bounded verification of bialgebra axioms and of the duality pairing.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::maps::*;
use crate::combinat::word::{packed_words, words_up_to, Word};
use crate::combinat::AnchoredWord;
use crate::linear::{Coeff, LinComb};

/// Degree and anchor bounds of a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub bounds: Bounds,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub checked: usize,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A graded bialgebra with a distinguished basis, enumerable within bounds.
pub trait BasedBialgebra<S: Coeff>: Sync {
    type Key: Ord + Clone + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    /// Basis elements with degree at most `bounds.degree` (and anchor at most `bounds.anchor`).
    fn basis(&self, bounds: Bounds) -> Vec<Self::Key>;
    /// `(degree, anchor)`; the anchor is zero when the structure has none.
    fn weight(&self, k: &Self::Key) -> (usize, usize);
    fn unit(&self) -> Self::Key;
    fn counit(&self, k: &Self::Key) -> S;
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key, S>;
    fn coproduct(&self, a: &Self::Key) -> LinComb<(Self::Key, Self::Key), S>;
}

/// `W` with `(∇_⧢, ι_⧢, Δ_⊙, ε_⊙)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct WordBialgebra;

/// `W_P` with its shifted shuffle and flattened deconcatenation.
#[derive(Clone, Copy, Debug, Default)]
pub struct PackedBialgebra;

/// A structure whose coproduct omits the `i = 0` term; used to exercise failure reporting.
#[derive(Clone, Copy, Debug, Default)]
pub struct DropEmptyPrefix<B>(pub B);

impl<S: Coeff> BasedBialgebra<S> for WordBialgebra {
    type Key = AnchoredWord;

    fn name(&self) -> String {
        "W".into()
    }

    fn basis(&self, bounds: Bounds) -> Vec<AnchoredWord> {
        let n_max = bounds.anchor.unwrap_or(0);
        (0..=n_max)
            .flat_map(|n| words_up_to(n, bounds.degree).into_iter().map(move |w| AnchoredWord { word: w, anchor: n }))
            .collect()
    }

    fn weight(&self, k: &AnchoredWord) -> (usize, usize) {
        (k.degree(), k.anchor as usize)
    }

    fn unit(&self) -> AnchoredWord {
        iota_shuffle()
    }

    fn counit(&self, k: &AnchoredWord) -> S {
        epsilon_odot(k)
    }

    fn product(&self, a: &AnchoredWord, b: &AnchoredWord) -> LinComb<AnchoredWord, S> {
        nabla_shuffle(a, b).expect("anchors within letter range")
    }

    fn coproduct(&self, a: &AnchoredWord) -> LinComb<(AnchoredWord, AnchoredWord), S> {
        delta_odot(a)
    }
}

impl<S: Coeff> BasedBialgebra<S> for PackedBialgebra {
    type Key = Word;

    fn name(&self) -> String {
        "W_P".into()
    }

    fn basis(&self, bounds: Bounds) -> Vec<Word> {
        (0..=bounds.degree).flat_map(packed_words).collect()
    }

    fn weight(&self, k: &Word) -> (usize, usize) {
        (k.len(), 0)
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn counit(&self, k: &Word) -> S {
        if k.is_empty() {
            S::one()
        } else {
            S::zero()
        }
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word, S> {
        packed_product(a, b).expect("basis elements are packed")
    }

    fn coproduct(&self, a: &Word) -> LinComb<(Word, Word), S> {
        packed_coproduct_unchecked(a)
    }
}

impl<S: Coeff, B: BasedBialgebra<S>> BasedBialgebra<S> for DropEmptyPrefix<B> {
    type Key = B::Key;

    fn name(&self) -> String {
        format!("{} with corrupted coproduct", self.0.name())
    }

    fn basis(&self, bounds: Bounds) -> Vec<B::Key> {
        self.0.basis(bounds)
    }

    fn weight(&self, k: &B::Key) -> (usize, usize) {
        self.0.weight(k)
    }

    fn unit(&self) -> B::Key {
        self.0.unit()
    }

    fn counit(&self, k: &B::Key) -> S {
        self.0.counit(k)
    }

    fn product(&self, a: &B::Key, b: &B::Key) -> LinComb<B::Key, S> {
        self.0.product(a, b)
    }

    fn coproduct(&self, a: &B::Key) -> LinComb<(B::Key, B::Key), S> {
        let full = self.0.coproduct(a);
        full.filter(|(x, _)| self.0.weight(x).0 > 0 || self.0.weight(a).0 == 0)
    }
}

fn within(b: Bounds, deg: usize, anchor: usize) -> bool {
    deg <= b.degree && b.anchor.is_none_or(|n| anchor <= n as usize)
}

fn mul_lin<S: Coeff, B: BasedBialgebra<S>>(s: &B, x: &LinComb<B::Key, S>, y: &LinComb<B::Key, S>) -> LinComb<B::Key, S> {
    let mut out = LinComb::zero();
    for (a, c) in x {
        for (b, d) in y {
            out.add_scaled(&(c.clone() * d.clone()), &s.product(a, b));
        }
    }
    out
}

fn report(axiom: &str, bounds: Bounds, checked: usize, witness: Option<String>) -> AxiomResult {
    AxiomResult {
        axiom: axiom.into(),
        bounds,
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
        checked,
    }
}

/// Checks (co)associativity, (co)unit laws and compatibility on every basis
/// tuple whose total degree and total anchor lie within `bounds`.
pub fn verify_bialgebra_axioms<S: Coeff, B: BasedBialgebra<S>>(s: &B, bounds: Bounds) -> Vec<AxiomResult> {
    let basis = s.basis(bounds);
    let weights: Vec<(usize, usize)> = basis.iter().map(|k| s.weight(k)).collect();
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| within(bounds, weights[i].0 + weights[j].0, weights[i].1 + weights[j].1))
        .collect();
    let triples: Vec<(usize, usize, usize)> = pairs
        .iter()
        .flat_map(|&(i, j)| (0..basis.len()).map(move |k| (i, j, k)))
        .filter(|&(i, j, k)| {
            within(bounds, weights[i].0 + weights[j].0 + weights[k].0, weights[i].1 + weights[j].1 + weights[k].1)
        })
        .collect();
    let unit = s.unit();
    let mut out = Vec::new();

    let w = triples.par_iter().find_map_first(|&(i, j, k)| {
        let (a, b, c) = (&basis[i], &basis[j], &basis[k]);
        let ab = s.product(a, b);
        let lhs = mul_lin(s, &ab, &LinComb::basis(c.clone()));
        let bc = s.product(b, c);
        let rhs = mul_lin(s, &LinComb::basis(a.clone()), &bc);
        (lhs != rhs).then(|| format!("a={a:?}, b={b:?}, c={c:?}: (ab)c={lhs:?} but a(bc)={rhs:?}"))
    });
    out.push(report("associativity", bounds, triples.len(), w));

    let w = basis.par_iter().find_map_first(|a| {
        let l = s.product(&unit, a);
        let r = s.product(a, &unit);
        let e = LinComb::basis(a.clone());
        (l != e || r != e).then(|| format!("a={a:?}: 1·a={l:?}, a·1={r:?}"))
    });
    out.push(report("unit", bounds, basis.len(), w));

    let w = basis.par_iter().find_map_first(|a| {
        let d = s.coproduct(a);
        let mut lhs: LinComb<(B::Key, B::Key, B::Key), S> = LinComb::zero();
        let mut rhs: LinComb<(B::Key, B::Key, B::Key), S> = LinComb::zero();
        for ((x, y), c) in &d {
            for ((x1, x2), e) in &s.coproduct(x) {
                lhs.add_term((x1.clone(), x2.clone(), y.clone()), c.clone() * e.clone());
            }
            for ((y1, y2), e) in &s.coproduct(y) {
                rhs.add_term((x.clone(), y1.clone(), y2.clone()), c.clone() * e.clone());
            }
        }
        (lhs != rhs).then(|| format!("a={a:?}: (Δ⊗id)Δa={lhs:?} but (id⊗Δ)Δa={rhs:?}"))
    });
    out.push(report("coassociativity", bounds, basis.len(), w));

    let w = basis.par_iter().find_map_first(|a| {
        let d = s.coproduct(a);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in &d {
            left.add_term(y.clone(), c.clone() * s.counit(x));
            right.add_term(x.clone(), c.clone() * s.counit(y));
        }
        let e = LinComb::basis(a.clone());
        (left != e || right != e).then(|| format!("a={a:?}: (ε⊗id)Δa={left:?}, (id⊗ε)Δa={right:?}"))
    });
    out.push(report("counit", bounds, basis.len(), w));

    let w = pairs.par_iter().find_map_first(|&(i, j)| {
        let (a, b) = (&basis[i], &basis[j]);
        let lhs = s.product(a, b).map_linear(|k| s.coproduct(k));
        let mut rhs = LinComb::zero();
        for ((a1, a2), c) in &s.coproduct(a) {
            for ((b1, b2), d) in &s.coproduct(b) {
                let coef = c.clone() * d.clone();
                rhs.add_scaled(&coef, &s.product(a1, b1).tensor(&s.product(a2, b2)));
            }
        }
        (lhs != rhs).then(|| format!("a={a:?}, b={b:?}: Δ(ab)={lhs:?} but Δ(a)Δ(b)={rhs:?}"))
    });
    out.push(report("compatibility", bounds, pairs.len(), w));

    let w = pairs.par_iter().find_map_first(|&(i, j)| {
        let (a, b) = (&basis[i], &basis[j]);
        let lhs = s.product(a, b).iter().fold(S::zero(), |acc, (k, c)| acc + c.clone() * s.counit(k));
        let rhs = s.counit(a) * s.counit(b);
        (lhs != rhs).then(|| format!("a={a:?}, b={b:?}: ε(ab)={lhs} but ε(a)ε(b)={rhs}"))
    });
    out.push(report("counit-multiplicative", bounds, pairs.len(), w));

    let d1 = s.coproduct(&unit);
    let w = (d1 != LinComb::basis((unit.clone(), unit.clone())) || s.counit(&unit) != S::one())
        .then(|| format!("Δ(1)={d1:?}, ε(1)={}", s.counit(&unit)));
    out.push(report("unit-comultiplicative", bounds, 1, w));
    out
}

/// Checks the pairing `⟨σ,τ⟩ = Σ σ(w,n)τ(w,n)` against both pairs of
/// mutually dual maps on all basis triples within `bounds`.
pub fn duality_pairing_check<S: Coeff>(bounds: Bounds) -> Vec<AxiomResult> {
    let basis = <WordBialgebra as BasedBialgebra<S>>::basis(&WordBialgebra, bounds);
    let inb = |a: &AnchoredWord| within(bounds, a.degree(), a.anchor as usize);
    type Triple = (AnchoredWord, AnchoredWord, AnchoredWord);
    let mut out = Vec::new();

    // ⟨∇_⧢(a⊗b), c⟩ = ⟨a⊗b, Δ_⧢(c)⟩: coefficient of c in ∇_⧢(a⊗b) against
    // coefficient of a⊗b in Δ_⧢(c), as maps on triples (a, b, c).
    let mut from_product: LinComb<Triple, S> = LinComb::zero();
    for a in &basis {
        for b in &basis {
            if !within(bounds, a.degree() + b.degree(), (a.anchor + b.anchor) as usize) {
                continue;
            }
            for (c, k) in &nabla_shuffle::<S>(a, b).expect("bounded anchors") {
                from_product.add_term((a.clone(), b.clone(), c.clone()), k.clone());
            }
        }
    }
    let mut from_coproduct: LinComb<Triple, S> = LinComb::zero();
    for c in &basis {
        for ((a, b), k) in &delta_shuffle::<S>(c) {
            if inb(a) && inb(b) {
                from_coproduct.add_term((a.clone(), b.clone(), c.clone()), k.clone());
            }
        }
    }
    out.push(compare_triples("pairing ∇_⧢ / Δ_⧢", bounds, &from_product, &from_coproduct));

    // ⟨Δ_⊙(a), b⊗c⟩ = ⟨a, ∇_⊙(b⊗c)⟩.
    let mut from_coproduct: LinComb<Triple, S> = LinComb::zero();
    for a in &basis {
        for ((b, c), k) in &delta_odot::<S>(a) {
            from_coproduct.add_term((a.clone(), b.clone(), c.clone()), k.clone());
        }
    }
    let mut from_product: LinComb<Triple, S> = LinComb::zero();
    for b in &basis {
        for c in &basis {
            for (a, k) in &nabla_odot::<S>(b, c) {
                if inb(a) {
                    from_product.add_term((a.clone(), b.clone(), c.clone()), k.clone());
                }
            }
        }
    }
    out.push(compare_triples("pairing Δ_⊙ / ∇_⊙", bounds, &from_coproduct, &from_product));

    // ⟨ι_⧢(1), c⟩ = ε_⧢(c) and ⟨ι_⊙(1), a⟩ = ε_⊙(a).
    let iota = iota_odot::<S>(bounds.anchor.unwrap_or(0));
    let unit = iota_shuffle();
    let w = basis.iter().find_map(|c| {
        let lhs = if *c == unit { S::one() } else { S::zero() };
        let rhs = epsilon_shuffle::<S>(c);
        let lhs2 = iota.coeff(c);
        let rhs2 = epsilon_odot::<S>(c);
        (lhs != rhs || lhs2 != rhs2).then(|| format!("c={c:?}"))
    });
    out.push(report("pairing units/counits", bounds, basis.len(), w));
    out
}

fn compare_triples<S: Coeff>(
    axiom: &str,
    bounds: Bounds,
    x: &LinComb<(AnchoredWord, AnchoredWord, AnchoredWord), S>,
    y: &LinComb<(AnchoredWord, AnchoredWord, AnchoredWord), S>,
) -> AxiomResult {
    let diff = x.sub(y);
    let witness = diff.iter().next().map(|(t, _)| {
        format!("a={:?}, b={:?}, c={:?}: {} vs {}", t.0, t.1, t.2, x.coeff(t), y.coeff(t))
    });
    report(axiom, bounds, x.len().max(y.len()), witness)
}
