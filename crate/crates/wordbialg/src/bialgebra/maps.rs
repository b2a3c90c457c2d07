//! Structure maps of `W`, its packed quotient `W_P`, and the dual maps.
//!
//! The dual maps act on the completion of `W`; here they are evaluated on
//! basis elements, and the infinite unit `ι_⊙(1)` is cut off at an anchor bound.

use std::collections::BTreeMap;

use crate::combinat::word::{Letters, Word};
use crate::combinat::AnchoredWord;
use crate::error::{Error, Result};
use crate::linear::{Coeff, LinComb};

/// Calls `f` on every interleaving of `u` and `v`, with multiplicity.
pub fn for_each_shuffle<F: FnMut(&[u8])>(u: &[u8], v: &[u8], mut f: F) {
    fn rec<F: FnMut(&[u8])>(u: &[u8], v: &[u8], cur: &mut Letters, f: &mut F) {
        if u.is_empty() || v.is_empty() {
            let mark = cur.len();
            cur.extend_from_slice(u);
            cur.extend_from_slice(v);
            f(cur);
            cur.truncate(mark);
            return;
        }
        cur.push(u[0]);
        rec(&u[1..], v, cur, f);
        cur.pop();
        cur.push(v[0]);
        rec(u, &v[1..], cur, f);
        cur.pop();
    }
    rec(u, v, &mut Letters::new(), &mut f);
}

/// `u ⧢ v`, with multiplicities.
pub fn shuffle<S: Coeff>(u: &Word, v: &Word) -> LinComb<Word, S> {
    let mut counts: BTreeMap<Word, i64> = BTreeMap::new();
    for_each_shuffle(u.letters(), v.letters(), |l| {
        *counts.entry(Word::from_slice(l)).or_insert(0) += 1;
    });
    counts.into_iter().map(|(k, c)| (k, S::int(c))).collect()
}

/// `∇_⧢([v,m] ⊗ [w,n]) = [v ⧢ (w↑m), m+n]`.
pub fn nabla_shuffle<S: Coeff>(a: &AnchoredWord, b: &AnchoredWord) -> Result<LinComb<AnchoredWord, S>> {
    let anchor = a.anchor.checked_add(b.anchor).ok_or_else(|| Error::Domain("anchor overflow".into()))?;
    let shifted = b.word.shift_up(a.anchor)?;
    let mut out = LinComb::zero();
    for_each_shuffle(a.word.letters(), shifted.letters(), |l| {
        out.add_term(AnchoredWord { word: Word::from_slice(l), anchor }, S::one());
    });
    Ok(out)
}

/// `ι_⧢(1) = [∅, 0]`.
pub fn iota_shuffle() -> AnchoredWord {
    AnchoredWord::empty(0)
}

/// `Δ_⊙([w,n]) = Σ_i [w_1⋯w_i, n] ⊗ [w_{i+1}⋯w_m, n]`.
pub fn delta_odot<S: Coeff>(a: &AnchoredWord) -> LinComb<(AnchoredWord, AnchoredWord), S> {
    let m = a.word.len();
    (0..=m)
        .map(|i| {
            let left = AnchoredWord { word: a.word.slice(0, i), anchor: a.anchor };
            let right = AnchoredWord { word: a.word.slice(i, m), anchor: a.anchor };
            ((left, right), S::one())
        })
        .collect()
}

/// `ε_⊙([w,n]) = 1` exactly when `w = ∅`.
pub fn epsilon_odot<S: Coeff>(a: &AnchoredWord) -> S {
    if a.word.is_empty() {
        S::one()
    } else {
        S::zero()
    }
}

fn require_packed(w: &Word) -> Result<()> {
    if w.is_packed() {
        Ok(())
    } else {
        Err(Error::NotPacked(w.to_string()))
    }
}

/// Product of `W_P`: `u ⧢ (v↑max(u))`.
pub fn packed_product<S: Coeff>(u: &Word, v: &Word) -> Result<LinComb<Word, S>> {
    require_packed(u)?;
    require_packed(v)?;
    let shifted = v.shift_up(u.max_letter())?;
    let mut out = LinComb::zero();
    for_each_shuffle(u.letters(), shifted.letters(), |l| out.add_term(Word::from_slice(l), S::one()));
    Ok(out)
}

/// Coproduct of `W_P`: `Σ_i fl(w_1⋯w_i) ⊗ fl(w_{i+1}⋯w_n)`.
pub fn packed_coproduct<S: Coeff>(w: &Word) -> Result<LinComb<(Word, Word), S>> {
    require_packed(w)?;
    Ok(packed_coproduct_unchecked(w))
}

pub(crate) fn packed_coproduct_unchecked<S: Coeff>(w: &Word) -> LinComb<(Word, Word), S> {
    let m = w.len();
    (0..=m).map(|i| ((w.slice(0, i).flatten(), w.slice(i, m).flatten()), S::one())).collect()
}

/// `∇_⊙([v,m] ⊗ [w,n]) = [vw, m]` if `m = n`, else zero.
pub fn nabla_odot<S: Coeff>(a: &AnchoredWord, b: &AnchoredWord) -> LinComb<AnchoredWord, S> {
    if a.anchor == b.anchor {
        LinComb::basis(AnchoredWord { word: a.word.concat(&b.word), anchor: a.anchor })
    } else {
        LinComb::zero()
    }
}

/// `Δ_⧢([w,n]) = Σ_{m=0}^{n} [w ∩ [m], m] ⊗ [(w↓m) ∩ [n-m], n-m]`.
pub fn delta_shuffle<S: Coeff>(a: &AnchoredWord) -> LinComb<(AnchoredWord, AnchoredWord), S> {
    let n = a.anchor;
    (0..=n)
        .map(|m| {
            let low = a.word.restrict(|x| x <= m);
            let high = Word::from_letters(a.word.letters().iter().filter(|&&x| x > m).map(|&x| x - m).collect());
            let left = AnchoredWord { word: low, anchor: m };
            let right = AnchoredWord { word: high, anchor: n - m };
            ((left, right), S::one())
        })
        .collect()
}

/// `ε_⧢([w,n]) = 1` exactly when `n = 0`.
pub fn epsilon_shuffle<S: Coeff>(a: &AnchoredWord) -> S {
    if a.anchor == 0 {
        S::one()
    } else {
        S::zero()
    }
}

/// `ι_⊙(1) = Σ_n [∅, n]`, truncated to anchors `n ≤ max_anchor`.
pub fn iota_odot<S: Coeff>(max_anchor: u8) -> LinComb<AnchoredWord, S> {
    (0..=max_anchor).map(|n| (AnchoredWord::empty(n), S::one())).collect()
}

/// Bilinear extension of `∇_⧢`.
pub fn mul_w<S: Coeff>(x: &LinComb<AnchoredWord, S>, y: &LinComb<AnchoredWord, S>) -> Result<LinComb<AnchoredWord, S>> {
    let mut out = LinComb::zero();
    for (a, c) in x {
        for (b, d) in y {
            out.add_scaled(&(c.clone() * d.clone()), &nabla_shuffle(a, b)?);
        }
    }
    Ok(out)
}

/// Bilinear extension of the product of `W_P`.
pub fn mul_packed<S: Coeff>(x: &LinComb<Word, S>, y: &LinComb<Word, S>) -> Result<LinComb<Word, S>> {
    let mut out = LinComb::zero();
    for (a, c) in x {
        for (b, d) in y {
            out.add_scaled(&(c.clone() * d.clone()), &packed_product(a, b)?);
        }
    }
    Ok(out)
}

/// The quotient map `W → W_P`, `[w,n] ↦ fl(w)`.
pub fn to_packed<S: Coeff>(x: &LinComb<AnchoredWord, S>) -> LinComb<Word, S> {
    x.map_keys(|a| a.word.flatten())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::w;
    use crate::Q;

    fn aw(s: &str) -> AnchoredWord {
        s.parse().unwrap()
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn shuffle_example() {
        let x: LinComb<Word, Q> = shuffle(&w("12"), &w("21"));
        let expect: LinComb<Word, Q> =
            [(w("1221"), q(2)), (w("1212"), q(1)), (w("2121"), q(1)), (w("2112"), q(2))].into_iter().collect();
        assert_eq!(x, expect);
        assert_eq!(shuffle::<Q>(&w("132"), &w("")), LinComb::basis(w("132")));
        assert_eq!(shuffle::<Q>(&w("123"), &w("45")).mass(), q(10));
    }

    #[test]
    fn nabla_shuffle_example() {
        let x: LinComb<AnchoredWord, Q> = nabla_shuffle(&aw("[12|3]"), &aw("[2|2]")).unwrap();
        let expect: LinComb<AnchoredWord, Q> = ["[125|5]", "[152|5]", "[512|5]"].iter().map(|s| (aw(s), q(1))).collect();
        assert_eq!(x, expect);
        let unit: LinComb<AnchoredWord, Q> = nabla_shuffle(&iota_shuffle(), &aw("[31|4]")).unwrap();
        assert_eq!(unit, LinComb::basis(aw("[31|4]")));
    }

    #[test]
    fn delta_odot_example() {
        let x: LinComb<(AnchoredWord, AnchoredWord), Q> = delta_odot(&aw("[12|2]"));
        let expect = [("[|2]", "[12|2]"), ("[1|2]", "[2|2]"), ("[12|2]", "[|2]")]
            .iter()
            .map(|(a, b)| ((aw(a), aw(b)), q(1)))
            .collect();
        assert_eq!(x, expect);
        let e: LinComb<_, Q> = delta_odot(&aw("[|3]"));
        assert_eq!(e, LinComb::basis((aw("[|3]"), aw("[|3]"))));
        assert_eq!(epsilon_odot::<Q>(&aw("[|3]")), q(1));
        assert_eq!(epsilon_odot::<Q>(&aw("[1|3]")), q(0));
    }

    #[test]
    fn packed_examples() {
        let c: LinComb<(Word, Word), Q> = packed_coproduct(&w("121")).unwrap();
        let expect = [("", "121"), ("1", "21"), ("12", "1"), ("121", "")]
            .iter()
            .map(|(a, b)| ((w(a), w(b)), q(1)))
            .collect();
        assert_eq!(c, expect);
        let p: LinComb<Word, Q> = packed_product(&w("1"), &w("1")).unwrap();
        assert_eq!(p, [(w("12"), q(1)), (w("21"), q(1))].into_iter().collect());
        assert_eq!(packed_product::<Q>(&w(""), &w("213")).unwrap(), LinComb::basis(w("213")));
        assert!(packed_product::<Q>(&w("13"), &w("1")).is_err());
        assert!(packed_coproduct::<Q>(&w("2")).is_err());
    }

    #[test]
    fn dual_map_examples() {
        assert_eq!(nabla_odot::<Q>(&aw("[12|2]"), &aw("[21|2]")), LinComb::basis(aw("[1221|2]")));
        assert!(nabla_odot::<Q>(&aw("[1|1]"), &aw("[1|2]")).is_zero());
        let d: LinComb<_, Q> = delta_shuffle(&aw("[21|2]"));
        let expect = [("[|0]", "[21|2]"), ("[1|1]", "[1|1]"), ("[21|2]", "[|0]")]
            .iter()
            .map(|(a, b)| ((aw(a), aw(b)), q(1)))
            .collect();
        assert_eq!(d, expect);
        let i: LinComb<_, Q> = iota_odot(3);
        assert_eq!(i.len(), 4);
        assert_eq!(i.coeff(&aw("[|2]")), q(1));
    }

    #[test]
    fn grading() {
        use crate::combinat::words_up_to;
        let mut basis = Vec::new();
        for n in 0..=3u8 {
            for word in words_up_to(n, 6) {
                basis.push(AnchoredWord::new(word, n).unwrap());
            }
        }
        for a in basis.iter().filter(|a| a.degree() <= 3) {
            for b in basis.iter().filter(|b| b.degree() <= 3) {
                let p: LinComb<_, Q> = nabla_shuffle(a, b).unwrap();
                assert!(p.keys().all(|k| k.degree() == a.degree() + b.degree()));
            }
        }
        for a in &basis {
            let d: LinComb<_, Q> = delta_odot(a);
            assert!(d.keys().all(|(x, y)| x.degree() + y.degree() == a.degree()));
        }
    }
}
