//! Bounded checkers for the classification properties of word relations.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::closure::{close, ClosureBounds, RelationInstance};
use super::presentation::{CoxeterM, MValue, RelationPresentation};
use super::universe::UniverseKind;
use crate::combinat::Word;
use crate::error::{Error, Result};

/// Outcome of a bounded check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Exhaustive at the stated bounds.
    Pass,
    Fail,
    /// Sampled pass; not exhaustive.
    BoundedEvidence,
}

impl Verdict {
    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Verdict::Pass => "✓",
            Verdict::Fail => "✗",
            Verdict::BoundedEvidence => "~",
        }
    }

    fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::BoundedEvidence, _) | (_, Verdict::BoundedEvidence) => Verdict::BoundedEvidence,
            _ => Verdict::Pass,
        }
    }
}

/// Result of one bounded check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub verdict: Verdict,
    /// Number of elementary comparisons made.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    fn new(property: &str, verdict: Verdict, checked: u64, witness: Option<String>) -> Self {
        CheckReport { property: property.into(), verdict, checked, witness }
    }
}

/// A property verdict built from sub-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: Verdict,
    pub parts: Vec<CheckReport>,
}

impl PropertyReport {
    fn combine(property: &str, parts: Vec<CheckReport>) -> Self {
        let verdict = parts.iter().fold(Verdict::Pass, |v, p| v.and(p.verdict));
        PropertyReport { property: property.into(), verdict, parts }
    }

    pub fn witness(&self) -> Option<&str> {
        self.parts.iter().find_map(|p| p.witness.as_deref())
    }
}

/// Default cap on enumerated pairs for the congruence check.
pub const DEFAULT_PAIR_CAP: u64 = 5_000_000;

fn require_alphabet(inst: &RelationInstance) -> Result<u8> {
    match inst.universe() {
        UniverseKind::Alphabet(n) => Ok(n),
        UniverseKind::LetterSet(_) => Err(Error::Domain("restriction checks need an alphabet universe".into())),
    }
}

fn members_len_le(inst: &RelationInstance, l: usize) -> impl Iterator<Item = (&Word, u32)> {
    inst.classes()
        .iter()
        .enumerate()
        .flat_map(move |(c, cls)| cls.members.iter().filter(move |w| w.len() <= l).map(move |w| (w, c as u32)))
}

/// Condition (a): `v∼v'`, `w∼w'` imply `vw∼v'w'`, for `ℓ(v)+ℓ(w) ≤ L`.
/// Exhaustive below `pair_cap` pairs, otherwise a seeded sample of that size.
pub fn check_congruence(inst: &RelationInstance, pair_cap: u64, seed: u64) -> CheckReport {
    let l = inst.max_len();
    let by_len: Vec<Vec<(&Word, u32)>> =
        (0..=l).map(|k| members_len_le(inst, k).filter(|(w, _)| w.len() == k).collect()).collect();
    let total: u64 = (0..=l)
        .flat_map(|a| (0..=l - a).map(move |b| (a, b)))
        .map(|(a, b)| by_len[a].len() as u64 * by_len[b].len() as u64)
        .sum();
    let mut seen: FxHashMap<(u32, u32), (u32, Word, Word)> = FxHashMap::default();
    let mut checked = 0u64;
    // records the product class of (v, w); returns a witness on conflict
    let mut step = |v: &Word, cv: u32, w: &Word, cw: u32| -> Option<String> {
        let vw = v.concat(w);
        let c = inst.class_id(vw.letters()).expect("product within bounds");
        checked += 1;
        match seen.get(&(cv, cw)) {
            Some((c0, v0, w0)) if *c0 != c => Some(format!("{v0} ∼ {v} and {w0} ∼ {w} but {} ≁ {vw}", v0.concat(w0))),
            Some(_) => None,
            None => {
                seen.insert((cv, cw), (c, v.clone(), w.clone()));
                None
            }
        }
    };
    let mut witness = None;
    let verdict = if total <= pair_cap {
        'all: for a in 0..=l {
            for b in 0..=l - a {
                for &(v, cv) in &by_len[a] {
                    for &(w, cw) in &by_len[b] {
                        witness = step(v, cv, w, cw);
                        if witness.is_some() {
                            break 'all;
                        }
                    }
                }
            }
        }
        Verdict::Pass
    } else {
        let all: Vec<(&Word, u32)> = members_len_le(inst, l).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut drawn = 0u64;
        while drawn < pair_cap && witness.is_none() {
            let (v, cv) = all[rng.gen_range(0..all.len())];
            let (w, cw) = all[rng.gen_range(0..all.len())];
            if v.len() + w.len() > l {
                continue;
            }
            drawn += 1;
            witness = step(v, cv, w, cw);
        }
        Verdict::BoundedEvidence
    };
    let verdict = if witness.is_some() { Verdict::Fail } else { verdict };
    CheckReport::new("congruence", verdict, checked, witness)
}

/// `(w ∩ [m+1, k]) ↓ m`.
pub fn restrict_interval(w: &Word, m: u8, k: u8) -> Word {
    w.restrict_range(m + 1, k).shift_down(m).expect("interval restriction stays positive")
}

/// Condition (b): `v∼w` implies `(v∩I)↓m ∼ (w∩I)↓m` for every interval `I = [m+1, k]`.
pub fn check_interval_restriction(inst: &RelationInstance) -> Result<CheckReport> {
    let n = require_alphabet(inst)?;
    let mut checked = 0u64;
    for cls in inst.classes() {
        for m in 0..n {
            for k in m + 1..=n {
                let first = restrict_interval(&cls.rep, m, k);
                let c0 = inst.class_id(first.letters()).unwrap();
                for w in &cls.members[1..] {
                    let r = restrict_interval(w, m, k);
                    checked += 1;
                    if inst.class_id(r.letters()).unwrap() != c0 {
                        let wit = format!("{} ∼ {w} but on [{}, {k}]: {first} ≁ {r}", cls.rep, m + 1);
                        return Ok(CheckReport::new("interval-restriction", Verdict::Fail, checked, Some(wit)));
                    }
                }
            }
        }
    }
    Ok(CheckReport::new("interval-restriction", Verdict::Pass, checked, None))
}

/// Conditions (a) and (b) of algebraicity.
pub fn check_algebraic(inst: &RelationInstance) -> Result<PropertyReport> {
    let a = check_congruence(inst, DEFAULT_PAIR_CAP, 0);
    let b = check_interval_restriction(inst)?;
    Ok(PropertyReport::combine("algebraic", vec![a, b]))
}

/// Order-preserving injections `[k] → [n]`.
fn injections(k: u8, n: u8) -> Vec<Vec<u8>> {
    fn rec(k: u8, n: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map_or(1, |&x| x + 1);
        let left = k - cur.len() as u8;
        for t in lo..=n + 1 - left {
            cur.push(t);
            rec(k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(k, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `φ(v) ∼ φ(w)` for `v∼w` and order-preserving injections `φ : [max v] → [n]`.
pub fn check_injections(inst: &RelationInstance) -> Result<CheckReport> {
    let n = require_alphabet(inst)?;
    let mut checked = 0u64;
    for cls in inst.classes() {
        let k = cls.rep.letters().iter().copied().max().unwrap_or(0);
        if k == 0 {
            continue;
        }
        for phi in injections(k, n) {
            let apply = |w: &Word| Word::from_slice(&w.letters().iter().map(|&a| phi[a as usize - 1]).collect::<Vec<_>>());
            let first = apply(&cls.rep);
            let c0 = inst.class_id(first.letters()).unwrap();
            for w in &cls.members[1..] {
                let img = apply(w);
                checked += 1;
                if inst.class_id(img.letters()).unwrap() != c0 {
                    let wit = format!("{} ∼ {w} but φ = {:?}: {first} ≁ {img}", cls.rep, phi);
                    return Ok(CheckReport::new("injection-closure", Verdict::Fail, checked, Some(wit)));
                }
            }
        }
    }
    Ok(CheckReport::new("injection-closure", Verdict::Pass, checked, None))
}

/// Algebraic and closed under order-preserving injections.
pub fn check_uniformly_algebraic(inst: &RelationInstance) -> Result<PropertyReport> {
    let alg = check_algebraic(inst)?;
    let mut parts = alg.parts;
    parts.push(check_injections(inst)?);
    Ok(PropertyReport::combine("uniformly-algebraic", parts))
}

/// Number of `(u, v)`-destandardizations among `members`.
pub fn count_destandardizations(members: &[Word], u: &Word, v: &Word) -> u64 {
    let k = u.len();
    members
        .iter()
        .filter(|w| w.len() == k + v.len() && &w.slice(0, k).flatten() == u && &w.slice(k, w.len()).flatten() == v)
        .count() as u64
}

/// Destandardization tallies of one class: `(fl prefix, fl suffix) → count` over all cuts.
fn tally(members: &[Word]) -> BTreeMap<(Word, Word), u64> {
    let mut t = BTreeMap::new();
    for w in members {
        for k in 0..=w.len() {
            *t.entry((w.slice(0, k).flatten(), w.slice(k, w.len()).flatten())).or_insert(0) += 1;
        }
    }
    t
}

fn shortlex<'a>(u: &'a Word, v: &'a Word) -> (usize, &'a Word, usize, &'a Word) {
    (u.len(), u, v.len(), v)
}

/// Display with `∅` for the empty word.
pub fn show(w: &Word) -> String {
    if w.is_empty() {
        "∅".into()
    } else {
        w.to_string()
    }
}

/// Condition (a) of P-algebraicity: within each class, destandardization
/// counts agree (or agree mod `p`) across `u∼u'`, `v∼v'` with `|u|+|v| ≤ L`.
pub fn check_destandardization_counts(inst: &RelationInstance, p: Option<u64>) -> CheckReport {
    let l = inst.max_len();
    let reduce = |c: u64| p.map_or(c, |p| c % p);
    // packed members of each class, for zero counts
    let mut packed: FxHashMap<u32, Vec<&Word>> = FxHashMap::default();
    for (c, cls) in inst.classes().iter().enumerate() {
        let ws: Vec<&Word> = cls.members.iter().filter(|w| w.is_packed()).collect();
        if !ws.is_empty() {
            packed.insert(c as u32, ws);
        }
    }
    let mut checked = 0u64;
    for cls in inst.classes() {
        let t = tally(&cls.members);
        // group by (class of suffix, class of prefix)
        let mut groups: BTreeMap<(u32, u32), Vec<(&Word, &Word, u64)>> = BTreeMap::new();
        for ((u, v), &c) in &t {
            let cu = inst.class_id(u.letters()).unwrap();
            let cv = inst.class_id(v.letters()).unwrap();
            groups.entry((cv, cu)).or_default().push((u, v, c));
        }
        for ((cv, cu), entries) in groups {
            let mut max: Option<(&Word, &Word, u64)> = None;
            let mut min: Option<(&Word, &Word, u64)> = None;
            for &(u, v, c) in &entries {
                checked += 1;
                let shorter = |m: (&Word, &Word, u64)| shortlex(u, v) < shortlex(m.0, m.1);
                if max.is_none_or(|m| reduce(c) > reduce(m.2) || (reduce(c) == reduce(m.2) && shorter(m))) {
                    max = Some((u, v, c));
                }
                if min.map_or(true, |m| reduce(c) < reduce(m.2) || (reduce(c) == reduce(m.2) && shorter(m))) {
                    min = Some((u, v, c));
                }
            }
            let present: std::collections::BTreeSet<(&Word, &Word)> = entries.iter().map(|&(u, v, _)| (u, v)).collect();
            let mut zero: Option<(&Word, &Word)> = None;
            'outer: for u in &packed[&cu] {
                for v in &packed[&cv] {
                    if u.len() + v.len() <= l && !present.contains(&(*u, *v)) {
                        zero = Some((u, v));
                        break 'outer;
                    }
                }
            }
            let (hu, hv, hc) = max.unwrap();
            let bad = match zero {
                Some((zu, zv)) if reduce(hc) != 0 => Some(format!("({}, {}): 0", show(zu), show(zv))),
                _ => {
                    let (lu, lv, lc) = min.unwrap();
                    (reduce(lc) != reduce(hc)).then(|| format!("({}, {}): {lc}", show(lu), show(lv)))
                }
            };
            if let Some(other) = bad {
                let wit = format!("class of {}: ({}, {}): {hc} vs {other}", show(&cls.rep), show(hu), show(hv));
                return CheckReport::new("destandardization-counts", Verdict::Fail, checked, Some(wit));
            }
        }
    }
    CheckReport::new("destandardization-counts", Verdict::Pass, checked, None)
}

/// Conditions (a) and (b) of P-algebraicity, over characteristic zero or `p`.
pub fn check_p_algebraic(inst: &RelationInstance, p: Option<u64>) -> Result<PropertyReport> {
    let a = check_destandardization_counts(inst, p);
    let b = check_interval_restriction(inst)?;
    Ok(PropertyReport::combine("p-algebraic", vec![a, b]))
}

/// Confirms, within a bounded closure, that the alternating words of length
/// `len` in `a, b` are related exactly when `m(a, b) ≤ len`.
pub fn braid_lemma_check(a: u8, b: u8, len: usize, m: &CoxeterM) -> Result<bool> {
    if a == b || a == 0 || b == 0 {
        return Err(Error::Domain(format!("braid check needs distinct letters, got {a}, {b}")));
    }
    let n = a.max(b);
    let inst = close(&RelationPresentation::coxeter("coxeter", m.clone()), ClosureBounds::alphabet(n, len, 1))?;
    let alt = |x: u8, y: u8| Word::from_slice(&(0..len).map(|i| if i % 2 == 0 { x } else { y }).collect::<Vec<_>>());
    let related = inst.equivalent(&alt(a, b), &alt(b, a))?;
    let expected = match m.get(a, b) {
        MValue::Finite(k) => k as usize <= len,
        MValue::Infinite => false,
    };
    Ok(related == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::w;
    use crate::relation::presentation::Builtin;

    fn inst(b: Builtin, n: u8, l: usize) -> RelationInstance {
        close(&RelationPresentation::builtin(b), ClosureBounds::alphabet(n, l, 2)).unwrap()
    }

    #[test]
    fn destandardization_example() {
        let ws = [w("1234"), w("1324"), w("1423"), w("2143")];
        assert_eq!(count_destandardizations(&ws, &w("12"), &w("12")), 3);
        assert_eq!(count_destandardizations(&[w("")], &w(""), &w("")), 1);
    }

    #[test]
    fn builtins_algebraic_small() {
        for b in [Builtin::Knuth, Builtin::KKnuth, Builtin::Hecke, Builtin::Commutation] {
            let i = inst(b, 3, 4);
            assert_eq!(check_algebraic(&i).unwrap().verdict, Verdict::Pass, "{b:?}");
            assert_eq!(check_p_algebraic(&i, None).unwrap().verdict, Verdict::Pass, "{b:?}");
        }
    }

    #[test]
    fn equality_relation_passes() {
        let p = RelationPresentation::explicit("equality", vec![], false).unwrap();
        let i = close(&p, ClosureBounds::alphabet(3, 4, 0)).unwrap();
        assert_eq!(check_algebraic(&i).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_p_algebraic(&i, None).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn restriction_violation_found() {
        let p = RelationPresentation::explicit("bad", vec![(w("123"), w("321"))], false).unwrap();
        let i = close(&p, ClosureBounds::alphabet(3, 4, 0)).unwrap();
        let r = check_algebraic(&i).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness().unwrap().contains("12 ≁ 21"), "{:?}", r.witness());
    }

    #[test]
    fn shifted_hecke_witness() {
        let i = inst(Builtin::ShiftedHecke(2), 3, 4);
        assert_eq!(check_algebraic(&i).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_uniformly_algebraic(&i).unwrap().verdict, Verdict::Fail);
        let r = check_p_algebraic(&i, None).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.witness().unwrap(), "class of 13: (12, ∅): 1 vs (21, ∅): 0");
        assert_eq!(check_p_algebraic(&i, Some(2)).unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn coxeter_uniformity() {
        let hecke = CoxeterM::constant(MValue::Finite(2)).with_band(1, MValue::Finite(3));
        let i = close(&RelationPresentation::coxeter("h", hecke), ClosureBounds::alphabet(3, 4, 2)).unwrap();
        assert_eq!(check_uniformly_algebraic(&i).unwrap().verdict, Verdict::Pass);
        let bad = CoxeterM::constant(MValue::Finite(2)).with_override(1, 2, MValue::Finite(3));
        let i = close(&RelationPresentation::coxeter("b", bad), ClosureBounds::alphabet(3, 4, 2)).unwrap();
        assert_eq!(check_uniformly_algebraic(&i).unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn braid_lemma() {
        let m3 = CoxeterM::constant(MValue::Finite(2)).with_band(1, MValue::Finite(3));
        for len in 1..=5 {
            assert!(braid_lemma_check(1, 2, len, &m3).unwrap());
        }
        let inf = CoxeterM::constant(MValue::Infinite);
        for len in 1..=5 {
            assert!(braid_lemma_check(1, 2, len, &inf).unwrap());
        }
        let two = CoxeterM::constant(MValue::Finite(2));
        let i = close(&RelationPresentation::coxeter("c", two), ClosureBounds::alphabet(2, 2, 1)).unwrap();
        assert!(i.equivalent(&w("12"), &w("21")).unwrap());
    }

    #[test]
    fn sampled_congruence_is_labelled() {
        let i = inst(Builtin::Knuth, 2, 4);
        let r = check_congruence(&i, 50, 7);
        assert_eq!(r.verdict, Verdict::BoundedEvidence);
    }
}
