//! One-step rewriting: the neighbors of a word under a presentation.

use rustc_hash::FxHashMap;

use super::presentation::{Builtin, CoxeterM, GeneratorSource, MValue, RelationPresentation};
use crate::combinat::word::{letter_mask, Letters};
use crate::combinat::Word;
use crate::error::{Error, Result};

/// Local moves of the built-in pattern families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    /// `a ∼ aa`.
    Dup,
    /// `ab ∼ ba` when `|a - b| ≥ gap`.
    Swap(u8),
    /// `bac ∼ bca` and `acb ∼ cab` for `a < b < c`.
    KnuthDistinct,
    /// `aba ∼ baa` and `bab ∼ bba` for `a < b`.
    KnuthRepeat,
    /// `aba ∼ bab` for `a ≠ b`.
    Braid,
    /// `bba ∼ bab ∼ abb` for `a < b`.
    ExoticTriple,
    /// `xyzy ∼ yzyx` for `x ≤ y < z`.
    ExoticQuad,
}

fn moves_of(b: Builtin) -> &'static [Move] {
    use Move::*;
    match b {
        Builtin::Commutation => &[Swap(1)],
        Builtin::KEquivalence => &[Dup],
        Builtin::KCommutation => &[Swap(1), Dup],
        Builtin::Knuth => &[KnuthDistinct, KnuthRepeat],
        Builtin::KKnuth => &[KnuthDistinct, Braid, Dup],
        Builtin::Hecke => &[Swap(2), Braid, Dup],
        Builtin::ExoticKnuth => &[KnuthDistinct, ExoticTriple, ExoticQuad],
        Builtin::ShiftedHecke(_) => &[],
    }
}

/// Substring replacement table `lhs → [rhs]`, symmetric by construction.
#[derive(Clone, Debug, Default)]
struct Table {
    map: FxHashMap<Letters, Vec<Letters>>,
    lengths: Vec<usize>,
}

impl Table {
    fn insert_pair(&mut self, v: &[u8], w: &[u8]) {
        if v == w {
            return;
        }
        for (a, b) in [(v, w), (w, v)] {
            let e = self.map.entry(Letters::from_slice(a)).or_default();
            if !e.iter().any(|x| x.as_slice() == b) {
                e.push(Letters::from_slice(b));
            }
        }
        for l in [v.len(), w.len()] {
            if l > 0 && !self.lengths.contains(&l) {
                self.lengths.push(l);
                self.lengths.sort_unstable();
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Rule {
    Moves(&'static [Move]),
    Table(Table),
}

/// Neighbor generator for a presentation restricted to letters `≤ n`.
#[derive(Clone, Debug)]
pub struct Rewriter {
    rules: Vec<Rule>,
}

/// Increasing letter assignments `t` for the sorted letter set `set` with
/// `t_{i+1} - t_i ≥ set_{i+1} - set_i`, `t_1 ≥ 1` and `t_k ≤ n`. With `exact_gaps`,
/// only the down-shifts (gaps preserved, `t_1 ≤ set_1`) are produced.
fn relabelings(set: &[u8], n: u8, exact_gaps: bool) -> Vec<Vec<u8>> {
    fn rec(set: &[u8], n: u8, exact: bool, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let i = cur.len();
        if i == set.len() {
            out.push(cur.clone());
            return;
        }
        let lo = if i == 0 { 1 } else { cur[i - 1] + (set[i] - set[i - 1]) };
        let hi = if exact && i > 0 { lo } else if exact { set[0] } else { n };
        for t in lo..=hi.min(n) {
            cur.push(t);
            rec(set, n, exact, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(set, n, exact_gaps, &mut Vec::new(), &mut out);
    out
}

fn relabel(w: &[u8], set: &[u8], t: &[u8]) -> Letters {
    w.iter().map(|a| t[set.iter().position(|b| b == a).unwrap()]).collect()
}

fn coxeter_table(m: &CoxeterM, n: u8) -> Table {
    let mut t = Table::default();
    for a in 1..=n {
        t.insert_pair(&[a], &[a, a]);
        for b in a + 1..=n {
            if let MValue::Finite(k) = m.get(a, b) {
                let alt = |x: u8, y: u8| (0..k).map(|i| if i % 2 == 0 { x } else { y }).collect::<Vec<u8>>();
                t.insert_pair(&alt(a, b), &alt(b, a));
            }
        }
    }
    t
}

impl Rewriter {
    pub fn new(p: &RelationPresentation, n: u8) -> Result<Self> {
        p.validate()?;
        let mut rules = Vec::new();
        Self::collect(p, n, &mut rules)?;
        Ok(Rewriter { rules })
    }

    fn collect(p: &RelationPresentation, n: u8, rules: &mut Vec<Rule>) -> Result<()> {
        match &p.source {
            GeneratorSource::Builtin(Builtin::ShiftedHecke(k)) => {
                let m = CoxeterM::constant(MValue::Finite(2)).with_band(*k, MValue::Finite(3));
                rules.push(Rule::Table(coxeter_table(&m, n)));
            }
            GeneratorSource::Builtin(b) => rules.push(Rule::Moves(moves_of(*b))),
            GeneratorSource::Coxeter(m) => rules.push(Rule::Table(coxeter_table(m, n))),
            GeneratorSource::Explicit(pairs) => {
                let mut t = Table::default();
                for (v, w) in pairs {
                    if v.letter_mask() != w.letter_mask() {
                        return Err(Error::UnequalLetterSets(v.to_string(), w.to_string()));
                    }
                    if v.is_empty() {
                        continue;
                    }
                    let mut set: Vec<u8> = v.letters().to_vec();
                    set.sort_unstable();
                    set.dedup();
                    for tgt in relabelings(&set, n, !p.uniform) {
                        t.insert_pair(&relabel(v.letters(), &set, &tgt), &relabel(w.letters(), &set, &tgt));
                    }
                }
                rules.push(Rule::Table(t));
            }
            GeneratorSource::Union(parts) => {
                for q in parts {
                    Self::collect(q, n, rules)?;
                }
            }
        }
        Ok(())
    }

    /// Calls `f` on every word obtained from `w` by one rewrite, skipping
    /// results longer than `max_len`. Neighbors may repeat.
    pub fn neighbors<F: FnMut(&[u8])>(&self, w: &[u8], max_len: usize, f: &mut F) {
        let mut buf: Vec<u8> = Vec::with_capacity(max_len + 4);
        for rule in &self.rules {
            match rule {
                Rule::Moves(ms) => {
                    for &mv in ms.iter() {
                        apply_move(mv, w, max_len, &mut buf, f);
                    }
                }
                Rule::Table(t) => {
                    for &k in &t.lengths {
                        if k > w.len() {
                            break;
                        }
                        for i in 0..=w.len() - k {
                            if let Some(rhs) = t.map.get(&w[i..i + k]) {
                                for r in rhs {
                                    if w.len() - k + r.len() > max_len {
                                        continue;
                                    }
                                    buf.clear();
                                    buf.extend_from_slice(&w[..i]);
                                    buf.extend_from_slice(r);
                                    buf.extend_from_slice(&w[i + k..]);
                                    f(&buf);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Convenience wrapper collecting distinct neighbors.
    pub fn neighbor_words(&self, w: &Word, max_len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = Vec::new();
        self.neighbors(w.letters(), max_len, &mut |x| out.push(Word::from_slice(x)));
        out.sort();
        out.dedup();
        out
    }
}

fn emit_swap<F: FnMut(&[u8])>(w: &[u8], i: usize, buf: &mut Vec<u8>, f: &mut F) {
    buf.clear();
    buf.extend_from_slice(w);
    buf.swap(i, i + 1);
    f(buf);
}

fn apply_move<F: FnMut(&[u8])>(mv: Move, w: &[u8], max_len: usize, buf: &mut Vec<u8>, f: &mut F) {
    let n = w.len();
    match mv {
        Move::Dup => {
            for i in 0..n {
                if n < max_len {
                    buf.clear();
                    buf.extend_from_slice(&w[..=i]);
                    buf.extend_from_slice(&w[i..]);
                    f(buf);
                }
                if i + 1 < n && w[i] == w[i + 1] {
                    buf.clear();
                    buf.extend_from_slice(&w[..i]);
                    buf.extend_from_slice(&w[i + 1..]);
                    f(buf);
                }
            }
        }
        Move::Swap(gap) => {
            for i in 0..n.saturating_sub(1) {
                if w[i].abs_diff(w[i + 1]) >= gap {
                    emit_swap(w, i, buf, f);
                }
            }
        }
        Move::KnuthDistinct => {
            for i in 0..n.saturating_sub(2) {
                let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
                if (y < x && x < z) || (z < x && x < y) {
                    emit_swap(w, i + 1, buf, f);
                }
                if (x < z && z < y) || (y < z && z < x) {
                    emit_swap(w, i, buf, f);
                }
            }
        }
        Move::KnuthRepeat => {
            for i in 0..n.saturating_sub(2) {
                let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
                if (x == z && x < y) || (y == z && y < x) {
                    emit_swap(w, i, buf, f);
                }
                if (x == z && x > y) || (x == y && x > z) {
                    emit_swap(w, i + 1, buf, f);
                }
            }
        }
        Move::Braid => {
            for i in 0..n.saturating_sub(2) {
                let (x, y) = (w[i], w[i + 1]);
                if x == w[i + 2] && x != y {
                    buf.clear();
                    buf.extend_from_slice(w);
                    buf[i] = y;
                    buf[i + 1] = x;
                    buf[i + 2] = y;
                    f(buf);
                }
            }
        }
        Move::ExoticTriple => {
            for i in 0..n.saturating_sub(2) {
                let win = [w[i], w[i + 1], w[i + 2]];
                let mut s = win;
                s.sort_unstable();
                if s[0] < s[1] && s[1] == s[2] {
                    let (a, b) = (s[0], s[1]);
                    for t in [[b, b, a], [b, a, b], [a, b, b]] {
                        if t != win {
                            buf.clear();
                            buf.extend_from_slice(w);
                            buf[i..i + 3].copy_from_slice(&t);
                            f(buf);
                        }
                    }
                }
            }
        }
        Move::ExoticQuad => {
            for i in 0..n.saturating_sub(3) {
                let (p, q, r, s) = (w[i], w[i + 1], w[i + 2], w[i + 3]);
                // xyzy -> yzyx
                if q == s && p <= q && q < r {
                    buf.clear();
                    buf.extend_from_slice(w);
                    buf[i..i + 4].copy_from_slice(&[q, r, q, p]);
                    f(buf);
                }
                // yzyx -> xyzy
                if p == r && p < q && s <= p {
                    buf.clear();
                    buf.extend_from_slice(w);
                    buf[i..i + 4].copy_from_slice(&[s, p, q, p]);
                    f(buf);
                }
            }
        }
    }
}

/// True when every rewrite of the rewriter preserves the letter set; used as
/// a sanity check on tables built from explicit generators.
pub fn preserves_letter_sets(r: &Rewriter, words: &[Word], max_len: usize) -> bool {
    words.iter().all(|w| {
        let m = w.letter_mask();
        let mut ok = true;
        r.neighbors(w.letters(), max_len, &mut |x| ok &= letter_mask(x) == m);
        ok
    })
}
