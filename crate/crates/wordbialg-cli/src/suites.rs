//! Verification suites at CI bounds.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use wordbialg::bialgebra::{duality_pairing_check, shuffle, verify_bialgebra_axioms, AxiomResult, Bounds, PackedBialgebra, WordBialgebra};
use wordbialg::character::{judge, psi_members, psi_word, scan_packed, tableau_j_sum, tableau_k_tilde_sum, word_table_identities, Character, PositivityBasis};
use wordbialg::combinat::{eval_hecke_word, packed_words, rsk_insertion_tableau, w, Composition, Partition, Word};
use wordbialg::linear::LinComb;
use wordbialg::qsym::{multi_fundamental, to_monomial_sym, QSym};
use wordbialg::relation::{bfs_class, close, Builtin, ClosureBounds, RelationInstance, RelationPresentation};

use crate::report::Report;

/// The registered suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    Duality,
    Oracles,
    PaperIdentities,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "duality" => Ok(Suite::Duality),
            "oracles" => Ok(Suite::Oracles),
            "paper-identities" => Ok(Suite::PaperIdentities),
            _ => Err(format!("unknown suite {s:?}; expected axioms, duality, oracles or paper-identities")),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Duality => "duality",
            Suite::Oracles => "oracles",
            Suite::PaperIdentities => "paper-identities",
        }
    }
}

/// One named check of a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    /// Number of cases compared.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl SuiteCheck {
    fn new(name: &str, checked: usize, witness: Option<String>) -> Self {
        SuiteCheck { name: name.into(), passed: witness.is_none(), checked, witness }
    }

    fn from_axioms(prefix: &str, rs: Vec<AxiomResult>) -> Vec<SuiteCheck> {
        rs.into_iter()
            .map(|r| SuiteCheck { name: format!("{prefix}: {}", r.axiom), passed: r.passed(), checked: r.checked, witness: r.witness })
            .collect()
    }
}

/// Bounds of the axiom and duality suites.
pub const AXIOM_BOUNDS: Bounds = Bounds { degree: 5, anchor: Some(3) };

/// (Co)associativity, (co)unit and compatibility on `W` and `W_P`.
pub fn axioms() -> Vec<SuiteCheck> {
    let mut out = SuiteCheck::from_axioms("W", verify_bialgebra_axioms::<i64, _>(&WordBialgebra, AXIOM_BOUNDS));
    out.extend(SuiteCheck::from_axioms("W_P", verify_bialgebra_axioms::<i64, _>(&PackedBialgebra, Bounds { degree: 5, anchor: None })));
    out
}

/// The pairing of `W` with its dual structure maps.
pub fn duality() -> Vec<SuiteCheck> {
    SuiteCheck::from_axioms("duality", duality_pairing_check::<i64>(AXIOM_BOUNDS))
}

/// Compares two partitions of `words`: one by closure class, one by `key`.
/// The partitions agree when each class id meets one key and vice versa.
fn same_partition<K: Eq + Hash + std::fmt::Debug>(inst: &RelationInstance, words: &[Word], key: impl Fn(&Word) -> K + Sync) -> Option<String>
where
    K: Send,
{
    let keyed: Vec<(u32, K)> = words.par_iter().map(|v| (inst.class_id(v.letters()).expect("word in slice"), key(v))).collect();
    let mut key_of_class: HashMap<u32, (usize, &K)> = HashMap::new();
    let mut class_of_key: HashMap<&K, (usize, u32)> = HashMap::new();
    for (i, (c, k)) in keyed.iter().enumerate() {
        let (j, k0) = *key_of_class.entry(*c).or_insert((i, k));
        if k0 != k {
            return Some(format!("{} ∼ {} but their keys differ: {k0:?} vs {k:?}", words[j], words[i]));
        }
        let (j, c0) = *class_of_key.entry(k).or_insert((i, *c));
        if c0 != *c {
            return Some(format!("{} and {} share the key {k:?} but are not related", words[j], words[i]));
        }
    }
    None
}

/// Knuth closure classes against RSK insertion-tableau fibres for all words
/// of length `≤ len` over `[n]`.
pub fn knuth_vs_rsk(n: u8, len: usize) -> anyhow::Result<SuiteCheck> {
    let inst = close(&RelationPresentation::builtin(Builtin::Knuth), ClosureBounds::alphabet(n, len, 0))?;
    let words: Vec<Word> = inst.classes().iter().flat_map(|c| c.members.iter().cloned()).collect();
    let wit = same_partition(&inst, &words, |v| (v.len(), rsk_insertion_tableau(v)));
    Ok(SuiteCheck::new(&format!("knuth = rsk fibres, [{n}], ℓ ≤ {len}"), words.len(), wit))
}

/// Hecke closure classes against Demazure-product fibres for all words of
/// length `≤ len` over `[n]`.
pub fn hecke_vs_demazure(n: u8, len: usize, headroom: usize) -> anyhow::Result<SuiteCheck> {
    let inst = close(&RelationPresentation::builtin(Builtin::Hecke), ClosureBounds::alphabet(n, len, headroom))?;
    let words: Vec<Word> = inst.classes().iter().flat_map(|c| c.members.iter().cloned()).collect();
    let wit = same_partition(&inst, &words, |v| eval_hecke_word(v, n as usize).expect("letters within the alphabet"));
    Ok(SuiteCheck::new(&format!("hecke = demazure fibres, [{n}], ℓ ≤ {len}"), words.len(), wit))
}

/// RSK against Knuth for `S_n`, `n ≤ 6`, and words over `[3]` of length
/// `≤ 7`; Demazure against Hecke over `[n]`, `n ≤ 3`, length `≤ 8`.
pub fn oracles() -> anyhow::Result<Vec<SuiteCheck>> {
    let mut out = Vec::new();
    for n in 1..=6u8 {
        out.push(knuth_vs_rsk(n, n as usize)?);
    }
    out.push(knuth_vs_rsk(3, 7)?);
    for n in 1..=3u8 {
        out.push(hecke_vs_demazure(n, 8, 1)?);
    }
    Ok(out)
}

/// `ψ_≤(H_n) = h_n` and `ψ_{>|≤}(H_n) = q_n` for `n ≤ max_n`, read in the
/// `m`-basis against `[m_λ] h_n = 1` and `[m_λ] q_n = 2^{ℓ(λ)}`.
pub fn nsym_generators(max_n: usize) -> SuiteCheck {
    let mut checked = 0;
    for n in 0..=max_n {
        let ones = Word::from_slice(&vec![1; n]);
        for (c, weight) in [(Character::LE, 1i64), (Character::PEAK, 2)] {
            let f: QSym<i64> = psi_word(c, ones.letters(), n);
            let m = match to_monomial_sym(&f) {
                Ok(m) => m,
                Err(e) => return SuiteCheck::new("H_n ↦ h_n, q_n", checked, Some(format!("ψ_{}(H_{n}): {e}", c.symbol()))),
            };
            let expect: LinComb<Partition, i64> =
                Partition::all_of(n).into_iter().map(|l| (l.clone(), weight.pow(l.len() as u32))).collect();
            checked += 1;
            if m.terms != expect {
                return SuiteCheck::new("H_n ↦ h_n, q_n", checked, Some(format!("ψ_{}(H_{n}) = {m}", c.symbol())));
            }
        }
    }
    SuiteCheck::new(&format!("H_n ↦ h_n, q_n, n ≤ {max_n}"), checked, None)
}

/// Seeded pseudorandom words with letters in `[max_letter]` and length `≤ max_len`.
pub fn random_words(count: usize, max_letter: u8, max_len: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            Word::from_slice(&(0..len).map(|_| rng.gen_range(1..=max_letter)).collect::<Vec<_>>())
        })
        .collect()
}

/// The fundamental and peak tables on seeded random words.
pub fn tables(count: usize, seed: u64) -> anyhow::Result<SuiteCheck> {
    let words = random_words(count, 6, 9, seed);
    let mut checked = 0;
    for x in &words {
        for t in word_table_identities(x)? {
            checked += 1;
            if !t.holds {
                return Ok(SuiteCheck::new("fundamental and peak tables", checked, Some(format!("{} fails on {x}", t.name))));
            }
        }
    }
    Ok(SuiteCheck::new(&format!("fundamental and peak tables, {count} words, seed {seed}"), checked, None))
}

/// `12 ⧢ 21 = 2·1221 + 1212 + 2121 + 2·2112`.
pub fn shuffle_identity() -> SuiteCheck {
    let got: LinComb<Word, i64> = shuffle(&w("12"), &w("21"));
    let expect: LinComb<Word, i64> = [(w("1221"), 2), (w("1212"), 1), (w("2121"), 1), (w("2112"), 2)].into_iter().collect();
    let wit = (got != expect).then(|| format!("12 ⧢ 21 = {got:?}"));
    SuiteCheck::new("12 ⧢ 21", 1, wit)
}

/// Multi-permutations: packed words without equal adjacent letters.
pub fn multi_permutations(max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(packed_words).filter(|w| w.has_no_repeats()).collect()
}

/// `ψ̃_<` of K-equivalence classes of multi-permutations is `L̃_α`, and the
/// `ψ̃_≤`-image is its geometric substitution; likewise `ψ̃_>`, `ψ̃_≥` on reversals.
pub fn multi_fundamentals(max_len: usize, degree: usize) -> anyhow::Result<SuiteCheck> {
    let p = RelationPresentation::builtin(Builtin::KEquivalence);
    let words = multi_permutations(max_len);
    let fails: Vec<String> = words
        .par_iter()
        .filter_map(|x| {
            let n = x.max_letter();
            let class = bfs_class(&p, n, x, degree).ok()?;
            let rclass = bfs_class(&p, n, &x.reversed(), degree).ok()?;
            let alpha = Composition::from_descent_set(x.len(), &x.descents());
            let lt: QSym<i64> = multi_fundamental(&alpha, degree).ok()?;
            let lr: QSym<i64> = multi_fundamental(&alpha.reverse(), degree).ok()?;
            let ok = psi_members::<i64>(Character::LT, &class, degree) == lt
                && psi_members::<i64>(Character::LE, &class, degree) == lt.substitute_geometric().0
                && psi_members::<i64>(Character::GT, &rclass, degree) == lr
                && psi_members::<i64>(Character::GE, &rclass, degree) == lr.substitute_geometric().0;
            (!ok).then(|| x.to_string())
        })
        .collect();
    let wit = fails.first().map(|x| format!("class of {x}"));
    Ok(SuiteCheck::new(&format!("multi-fundamentals, ℓ ≤ {max_len}, degree ≤ {degree}"), words.len(), wit))
}

/// Knuth classes of packed words of length `≤ max_len` have symmetric,
/// Schur-positive `ψ_≤`- and `ψ_>`-images.
pub fn knuth_schur_positive(max_len: usize) -> anyhow::Result<SuiteCheck> {
    let p = RelationPresentation::builtin(Builtin::Knuth);
    let mut checked = 0;
    for len in 0..=max_len {
        for c in [Character::LE, Character::GT] {
            let r = scan_packed(&p, len, c, &[PositivityBasis::Schur])?;
            checked += r.total_classes;
            if let Some(x) = r.non_symmetric.first().or(r.non_positive.first()) {
                return Ok(SuiteCheck::new("knuth ⇒ schur", checked, Some(format!("ψ_{} of the class of {x}", c.symbol()))));
            }
        }
    }
    Ok(SuiteCheck::new(&format!("knuth ⇒ schur-positive, ℓ ≤ {max_len}"), checked, None))
}

/// K-Knuth classes meeting packed words of length `≤ max_len`: symmetric and
/// Schur-positive `ψ̃_≤` equal to the `J`-sum over the increasing tableaux in
/// the class, and `ψ̃_>` equal to the `K̃`-sum.
pub fn k_knuth_tableau_sums(max_len: usize) -> anyhow::Result<SuiteCheck> {
    let p = RelationPresentation::builtin(Builtin::KKnuth);
    let mut checked = 0;
    for m in 1..=max_len as u8 {
        let inst = close(&p, ClosureBounds::letter_set(m, max_len, 1))?;
        if !inst.headroom_stability()? {
            return Ok(SuiteCheck::new("k-knuth tableau sums", checked, Some(format!("letter set [{m}] is not headroom-stable"))));
        }
        let fails: Vec<String> = inst
            .classes()
            .par_iter()
            .filter_map(|cl| {
                let f: QSym<i64> = psi_members(Character::LE, &cl.members, max_len);
                let g: QSym<i64> = psi_members(Character::GT, &cl.members, max_len);
                let (sym, pos, _) = judge(&f, &[PositivityBasis::Schur]);
                let (gsym, gpos, _) = judge(&g, &[PositivityBasis::Schur]);
                let ok = sym
                    && gsym
                    && pos == Some(true)
                    && gpos == Some(true)
                    && f == tableau_j_sum(&cl.members, max_len)
                    && g == tableau_k_tilde_sum(&cl.members, max_len);
                (!ok).then(|| cl.rep.to_string())
            })
            .collect();
        checked += inst.num_classes();
        if let Some(x) = fails.first() {
            return Ok(SuiteCheck::new("k-knuth tableau sums", checked, Some(format!("class of {x} over [{m}]"))));
        }
    }
    Ok(SuiteCheck::new(&format!("k-knuth ⇒ Σ J_λ, schur-positive, ℓ ≤ {max_len}"), checked, None))
}

/// The identities suite.
pub fn paper_identities(seed: u64) -> anyhow::Result<Vec<SuiteCheck>> {
    Ok(vec![
        shuffle_identity(),
        nsym_generators(8),
        tables(500, seed)?,
        multi_fundamentals(5, 8)?,
        knuth_schur_positive(6)?,
        k_knuth_tableau_sums(6)?,
    ])
}

pub fn run(suite: Suite, seed: u64) -> anyhow::Result<Vec<SuiteCheck>> {
    match suite {
        Suite::Axioms => Ok(axioms()),
        Suite::Duality => Ok(duality()),
        Suite::Oracles => oracles(),
        Suite::PaperIdentities => paper_identities(seed),
    }
}

/// `verify`: pass/fail summary, failing when any check fails.
pub fn cmd_verify(suite: Suite, seed: u64) -> anyhow::Result<Report> {
    let checks = run(suite, seed)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = format!("suite {}\n", suite.name());
    for c in &checks {
        write!(text, "  {} {} ({} cases)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.checked).unwrap();
        if let Some(wit) = &c.witness {
            write!(text, "  witness: {wit}").unwrap();
        }
        text.push('\n');
    }
    writeln!(text, "{} passed, {failed} failed", checks.len() - failed).unwrap();
    let json = json!({ "suite": suite.name(), "passed": failed == 0, "checks": checks });
    Ok(Report::new(json, text).failing_if(failed > 0))
}
