//! Bounded counterexample searches.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;
use wordbialg::character::{scan_packed, Character, PositivityBasis};
use wordbialg::relation::{close, doubling_check, Builtin, ClosureBounds, DoublingReport, RelationPresentation, UniverseKind};

use crate::cache::Cache;
use crate::report::Report;
use crate::spec::ExperimentSpec;

/// The searchable conjectures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// `v ≈ w` under weak K-Knuth iff `v^r v ∼ w^r w` under K-Knuth; open.
    BuchSamuel,
    /// The Hecke analogue of the above; a theorem.
    WeakHecke,
    /// Exotic Knuth classes have symmetric `ψ̃_{>|≤}`-images; open.
    ExoticSym,
    /// Those images are Schur-positive; open.
    ExoticSchurPositive,
}

impl FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "buch-samuel" => Ok(Conjecture::BuchSamuel),
            "weak-hecke" => Ok(Conjecture::WeakHecke),
            "exotic-sym" => Ok(Conjecture::ExoticSym),
            "exotic-schur-positive" => Ok(Conjecture::ExoticSchurPositive),
            _ => Err(format!("unknown conjecture {s:?}; expected buch-samuel, weak-hecke, exotic-sym or exotic-schur-positive")),
        }
    }
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::BuchSamuel => "buch-samuel",
            Conjecture::WeakHecke => "weak-hecke",
            Conjecture::ExoticSym => "exotic-sym",
            Conjecture::ExoticSchurPositive => "exotic-schur-positive",
        }
    }

    /// Whether the statement is proved, so that a witness is a failure.
    pub fn is_theorem(self) -> bool {
        self == Conjecture::WeakHecke
    }

    /// Word or packed length searched when `--max-len` is absent.
    pub fn default_len(self) -> usize {
        match self {
            Conjecture::BuchSamuel | Conjecture::WeakHecke => 4,
            Conjecture::ExoticSym | Conjecture::ExoticSchurPositive => 7,
        }
    }
}

/// Doubling comparison for words of length `word_len` over `[n]`.
pub fn doubling(b: Builtin, n: u8, word_len: usize, headroom: usize, cap: u128) -> anyhow::Result<DoublingReport> {
    let p = RelationPresentation::builtin(b);
    let inst = close(&p, ClosureBounds::alphabet(n, 2 * word_len, headroom).with_cap(cap))?;
    inst.require_stable()?;
    Ok(doubling_check(&inst, word_len)?)
}

/// Exotic Knuth scan results at one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExoticRow {
    pub length: usize,
    pub total_classes: usize,
    pub non_symmetric: Vec<String>,
    pub non_schur_positive: Vec<String>,
    pub non_schur_q_positive: Vec<String>,
    #[serde(skip_serializing, default)]
    pub csv: String,
}

/// Symmetry, Schur and Schur-Q positivity of `ψ̃_c` over the exotic Knuth
/// classes of packed words of length `len`, through the cache.
pub fn exotic_scan(len: usize, c: Character, cache: &Cache) -> anyhow::Result<ExoticRow> {
    let p = RelationPresentation::builtin(Builtin::ExoticKnuth);
    let key = json!({ "command": "exotic-scan", "relation": p.to_json(), "length": len, "character": c.name() });
    if let Some(v) = cache.load(&key) {
        #[derive(Deserialize)]
        struct Stored {
            row: ExoticRow,
            csv: String,
        }
        if let Ok(s) = serde_json::from_value::<Stored>(v) {
            return Ok(ExoticRow { csv: s.csv, ..s.row });
        }
    }
    let r = scan_packed(&p, len, c, &[PositivityBasis::Schur, PositivityBasis::SchurQ])?;
    let failing = |b: PositivityBasis| r.non_positive_by_basis.iter().find(|x| x.0 == b).map(|x| x.1.clone()).unwrap_or_default();
    let row = ExoticRow {
        length: len,
        total_classes: r.total_classes,
        non_symmetric: r.non_symmetric.clone(),
        non_schur_positive: failing(PositivityBasis::Schur),
        non_schur_q_positive: failing(PositivityBasis::SchurQ),
        csv: r.to_csv(),
    };
    cache.store(&key, &json!({ "row": row, "csv": row.csv }))?;
    Ok(row)
}

/// `conjectures`: exhaustive bounded search for counterexamples.
pub fn cmd_conjectures(which: Conjecture, spec: &ExperimentSpec, cache: &Cache, progress: &mut dyn FnMut(&str)) -> anyhow::Result<Report> {
    match which {
        Conjecture::BuchSamuel | Conjecture::WeakHecke => {
            let b = if which == Conjecture::WeakHecke { Builtin::Hecke } else { Builtin::KKnuth };
            let n = spec.alphabet.unwrap_or(3);
            let len = spec.max_len;
            spec.check_universe(UniverseKind::Alphabet(n), 2 * len + spec.headroom + 1)?;
            let r = doubling(b, n, len, spec.headroom, spec.cap)?;
            let found = !r.agrees();
            let status = if found { "counterexample found" } else { "no counterexample" };
            let mut text = format!(
                "{}: words of length ≤ {len} over [{n}], closure length {} (headroom {})\n",
                which.name(),
                r.max_len,
                r.headroom
            );
            writeln!(text, "  {} words, {} weak classes, {} doubled classes", r.words, r.weak_classes, r.doubled_classes).unwrap();
            for (label, f) in [("weak but not doubled", &r.weak_not_doubled), ("doubled but not weak", &r.doubled_not_weak)] {
                write!(text, "  {label}: {} pairs", f.count).unwrap();
                if let Some((v, w)) = &f.witness {
                    write!(text, ", e.g. {v}, {w}").unwrap();
                }
                text.push('\n');
            }
            writeln!(text, "status: {status}").unwrap();
            let json = json!({
                "conjecture": which.name(),
                "theorem": which.is_theorem(),
                "status": status,
                "counterexamples": r.weak_not_doubled.count + r.doubled_not_weak.count,
                "report": r,
            });
            Ok(Report::new(json, text).failing_if(found && which.is_theorem()))
        }
        Conjecture::ExoticSym | Conjecture::ExoticSchurPositive => {
            spec.check_packed_len(spec.max_len)?;
            let c = spec.character;
            let mut rows = Vec::new();
            for len in 1..=spec.max_len {
                let row = exotic_scan(len, c, cache)?;
                progress(&format!(
                    "ℓ = {len}: {} classes, {} not symmetric, {} not Schur-positive, {} not Schur-Q-positive",
                    row.total_classes,
                    row.non_symmetric.len(),
                    row.non_schur_positive.len(),
                    row.non_schur_q_positive.len()
                ));
                rows.push(row);
            }
            let bad: Vec<&String> = rows
                .iter()
                .flat_map(|r| if which == Conjecture::ExoticSym { &r.non_symmetric } else { &r.non_schur_positive })
                .collect();
            let status = if bad.is_empty() { "no counterexample" } else { "counterexample found" };
            let mut text = format!("{}: exotic Knuth classes of packed words, ψ_{}, lengths 1..={}\n", which.name(), c.symbol(), spec.max_len);
            writeln!(text, "  length  classes  non-sym  non-s+  non-Q+").unwrap();
            for r in &rows {
                writeln!(
                    text,
                    "  {:>6}  {:>7}  {:>7}  {:>6}  {:>6}",
                    r.length,
                    r.total_classes,
                    r.non_symmetric.len(),
                    r.non_schur_positive.len(),
                    r.non_schur_q_positive.len()
                )
                .unwrap();
            }
            writeln!(text, "status: {status}").unwrap();
            let mut csv = String::from("class_repr,class_size,degree,symmetric,schur_positive,schurQ_positive\n");
            for r in &rows {
                csv.extend(r.csv.lines().skip(1).map(|l| format!("{l}\n")));
            }
            let json = json!({
                "conjecture": which.name(),
                "theorem": false,
                "character": c.name(),
                "status": status,
                "counterexamples": bad,
                "lengths": rows,
            });
            Ok(Report::new(json, text).with_csv(csv))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_hecke_small() {
        let spec = ExperimentSpec::new("conjectures").alphabet(2).max_len(3).headroom(1);
        let r = cmd_conjectures(Conjecture::WeakHecke, &spec, &Cache::default(), &mut |_| ()).unwrap();
        assert_eq!(r.json["counterexamples"], 0);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn exotic_small() {
        let spec = ExperimentSpec::new("conjectures").max_len(5).character(Character::PEAK);
        let r = cmd_conjectures(Conjecture::ExoticSchurPositive, &spec, &Cache::default(), &mut |_| ()).unwrap();
        assert_eq!(r.json["status"], "no counterexample");
        let totals: Vec<u64> = r.json["lengths"].as_array().unwrap().iter().map(|x| x["total_classes"].as_u64().unwrap()).collect();
        assert_eq!(totals, vec![1, 3, 9, 31, 110]);
        assert_eq!(r.csv.unwrap().lines().count(), 1 + 154);
    }

    #[test]
    fn names_round_trip() {
        for c in [Conjecture::BuchSamuel, Conjecture::WeakHecke, Conjecture::ExoticSym, Conjecture::ExoticSchurPositive] {
            assert_eq!(c.name().parse::<Conjecture>().unwrap(), c);
        }
    }
}
