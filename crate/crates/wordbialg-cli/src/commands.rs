//! The `classes`, `check` and `psi` commands.

use std::fmt::{Display, Write as _};

use anyhow::{bail, Context};
use serde::Serialize;
use serde_json::{json, Value};
use wordbialg::character::psi_members;
use wordbialg::combinat::Word;
use wordbialg::linear::LinComb;
use wordbialg::qsym::{schur_positive, schur_q_positive, to_monomial_sym, to_peak, QSym};
use wordbialg::relation::{
    check_algebraic, check_p_algebraic, check_uniformly_algebraic, close, packed_slice_map, ClosureBounds,
    FiniteTypeCertificate, PropertyReport, RelationPresentation, UniverseKind, Verdict,
};
use wordbialg::{Coeff, Q};

use crate::cache::Cache;
use crate::report::Report;
use crate::spec::ExperimentSpec;

fn show(w: &Word) -> String {
    if w.is_empty() {
        "∅".into()
    } else {
        w.to_string()
    }
}

/// `c·tag key + …`, or `0`.
pub fn show_expansion<K: Display + Ord + Clone, S: Coeff>(tag: &str, x: &LinComb<K, S>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter().map(|(k, c)| format!("{c}·{tag}{k}")).collect::<Vec<_>>().join(" + ")
}

/// Classes of packed words of one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthClasses {
    pub length: usize,
    pub classes: usize,
    pub packed_words: usize,
    pub representatives: Vec<String>,
    pub sizes: Vec<usize>,
}

/// Packed-word classes of length `len`, through the cache.
pub fn packed_length_classes(p: &RelationPresentation, len: usize, cache: &Cache) -> anyhow::Result<LengthClasses> {
    let key = json!({ "command": "classes", "relation": p.to_json(), "length": len });
    if let Some(v) = cache.load(&key) {
        if let Ok(row) = serde_json::from_value::<CachedRow>(v) {
            return Ok(row.into_classes(len));
        }
    }
    let rows = packed_slice_map(p, len, |members| members.len())?;
    let out = LengthClasses {
        length: len,
        classes: rows.len(),
        packed_words: rows.iter().map(|r| r.1).sum(),
        representatives: rows.iter().map(|r| show(&r.0)).collect(),
        sizes: rows.iter().map(|r| r.1).collect(),
    };
    cache.store(&key, &json!({ "representatives": out.representatives, "sizes": out.sizes }))?;
    Ok(out)
}

#[derive(serde::Deserialize)]
struct CachedRow {
    representatives: Vec<String>,
    sizes: Vec<usize>,
}

impl CachedRow {
    fn into_classes(self, length: usize) -> LengthClasses {
        LengthClasses {
            length,
            classes: self.representatives.len(),
            packed_words: self.sizes.iter().sum(),
            representatives: self.representatives,
            sizes: self.sizes,
        }
    }
}

/// `classes`: class counts `d_n` of packed words per length, or the classes
/// of a bounded closure when an alphabet is given. Each finished length is
/// passed to `progress` as soon as it is known.
pub fn cmd_classes(spec: &ExperimentSpec, cache: &Cache, progress: &mut dyn FnMut(&str)) -> anyhow::Result<Report> {
    let p = spec.presentation("knuth")?;
    if let Some(n) = spec.alphabet {
        return closure_classes(spec, &p, n);
    }
    if !p.is_homogeneous() {
        bail!("{} is inhomogeneous; packed-word counts need a homogeneous relation, pass --alphabet for a bounded closure", p.name);
    }
    spec.check_packed_len(spec.max_len)?;
    let mut rows = Vec::new();
    for len in 0..=spec.max_len {
        let row = packed_length_classes(&p, len, cache)?;
        progress(&format!("d_{len} = {} ({} packed words)", row.classes, row.packed_words));
        rows.push(row);
    }
    let counts: Vec<usize> = rows.iter().map(|r| r.classes).collect();
    let mut text = format!("relation {}: packed-word classes for lengths 0..={}\n", p.name, spec.max_len);
    for r in &rows {
        writeln!(text, "  n = {}: {} classes, {} packed words", r.length, r.classes, r.packed_words).unwrap();
    }
    writeln!(text, "d = {}", counts.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")).unwrap();
    let mut csv = String::from("length,class_repr,class_size\n");
    for r in &rows {
        for (rep, size) in r.representatives.iter().zip(&r.sizes) {
            writeln!(csv, "{},{rep},{size}", r.length).unwrap();
        }
    }
    let json = json!({
        "relation": p.name,
        "mode": "packed",
        "max_len": spec.max_len,
        "counts": counts,
        "lengths": rows,
    });
    Ok(Report::new(json, text).with_csv(csv))
}

fn closure_classes(spec: &ExperimentSpec, p: &RelationPresentation, n: u8) -> anyhow::Result<Report> {
    spec.check_universe(UniverseKind::Alphabet(n), spec.max_len + spec.headroom)?;
    let bounds = ClosureBounds::alphabet(n, spec.max_len, spec.headroom).with_cap(spec.cap);
    let inst = close(p, bounds)?;
    let stable = inst.headroom_stability()?;
    let mut by_len = vec![0usize; spec.max_len + 1];
    for c in inst.classes() {
        by_len[c.rep.len()] += 1;
    }
    let classes: Vec<Value> =
        inst.classes().iter().map(|c| json!({ "rep": show(&c.rep), "size": c.members.len() })).collect();
    let mut text = format!(
        "relation {} over [{n}], words of length ≤ {} (headroom {}): {} classes, headroom-stable: {stable}\n",
        p.name,
        spec.max_len,
        spec.headroom,
        inst.num_classes()
    );
    for (l, k) in by_len.iter().enumerate() {
        writeln!(text, "  representatives of length {l}: {k}").unwrap();
    }
    let mut csv = String::from("class_repr,class_size\n");
    for c in inst.classes() {
        writeln!(csv, "{},{}", show(&c.rep), c.members.len()).unwrap();
    }
    let json = json!({
        "relation": p.name,
        "mode": "closure",
        "alphabet": n,
        "max_len": spec.max_len,
        "headroom": spec.headroom,
        "headroom_stable": stable,
        "escaped": inst.escaped(),
        "counts_by_rep_length": by_len,
        "classes": classes,
    });
    Ok(Report::new(json, text).with_csv(csv))
}

/// Verdicts of every relation-engine checker on one bounded closure.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub relation: String,
    pub alphabet: u8,
    pub max_len: usize,
    pub headroom: usize,
    pub headroom_stable: bool,
    pub homogeneous: bool,
    pub algebraic: PropertyReport,
    pub uniformly_algebraic: PropertyReport,
    pub p_algebraic: PropertyReport,
    pub finite_type: FiniteTypeCertificate,
}

impl Classification {
    /// `(homogeneous, algebraic, uniformly algebraic, P-algebraic, finite type)`.
    pub fn flags(&self) -> [bool; 5] {
        [
            self.homogeneous,
            self.algebraic.verdict == Verdict::Pass,
            self.uniformly_algebraic.verdict == Verdict::Pass,
            self.p_algebraic.verdict == Verdict::Pass,
            self.finite_type.stable,
        ]
    }
}

pub fn classify(p: &RelationPresentation, n: u8, max_len: usize, headroom: usize, cap: u128) -> anyhow::Result<Classification> {
    let inst = close(p, ClosureBounds::alphabet(n, max_len, headroom).with_cap(cap))?;
    Ok(Classification {
        relation: p.name.clone(),
        alphabet: n,
        max_len,
        headroom,
        headroom_stable: inst.headroom_stability()?,
        homogeneous: inst.is_homogeneous(),
        algebraic: check_algebraic(&inst)?,
        uniformly_algebraic: check_uniformly_algebraic(&inst)?,
        p_algebraic: check_p_algebraic(&inst, None)?,
        finite_type: inst.finite_type_certificate()?,
    })
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

/// `check`: classification verdicts with bounds and witnesses.
pub fn cmd_check(spec: &ExperimentSpec) -> anyhow::Result<Report> {
    let p = spec.presentation("knuth")?;
    let n = spec.alphabet.unwrap_or(3);
    spec.check_universe(UniverseKind::Alphabet(n), spec.max_len + spec.headroom + 1)?;
    let c = classify(&p, n, spec.max_len, spec.headroom, spec.cap)?;
    let mut text = format!("relation {} over [{n}], L = {}, headroom {}\n", c.relation, c.max_len, c.headroom);
    writeln!(text, "  headroom-stable      {}", mark(c.headroom_stable)).unwrap();
    writeln!(text, "  homogeneous          {}", mark(c.homogeneous)).unwrap();
    for r in [&c.algebraic, &c.uniformly_algebraic, &c.p_algebraic] {
        write!(text, "  {:<20} {}", r.property, r.verdict.symbol()).unwrap();
        if let Some(w) = r.witness() {
            write!(text, "  witness: {w}").unwrap();
        }
        text.push('\n');
    }
    let f = &c.finite_type;
    writeln!(
        text,
        "  finite type          {}  ({} classes meet length ≤ {}, {} meet length ≤ {})",
        mark(f.stable),
        f.classes_at_l,
        f.max_len,
        f.classes_at_l_plus_1,
        f.max_len + 1
    )
    .unwrap();
    Ok(Report::new(serde_json::to_value(&c)?, text))
}

/// `ψ`-image of a word or of its class, in every applicable basis.
#[derive(Clone, Debug, Serialize)]
pub struct Image {
    pub character: String,
    pub degree: usize,
    pub members: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub headroom_stable: Option<bool>,
    pub monomial: QSym<Q>,
    pub fundamental: LinComb<wordbialg::combinat::Composition, Q>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peak: Option<LinComb<wordbialg::combinat::Composition, Q>>,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sym: Option<SymData>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymData {
    pub m: Value,
    pub s: Value,
    pub schur_positive: bool,
    /// Absent when the image is outside the span of the `Q_λ`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur_q: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur_q_positive: Option<bool>,
}

/// Builds the image data of `ψ(Σ members)` truncated at `degree`.
pub fn image_of(spec: &ExperimentSpec, members: &[Word], degree: usize, stable: Option<bool>) -> anyhow::Result<(Image, String)> {
    let f: QSym<Q> = psi_members(spec.character, members, degree);
    let fundamental = f.to_fundamental();
    let peak = to_peak(&f).ok();
    let symmetric = f.is_symmetric();
    let mut text = format!("ψ_{} over {} word(s), degree ≤ {degree}\n", spec.character.symbol(), members.len());
    if let Some(s) = stable {
        writeln!(text, "  headroom-stable: {s}").unwrap();
    }
    writeln!(text, "  M: {f}").unwrap();
    writeln!(text, "  L: {}", show_expansion("L", &fundamental)).unwrap();
    if let Some(k) = &peak {
        writeln!(text, "  K: {}", show_expansion("K", k)).unwrap();
    }
    writeln!(text, "  symmetric: {symmetric}").unwrap();
    let sym = if symmetric {
        let m = to_monomial_sym(&f)?;
        let (s, cert) = schur_positive(&f)?;
        let q = schur_q_positive(&f).ok();
        writeln!(text, "  m: {m}").unwrap();
        writeln!(text, "  s: {s}  (Schur-positive: {})", cert.positive).unwrap();
        match &q {
            Some((e, c)) => writeln!(text, "  Q: {e}  (Q-positive: {})", c.positive).unwrap(),
            None => writeln!(text, "  Q: not in the span of the Schur Q-functions").unwrap(),
        }
        Some(SymData {
            m: serde_json::to_value(&m)?,
            s: serde_json::to_value(&s)?,
            schur_positive: cert.positive,
            schur_q: q.as_ref().map(|(e, _)| serde_json::to_value(e)).transpose()?,
            schur_q_positive: q.map(|(_, c)| c.positive),
        })
    } else {
        None
    };
    let image = Image {
        character: spec.character.name(),
        degree,
        members: members.len(),
        headroom_stable: stable,
        monomial: f,
        fundamental,
        peak,
        symmetric,
        sym,
    };
    Ok((image, text))
}

/// `psi`: the image of a word, or of its class under `--relation`.
pub fn cmd_psi(spec: &ExperimentSpec, word: &str) -> anyhow::Result<Report> {
    let w: Word = word.parse().with_context(|| format!("bad word {word:?}"))?;
    let Some(rel) = &spec.relation else {
        let degree = spec.degree.unwrap_or(w.len());
        let (img, text) = image_of(spec, std::slice::from_ref(&w), degree, None)?;
        let json = json!({ "word": show(&w), "image": img });
        return Ok(Report::new(json, format!("word {}\n{text}", show(&w))));
    };
    let p = RelationPresentation::resolve(rel)?;
    let n = spec.alphabet.unwrap_or(w.max_letter().max(1));
    if w.max_letter() > n {
        bail!("word {w} uses letters beyond the alphabet [{n}]");
    }
    let max_len = spec.max_len.max(w.len());
    let degree = spec.degree.unwrap_or(max_len);
    if degree > max_len {
        bail!("degree {degree} exceeds the closure length bound {max_len}");
    }
    spec.check_universe(UniverseKind::Alphabet(n), max_len + spec.headroom + 1)?;
    let inst = close(&p, ClosureBounds::alphabet(n, max_len, spec.headroom).with_cap(spec.cap))?;
    let stable = inst.headroom_stability()?;
    let class = inst.class_of(&w)?;
    let (img, text) = image_of(spec, &class.members, degree, Some(stable))?;
    let json = json!({
        "word": show(&w),
        "relation": p.name,
        "alphabet": n,
        "max_len": max_len,
        "headroom": spec.headroom,
        "class_rep": show(&class.rep),
        "image": img,
    });
    let head = format!("{} class of {} over [{n}] (rep {}, {} members of length ≤ {max_len})\n", p.name, show(&w), show(&class.rep), class.members.len());
    Ok(Report::new(json, head + &text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Format;
    use wordbialg::character::Character;

    #[test]
    fn exotic_counts_small() {
        let spec = ExperimentSpec::new("classes").relation("exotic-knuth").max_len(5);
        let mut lines = Vec::new();
        let r = cmd_classes(&spec, &Cache::default(), &mut |s| lines.push(s.to_string())).unwrap();
        assert_eq!(r.json["counts"], json!([1, 1, 3, 9, 31, 110]));
        assert_eq!(lines.len(), 6);
        assert!(r.render(Format::Csv).starts_with("length,class_repr,class_size\n0,∅,1\n"));
    }

    #[test]
    fn packed_mode_needs_homogeneity() {
        let spec = ExperimentSpec::new("classes").relation("hecke").max_len(3);
        assert!(cmd_classes(&spec, &Cache::default(), &mut |_| ()).is_err());
        let r = cmd_classes(&spec.alphabet(2), &Cache::default(), &mut |_| ()).unwrap();
        // 1, 2, 12, 21, 121 and ∅
        assert_eq!(r.json["classes"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn packed_length_cap() {
        let spec = ExperimentSpec::new("classes").relation("knuth").max_len(8);
        let err = cmd_classes(&spec, &Cache::default(), &mut |_| ()).unwrap_err();
        assert_eq!(crate::exit_code(&err), crate::EXIT_CAP);
    }

    #[test]
    fn psi_of_a_word() {
        let r = cmd_psi(&ExperimentSpec::new("psi"), "312").unwrap();
        let l = &r.json["image"]["fundamental"];
        assert_eq!(l, &json!([{"key": "(1,2)", "coeff": "1"}]));
    }

    #[test]
    fn psi_of_a_knuth_class() {
        let spec = ExperimentSpec::new("psi").relation("knuth").max_len(4);
        let r = cmd_psi(&spec, "2211").unwrap();
        let s = &r.json["image"]["sym"]["s"]["terms"];
        assert_eq!(s, &json!([{"part": [2, 2], "coeff": "1"}]));
        assert_eq!(r.json["image"]["sym"]["schur_positive"], true);
    }

    #[test]
    fn psi_peak_character_has_q_expansion() {
        let spec = ExperimentSpec::new("psi").relation("commutation").max_len(3).character(Character::PEAK);
        let r = cmd_psi(&spec, "111").unwrap();
        assert_eq!(r.json["image"]["sym"]["schur_q"]["terms"], json!([{"part": [3], "coeff": "1"}]));
    }

    #[test]
    fn check_shifted_hecke() {
        let spec = ExperimentSpec::new("check").relation("shifted-hecke").alphabet(3).max_len(4);
        let r = cmd_check(&spec).unwrap();
        assert_eq!(r.json["p_algebraic"]["verdict"], "fail");
        assert_eq!(r.json["algebraic"]["verdict"], "pass");
        assert!(r.text.contains("class of 13"));
    }
}
