//! Presentations of word relations by generators.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::combinat::Word;
use crate::error::{Error, Result};

/// The built-in relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Builtin {
    /// `ab ∼ ba`.
    Commutation,
    /// `a ∼ aa`.
    KEquivalence,
    /// Commutation together with `a ∼ aa`.
    KCommutation,
    /// `bac ∼ bca`, `acb ∼ cab`, `aba ∼ baa`, `bab ∼ bba`.
    Knuth,
    /// `bac ∼ bca`, `acb ∼ cab`, `aba ∼ bab`, `a ∼ aa`.
    KKnuth,
    /// `ac ∼ ca` for `c ≥ a + 2`, `aba ∼ bab`, `a ∼ aa`.
    Hecke,
    /// The Coxeter relation with `m(i, i+n) = 3` and `m = 2` otherwise.
    ShiftedHecke(u8),
    /// `bac ∼ bca`, `acb ∼ cab`, `bba ∼ bab ∼ abb`, `xyzy ∼ yzyx` for `x ≤ y < z`.
    ExoticKnuth,
}

impl Builtin {
    /// The eight built-ins, with the shifted Hecke relation at `n = 2`.
    pub fn all() -> [Builtin; 8] {
        use Builtin::*;
        [Commutation, KEquivalence, KCommutation, Knuth, KKnuth, Hecke, ShiftedHecke(2), ExoticKnuth]
    }

    pub fn name(&self) -> String {
        match self {
            Builtin::Commutation => "commutation".into(),
            Builtin::KEquivalence => "k-equivalence".into(),
            Builtin::KCommutation => "k-commutation".into(),
            Builtin::Knuth => "knuth".into(),
            Builtin::KKnuth => "k-knuth".into(),
            Builtin::Hecke => "hecke".into(),
            Builtin::ShiftedHecke(2) => "shifted-hecke".into(),
            Builtin::ShiftedHecke(n) => format!("shifted-hecke:{n}"),
            Builtin::ExoticKnuth => "exotic-knuth".into(),
        }
    }

    /// Parses names such as `knuth`, `k-knuth` or `shifted-hecke:3`.
    pub fn parse(s: &str) -> Option<Builtin> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        Some(match s.as_str() {
            "commutation" => Builtin::Commutation,
            "k-equivalence" | "kequivalence" => Builtin::KEquivalence,
            "k-commutation" | "kcommutation" => Builtin::KCommutation,
            "knuth" => Builtin::Knuth,
            "k-knuth" | "kknuth" => Builtin::KKnuth,
            "hecke" => Builtin::Hecke,
            "shifted-hecke" => Builtin::ShiftedHecke(2),
            "exotic-knuth" | "exotic" => Builtin::ExoticKnuth,
            _ => {
                let n = s.strip_prefix("shifted-hecke:")?.parse::<u8>().ok()?;
                if n < 2 {
                    return None;
                }
                Builtin::ShiftedHecke(n)
            }
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self, Builtin::Commutation | Builtin::Knuth | Builtin::ExoticKnuth)
    }
}

/// An entry of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MValue {
    Finite(u32),
    Infinite,
}

impl MValue {
    pub fn le(self, other: MValue) -> bool {
        match (self, other) {
            (_, MValue::Infinite) => true,
            (MValue::Infinite, MValue::Finite(_)) => false,
            (MValue::Finite(a), MValue::Finite(b)) => a <= b,
        }
    }

    fn from_json(v: &Value) -> Result<MValue> {
        match v {
            Value::String(s) if s == "inf" || s == "∞" => Ok(MValue::Infinite),
            Value::Number(n) => {
                let m = n.as_u64().ok_or_else(|| Error::Parse(format!("bad Coxeter entry {v}")))?;
                if m < 2 {
                    return Err(Error::Parse(format!("off-diagonal Coxeter entry {m} < 2")));
                }
                Ok(MValue::Finite(m as u32))
            }
            _ => Err(Error::Parse(format!("bad Coxeter entry {v}"))),
        }
    }
}

impl fmt::Display for MValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MValue::Finite(m) => write!(f, "{m}"),
            MValue::Infinite => write!(f, "inf"),
        }
    }
}

/// A symmetric Coxeter matrix on `ℙ`: explicit pair overrides, then values
/// depending only on `|i - j|`, then a default.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterM {
    pub default: MValue,
    pub bands: BTreeMap<u8, MValue>,
    pub overrides: BTreeMap<(u8, u8), MValue>,
}

impl CoxeterM {
    pub fn constant(default: MValue) -> Self {
        CoxeterM { default, bands: BTreeMap::new(), overrides: BTreeMap::new() }
    }

    pub fn with_band(mut self, d: u8, m: MValue) -> Self {
        self.bands.insert(d, m);
        self
    }

    pub fn with_override(mut self, i: u8, j: u8, m: MValue) -> Self {
        self.overrides.insert((i.min(j), i.max(j)), m);
        self
    }

    /// `m(i, j)`; equals one exactly on the diagonal.
    pub fn get(&self, i: u8, j: u8) -> MValue {
        if i == j {
            return MValue::Finite(1);
        }
        let key = (i.min(j), i.max(j));
        if let Some(&m) = self.overrides.get(&key) {
            return m;
        }
        self.bands.get(&(key.1 - key.0)).copied().unwrap_or(self.default)
    }

    /// True when `m(i, j) ≤ m(i+1, j+1)` for all `i < j` with `j + 1 ≤ n`.
    pub fn is_shift_monotone(&self, n: u8) -> bool {
        (1..n).all(|i| (i + 1..n).all(|j| self.get(i, j).le(self.get(i + 1, j + 1))))
    }

    /// True when `m(i, j) ≤ m(a, b)` whenever `0 < |a - b| ≤ |i - j|`, within `[n]`.
    pub fn is_uniform(&self, n: u8) -> bool {
        for i in 1..=n {
            for j in i + 1..=n {
                for a in 1..=n {
                    for b in a + 1..=n {
                        if b - a <= j - i && !self.get(i, j).le(self.get(a, b)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn from_json(v: &Value) -> Result<CoxeterM> {
        let default = v.get("default").map(MValue::from_json).transpose()?.unwrap_or(MValue::Finite(2));
        let mut m = CoxeterM::constant(default);
        if let Some(bands) = v.get("bands").and_then(Value::as_array) {
            for b in bands {
                let d = b.get(0).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("bad band {b}")))?;
                let val = MValue::from_json(b.get(1).unwrap_or(&Value::Null))?;
                m.bands.insert(d as u8, val);
            }
        }
        if let Some(ov) = v.get("overrides").and_then(Value::as_array) {
            for o in ov {
                let i = o.get(0).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("bad override {o}")))?;
                let j = o.get(1).and_then(Value::as_u64).ok_or_else(|| Error::Parse(format!("bad override {o}")))?;
                if i == j || i == 0 || j == 0 {
                    return Err(Error::Parse(format!("bad override {o}")));
                }
                let val = MValue::from_json(o.get(2).unwrap_or(&Value::Null))?;
                m = m.with_override(i as u8, j as u8, val);
            }
        }
        Ok(m)
    }

    fn to_json(&self) -> Value {
        let mv = |m: &MValue| match m {
            MValue::Finite(k) => Value::from(*k),
            MValue::Infinite => Value::from("inf"),
        };
        let mut obj = serde_json::Map::new();
        obj.insert("default".into(), mv(&self.default));
        if !self.bands.is_empty() {
            obj.insert("bands".into(), self.bands.iter().map(|(d, m)| Value::from(vec![Value::from(*d), mv(m)])).collect());
        }
        obj.insert(
            "overrides".into(),
            self.overrides.iter().map(|((i, j), m)| Value::from(vec![Value::from(*i), Value::from(*j), mv(m)])).collect(),
        );
        Value::Object(obj)
    }
}

/// Where the generators of a presentation come from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorSource {
    Explicit(Vec<(Word, Word)>),
    Builtin(Builtin),
    Coxeter(CoxeterM),
    Union(Vec<RelationPresentation>),
}

/// A word relation given by generators.
///
/// Explicit generator pairs are always closed under the down-shifts
/// `v↓m, w↓m` for `0 ≤ m < min(v)`; when `uniform` is set they are also closed
/// under order-preserving injections of their letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationPresentation {
    pub name: String,
    pub source: GeneratorSource,
    pub uniform: bool,
}

impl RelationPresentation {
    pub fn builtin(b: Builtin) -> Self {
        let uniform = !matches!(b, Builtin::ShiftedHecke(_));
        RelationPresentation { name: b.name(), source: GeneratorSource::Builtin(b), uniform }
    }

    pub fn explicit(name: &str, pairs: Vec<(Word, Word)>, uniform: bool) -> Result<Self> {
        let p = RelationPresentation { name: name.into(), source: GeneratorSource::Explicit(pairs), uniform };
        p.validate()?;
        Ok(p)
    }

    /// The relation whose classes are the fibers of the Demazure product.
    pub fn coxeter(name: &str, m: CoxeterM) -> Self {
        RelationPresentation { name: name.into(), source: GeneratorSource::Coxeter(m), uniform: false }
    }

    pub fn union(name: &str, parts: Vec<RelationPresentation>) -> Result<Self> {
        let p = RelationPresentation { name: name.into(), source: GeneratorSource::Union(parts), uniform: false };
        p.validate()?;
        Ok(p)
    }

    /// Rejects explicit generators whose two sides have different letter sets.
    pub fn validate(&self) -> Result<()> {
        match &self.source {
            GeneratorSource::Explicit(pairs) => {
                for (v, w) in pairs {
                    if v.letter_mask() != w.letter_mask() {
                        return Err(Error::UnequalLetterSets(v.to_string(), w.to_string()));
                    }
                }
                Ok(())
            }
            GeneratorSource::Union(parts) => parts.iter().try_for_each(RelationPresentation::validate),
            _ => Ok(()),
        }
    }

    /// Syntactic homogeneity: every generator relates words of equal length.
    pub fn is_homogeneous(&self) -> bool {
        match &self.source {
            GeneratorSource::Explicit(pairs) => pairs.iter().all(|(v, w)| v.len() == w.len()),
            GeneratorSource::Builtin(b) => b.is_homogeneous(),
            GeneratorSource::Coxeter(_) => false,
            GeneratorSource::Union(parts) => parts.iter().all(RelationPresentation::is_homogeneous),
        }
    }

    /// True when every generator relates words with the same letter multiset.
    pub fn preserves_content(&self) -> bool {
        let sorted = |w: &Word| {
            let mut l = w.letters().to_vec();
            l.sort_unstable();
            l
        };
        match &self.source {
            GeneratorSource::Explicit(pairs) => pairs.iter().all(|(v, w)| sorted(v) == sorted(w)),
            GeneratorSource::Builtin(b) => b.is_homogeneous(),
            GeneratorSource::Coxeter(_) => false,
            GeneratorSource::Union(parts) => parts.iter().all(RelationPresentation::preserves_content),
        }
    }

    /// Resolves a command-line reference: a built-in name or a JSON file path.
    pub fn resolve(reference: &str) -> Result<Self> {
        if let Some(b) = Builtin::parse(reference) {
            return Ok(Self::builtin(b));
        }
        let text = std::fs::read_to_string(reference)
            .map_err(|e| Error::Parse(format!("{reference}: not a built-in relation and unreadable: {e}")))?;
        Self::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }

    /// Reads the presentation file format
    /// `{"name", "generators", "builtin"?, "union_of"?, "uniform", "coxeter_m"?}`.
    /// Several sources in one object are combined by union.
    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(s) = v.as_str() {
            let b = Builtin::parse(s).ok_or_else(|| Error::Parse(format!("unknown built-in relation {s}")))?;
            return Ok(Self::builtin(b));
        }
        let obj: PresentationFile = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let name = obj.name.unwrap_or_else(|| "custom".into());
        let mut parts = Vec::new();
        if let Some(b) = &obj.builtin {
            let b = Builtin::parse(b).ok_or_else(|| Error::Parse(format!("unknown built-in relation {b}")))?;
            parts.push(Self::builtin(b));
        }
        if let Some(m) = &obj.coxeter_m {
            parts.push(Self::coxeter(&name, CoxeterM::from_json(m)?));
        }
        if let Some(list) = &obj.union_of {
            for item in list {
                parts.push(Self::from_json(item)?);
            }
        }
        if !obj.generators.is_empty() || parts.is_empty() {
            let pairs = obj
                .generators
                .iter()
                .map(|g| Ok((g[0].parse()?, g[1].parse()?)))
                .collect::<Result<Vec<(Word, Word)>>>()?;
            parts.push(Self::explicit(&name, pairs, obj.uniform)?);
        }
        let mut p = if parts.len() == 1 { parts.pop().unwrap() } else { Self::union(&name, parts)? };
        p.name = name;
        Ok(p)
    }

    /// Serializes to the presentation file format.
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("name".into(), Value::from(self.name.clone()));
        obj.insert("uniform".into(), Value::from(self.uniform));
        let mut generators: Vec<Value> = Vec::new();
        match &self.source {
            GeneratorSource::Explicit(pairs) => {
                generators = pairs.iter().map(|(v, w)| Value::from(vec![v.to_string(), w.to_string()])).collect();
            }
            GeneratorSource::Builtin(b) => {
                obj.insert("builtin".into(), Value::from(b.name()));
            }
            GeneratorSource::Coxeter(m) => {
                obj.insert("coxeter_m".into(), m.to_json());
            }
            GeneratorSource::Union(parts) => {
                obj.insert("union_of".into(), parts.iter().map(RelationPresentation::to_json).collect());
            }
        }
        obj.insert("generators".into(), Value::from(generators));
        Value::Object(obj)
    }
}

#[derive(Deserialize, Serialize)]
struct PresentationFile {
    name: Option<String>,
    #[serde(default)]
    generators: Vec<[String; 2]>,
    builtin: Option<String>,
    union_of: Option<Vec<Value>>,
    #[serde(default)]
    uniform: bool,
    coxeter_m: Option<Value>,
}
