//! Symmetry and positivity scans of class images `ψ̃(κ_E)`.

use std::time::Instant;

use serde::Serialize;

use super::psi::PsiAccumulator;
use super::zeta::Character;
use crate::combinat::Word;
use crate::error::Result;
use crate::qsym::{schur_expand, schur_p_expand, QSym};
use crate::relation::{packed_slice_map, RelationInstance, RelationPresentation};

/// Basis for positivity tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PositivityBasis {
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "Q")]
    SchurQ,
}

impl PositivityBasis {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "s" | "schur" => Some(PositivityBasis::Schur),
            "Q" | "q" | "schur-q" => Some(PositivityBasis::SchurQ),
            _ => None,
        }
    }
}

/// Verdicts for one class.
#[derive(Clone, Debug, Serialize)]
pub struct ClassVerdict {
    pub class_repr: String,
    pub class_size: usize,
    pub degree: usize,
    pub symmetric: bool,
    pub schur_positive: Option<bool>,
    #[serde(rename = "schurQ_positive")]
    pub schur_q_positive: Option<bool>,
}

impl ClassVerdict {
    fn positive_in(&self, b: PositivityBasis) -> Option<bool> {
        match b {
            PositivityBasis::Schur => self.schur_positive,
            PositivityBasis::SchurQ => self.schur_q_positive,
        }
    }
}

/// Bounds a scan ran at.
#[derive(Clone, Debug, Serialize)]
pub struct ScanBounds {
    /// Length of the packed words, for packed scans.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    /// Truncation degree of the images.
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub headroom: Option<usize>,
}

/// Outcome of a scan. `non_positive` lists symmetric classes failing
/// positivity in the first requested basis; `non_positive_by_basis` lists all.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub relation: String,
    pub bounds: ScanBounds,
    pub character: Character,
    pub bases: Vec<PositivityBasis>,
    pub total_classes: usize,
    pub non_symmetric: Vec<String>,
    pub non_positive: Vec<String>,
    pub non_positive_by_basis: Vec<(PositivityBasis, Vec<String>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<f64>,
    #[serde(skip)]
    pub rows: Vec<ClassVerdict>,
}

impl ScanReport {
    fn build(relation: String, bounds: ScanBounds, character: Character, bases: &[PositivityBasis], rows: Vec<ClassVerdict>) -> Self {
        let non_symmetric = rows.iter().filter(|r| !r.symmetric).map(|r| r.class_repr.clone()).collect();
        let by_basis: Vec<(PositivityBasis, Vec<String>)> = bases
            .iter()
            .map(|&b| (b, rows.iter().filter(|r| r.positive_in(b) == Some(false)).map(|r| r.class_repr.clone()).collect()))
            .collect();
        ScanReport {
            relation,
            bounds,
            character,
            bases: bases.to_vec(),
            total_classes: rows.len(),
            non_symmetric,
            non_positive: by_basis.first().map(|x| x.1.clone()).unwrap_or_default(),
            non_positive_by_basis: by_basis,
            runtime: None,
            rows,
        }
    }

    /// Rows as CSV with header
    /// `class_repr,class_size,degree,symmetric,schur_positive,schurQ_positive`.
    pub fn to_csv(&self) -> String {
        let flag = |x: Option<bool>| x.map(|b| b.to_string()).unwrap_or_default();
        let mut out = String::from("class_repr,class_size,degree,symmetric,schur_positive,schurQ_positive\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.class_repr,
                r.class_size,
                r.degree,
                r.symmetric,
                flag(r.schur_positive),
                flag(r.schur_q_positive)
            ));
        }
        out
    }
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "∅".into()
    } else {
        w.to_string()
    }
}

/// Symmetry and positivity of one image, with integer coefficients.
pub fn judge(f: &QSym<i64>, bases: &[PositivityBasis]) -> (bool, Option<bool>, Option<bool>) {
    let symmetric = f.is_symmetric();
    let test = |b: PositivityBasis| -> Option<bool> {
        if !bases.contains(&b) {
            return None;
        }
        if !symmetric {
            return Some(false);
        }
        let e = match b {
            PositivityBasis::Schur => schur_expand(f),
            // P- and Q-coefficients share signs
            PositivityBasis::SchurQ => schur_p_expand(f),
        };
        Some(match e {
            Ok(e) => e.terms.iter().all(|(_, c)| *c >= 0),
            Err(_) => false,
        })
    };
    (symmetric, test(PositivityBasis::Schur), test(PositivityBasis::SchurQ))
}

fn verdict(members: &[Word], rep: &Word, c: Character, degree: usize, bases: &[PositivityBasis]) -> ClassVerdict {
    let mut acc = PsiAccumulator::<i64>::new(c, degree);
    for w in members {
        acc.add(w.letters(), 1);
    }
    let (symmetric, s, q) = judge(&acc.finish(), bases);
    ClassVerdict { class_repr: show(rep), class_size: members.len(), degree, symmetric, schur_positive: s, schur_q_positive: q }
}

/// Scans every class of packed words of length `len` of a homogeneous relation.
pub fn scan_packed(p: &RelationPresentation, len: usize, c: Character, bases: &[PositivityBasis]) -> Result<ScanReport> {
    let start = Instant::now();
    let rows: Vec<ClassVerdict> =
        packed_slice_map(p, len, |members| verdict(members, &members[0], c, len, bases))?.into_iter().map(|(_, v)| v).collect();
    let bounds = ScanBounds { length: Some(len), degree: len, max_len: None, headroom: None };
    let mut r = ScanReport::build(p.name.clone(), bounds, c, bases, rows);
    r.runtime = Some(start.elapsed().as_secs_f64());
    Ok(r)
}

/// Scans the classes of a closed instance whose representative has length at
/// most `degree`, truncating images at `degree`. Requires headroom stability.
pub fn scan_instance(inst: &RelationInstance, c: Character, degree: usize, bases: &[PositivityBasis]) -> Result<ScanReport> {
    if degree > inst.max_len() {
        return Err(crate::Error::DegreeOverflow { degree, bound: inst.max_len() });
    }
    inst.require_stable()?;
    let start = Instant::now();
    use rayon::prelude::*;
    let rows: Vec<ClassVerdict> = inst
        .classes()
        .par_iter()
        .filter(|cl| cl.rep.len() <= degree)
        .map(|cl| verdict(&cl.members, &cl.rep, c, degree, bases))
        .collect();
    let bounds = ScanBounds { length: None, degree, max_len: Some(inst.max_len()), headroom: Some(inst.bounds.headroom) };
    let mut r = ScanReport::build(inst.presentation.name.clone(), bounds, c, bases, rows);
    r.runtime = Some(start.elapsed().as_secs_f64());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Builtin;

    #[test]
    fn knuth_small_scan() {
        let p = RelationPresentation::builtin(Builtin::Knuth);
        let r = scan_packed(&p, 4, Character::LE, &[PositivityBasis::Schur]).unwrap();
        assert_eq!(r.total_classes, r.rows.len());
        assert!(r.non_symmetric.is_empty());
        assert!(r.non_positive.is_empty());
        assert!(r.to_csv().starts_with("class_repr,"));
    }

    #[test]
    fn commutation_classes_are_symmetric() {
        // a class is every rearrangement of a content, with image h_μ
        let p = RelationPresentation::builtin(Builtin::Commutation);
        let r = scan_packed(&p, 4, Character::LE, &[PositivityBasis::Schur]).unwrap();
        assert!(r.non_symmetric.is_empty() && r.non_positive.is_empty());
    }

    #[test]
    fn identity_relation_is_not_symmetric() {
        let p = RelationPresentation::explicit("identity", vec![], true).unwrap();
        let r = scan_packed(&p, 3, Character::LE, &[]).unwrap();
        assert!(r.non_symmetric.contains(&"132".to_string()));
    }
}
