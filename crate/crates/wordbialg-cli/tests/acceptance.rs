//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::Value;
use wordbialg::character::Character;
use wordbialg::relation::{Builtin, RelationPresentation};
use wordbialg_cli::cache::Cache;
use wordbialg_cli::commands::{classify, packed_length_classes};
use wordbialg_cli::conjectures::{doubling, exotic_scan};
use wordbialg_cli::suites::{self, SuiteCheck};

type Outcome = Result<String, String>;

fn all_pass(checks: &[SuiteCheck]) -> Outcome {
    match checks.iter().find(|c| !c.passed) {
        None => Ok(format!("{} checks, {} cases", checks.len(), checks.iter().map(|c| c.checked).sum::<usize>())),
        Some(c) => Err(format!("{}: {}", c.name, c.witness.as_deref().unwrap_or("failed"))),
    }
}

fn ensure(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

/// Ordered Bell numbers by `a(n) = Σ_{k<n} C(n,k) a(k)`.
fn ordered_bell(max: usize) -> Vec<usize> {
    let mut a = vec![1usize];
    for n in 1..=max {
        let mut binom = 1usize;
        let mut s = 0;
        for (k, ak) in a.iter().enumerate() {
            s += binom * ak;
            binom = binom * (n - k) / (k + 1);
        }
        a.push(s);
    }
    a
}

/// Exotic Knuth counts through the binary for n ≤ 7, then d_8 and d_9.
fn exotic_counts() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_wordbialg"))
        .args(["classes", "--relation", "exotic-knuth", "--max-len", "7", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit status {}", out.status));
    }
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let counts: Vec<u64> = v["counts"].as_array().ok_or("no counts")?.iter().filter_map(Value::as_u64).collect();
    if counts != [1, 1, 3, 9, 31, 110, 412, 1597] {
        return Err(format!("d = {counts:?}"));
    }
    let totals: Vec<usize> = v["lengths"].as_array().unwrap().iter().map(|r| r["packed_words"].as_u64().unwrap() as usize).collect();
    if totals != ordered_bell(7) {
        return Err(format!("packed words per length {totals:?}"));
    }
    let p = RelationPresentation::builtin(Builtin::ExoticKnuth);
    let d8 = packed_length_classes(&p, 8, &Cache::default()).map_err(|e| e.to_string())?.classes;
    let d9 = packed_length_classes(&p, 9, &Cache::default()).map_err(|e| e.to_string())?.classes;
    ensure(d8 == 6465 && d9 == 27021, format!("d_0..d_7 = {counts:?}, d_8 = {d8}, d_9 = {d9}"), format!("d_8 = {d8}, d_9 = {d9}"))
}

fn q_exceptions() -> Outcome {
    let row = exotic_scan(9, Character::PEAK, &Cache::default()).map_err(|e| e.to_string())?;
    let n = row.non_schur_q_positive.len();
    ensure(
        row.total_classes == 27021 && n == 35,
        format!("{n} of {} classes are not Schur-Q-positive", row.total_classes),
        format!("{n} of {} classes", row.total_classes),
    )
}

/// Expected `(homogeneous, algebraic, uniformly algebraic, P-algebraic, finite type)`.
fn expected_verdicts(b: Builtin) -> [bool; 5] {
    match b {
        Builtin::Commutation | Builtin::Knuth | Builtin::ExoticKnuth => [true, true, true, true, false],
        Builtin::KEquivalence => [false, true, true, true, false],
        Builtin::KCommutation | Builtin::KKnuth | Builtin::Hecke => [false, true, true, true, true],
        Builtin::ShiftedHecke(_) => [false, true, false, false, true],
    }
}

fn classifier_verdicts() -> Outcome {
    for b in Builtin::all() {
        let c = classify(&RelationPresentation::builtin(b), 3, 6, 2, u128::MAX).map_err(|e| e.to_string())?;
        if c.flags() != expected_verdicts(b) || !c.headroom_stable {
            return Err(format!("{}: {:?}", b.name(), c.flags()));
        }
        if let Builtin::ShiftedHecke(n) = b {
            let expected = format!("class of 1{}: (12, ∅): 1 vs (21, ∅): 0", n + 1);
            if c.p_algebraic.witness() != Some(expected.as_str()) {
                return Err(format!("witness {:?}", c.p_algebraic.witness()));
            }
        }
    }
    Ok("8 built-ins at n ≤ 3, L ≤ 6".into())
}

fn conjecture_harness() -> Outcome {
    let hecke = doubling(Builtin::Hecke, 3, 4, 1, u128::MAX).map_err(|e| e.to_string())?;
    if !hecke.agrees() {
        return Err(format!("weak-hecke witness: {:?} {:?}", hecke.weak_not_doubled, hecke.doubled_not_weak));
    }
    let bs = doubling(Builtin::KKnuth, 3, 4, 1, u128::MAX).map_err(|e| e.to_string())?;
    let witnesses = bs.weak_not_doubled.count + bs.doubled_not_weak.count;
    ensure(
        witnesses == 0,
        format!("weak-hecke: 0 of {} words; buch-samuel: 0 witnesses", hecke.words),
        format!("buch-samuel: {witnesses} witnesses"),
    )
}

fn main() -> ExitCode {
    let seed = 20_240_601;
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("exotic Knuth class counts", Box::new(exotic_counts)),
        ("35 Schur-Q exceptions at length 9", Box::new(q_exceptions)),
        ("shuffle identity", Box::new(|| all_pass(&[suites::shuffle_identity()]))),
        (
            "bialgebra axioms and duality",
            Box::new(|| {
                let mut c = suites::axioms();
                c.extend(suites::duality());
                all_pass(&c)
            }),
        ),
        ("oracle equivalences", Box::new(|| all_pass(&suites::oracles().map_err(|e| e.to_string())?))),
        ("H_n images", Box::new(|| all_pass(&[suites::nsym_generators(8)]))),
        ("fundamental and peak tables", Box::new(move || all_pass(&[suites::tables(500, seed).map_err(|e| e.to_string())?]))),
        (
            "Knuth and K-Knuth images are Schur-positive",
            Box::new(|| {
                let a = suites::knuth_schur_positive(6).map_err(|e| e.to_string())?;
                let b = suites::k_knuth_tableau_sums(6).map_err(|e| e.to_string())?;
                all_pass(&[a, b])
            }),
        ),
        ("classifier verdicts", Box::new(classifier_verdicts)),
        ("multi-fundamentals", Box::new(|| all_pass(&[suites::multi_fundamentals(5, 8).map_err(|e| e.to_string())?]))),
        ("conjecture harness", Box::new(conjecture_harness)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
