//! Special families as `ψ`-images, each checked along a second route.

use std::collections::BTreeSet;

use wordbialg::character::*;
use wordbialg::combinat::*;
use wordbialg::qsym::*;
use wordbialg::relation::{bfs_class, close, Builtin, ClosureBounds, RelationPresentation};

fn rel(b: Builtin) -> RelationPresentation {
    RelationPresentation::builtin(b)
}

#[test]
fn hecke_words_match_closure_classes() {
    let inst = close(&rel(Builtin::Hecke), ClosureBounds::alphabet(3, 7, 1)).unwrap();
    for pi in Permutation::all_of(4) {
        let dp: Vec<Word> = hecke_words(&pi, 7).into_iter().flatten().collect();
        let class = inst.class_of(&pi.reduced_word()).unwrap();
        let mut members = class.members.clone();
        members.sort();
        let mut dp_sorted = dp.clone();
        dp_sorted.sort();
        assert_eq!(members, dp_sorted, "{pi}");
    }
}

#[test]
fn j_is_omega_of_k_tilde() {
    for pi in Permutation::all_of(3) {
        let f = grothendieck_family::<i64>(&pi, 6);
        assert_eq!(f.j, f.k_tilde.omega_l(), "{pi}");
    }
    for pi in Permutation::all_of(4) {
        let f = grothendieck_family::<i64>(&pi, 5);
        assert_eq!(f.j, f.k_tilde.omega_l(), "{pi}");
        assert!(f.k_tilde.is_symmetric() && f.j.is_symmetric(), "{pi}");
    }
}

#[test]
fn simple_transposition_against_closure() {
    // the Hecke class of 1 over the alphabet {1} is 1, 11, 111, …
    let s1 = Permutation::new(vec![2, 1]).unwrap();
    let inst = close(&rel(Builtin::Hecke), ClosureBounds::alphabet(1, 5, 1)).unwrap();
    let members = &inst.class_of(&w("1")).unwrap().members;
    let f = grothendieck_family::<i64>(&s1, 5);
    assert_eq!(f.k_tilde, psi_members(Character::GT, members, 5));
    for d in 1..=5 {
        // only the all-ones composition survives ζ_> on 1^d
        let ones = Composition::from_parts(&vec![1; d]);
        assert_eq!(f.k_tilde.homogeneous(d), QSym::from_terms(5, [(ones, 1)]));
    }
}

#[test]
fn lowest_grothendieck_term_is_stanley() {
    for n in 2..=4 {
        for pi in Permutation::all_of(n) {
            let l = pi.length();
            let f = grothendieck_family::<i64>(&pi, l + 1);
            assert_eq!(f.g.homogeneous(l), stanley::<i64>(&pi, l + 1), "{pi}");
            assert_eq!(f.g.min_degree(), Some(l));
        }
    }
}

#[test]
fn grassmannian_k_tilde_starts_with_schur() {
    for n in 1..=5 {
        for lam in Partition::all_of(n) {
            let k: QSym<i64> = k_tilde_lambda(&lam, n);
            assert_eq!(k.homogeneous(n), schur(&lam, n).unwrap(), "{lam}");
        }
    }
}

/// Row reading words (bottom row first) of all semistandard tableaux of
/// shape `λ` with entries in `[n]`.
fn tableau_words(lam: &Partition, n: u8) -> Vec<Word> {
    words_of_length(n, lam.size())
        .into_iter()
        .filter(|w| semistandard_shape(w).is_some_and(|s| &s == lam))
        .collect()
}

#[test]
fn knuth_classes_of_tableaux_give_schur_functions() {
    for size in 1..=5 {
        for lam in Partition::all_of(size) {
            let n = lam.len() as u8 + 1;
            for t in tableau_words(&lam, n).into_iter().take(3) {
                let class = bfs_class(&rel(Builtin::Knuth), n, &t, size).unwrap();
                // Knuth classes are the RSK fibres
                assert!(class.iter().all(|v| rsk_insertion_tableau(v) == t), "{t}");
                let f: QSym<i64> = psi_members(Character::LE, &class, size);
                assert_eq!(f, schur(&lam, size).unwrap(), "{t}");
            }
        }
    }
    let class = bfs_class(&rel(Builtin::Knuth), 2, &w("2211"), 4).unwrap();
    let f: QSym<i64> = psi_members(Character::LE, &class, 4);
    assert_eq!(f, schur(&part(&[2, 2]), 4).unwrap());
}

#[test]
fn nsym_generators() {
    let d = 8;
    for n in 0..=d {
        let ones = Word::from_slice(&vec![1; n]);
        let class = bfs_class(&rel(Builtin::Commutation), 1, &ones, n).unwrap();
        assert_eq!(class.len(), 1);
        assert_eq!(psi_members::<i64>(Character::LE, &class, d), complete_h(n, d).unwrap());
        assert_eq!(psi_members::<i64>(Character::PEAK, &class, d), q_function(n, d).unwrap());
    }
}

/// Brute-force `L̃_α` coefficient of `M_β`: chains `S_1 ⪯ ⋯ ⪯ S_n` of
/// nonempty subsets of `[ℓ(β)]`, strict at `I(α)`, with content `β`.
fn chain_count(alpha: &Composition, beta: &Composition) -> u64 {
    let n = alpha.total();
    let k = beta.len();
    let strict: BTreeSet<usize> = alpha.descent_set().into_iter().collect();
    fn go(j: usize, n: usize, k: usize, last_max: usize, strict: &BTreeSet<usize>, left: &mut Vec<usize>) -> u64 {
        if j == n {
            return left.iter().all(|&x| x == 0) as u64;
        }
        let mut total = 0;
        for mask in 1u32..(1 << k) {
            let min = mask.trailing_zeros() as usize + 1;
            let max = 32 - mask.leading_zeros() as usize;
            let ok = if j == 0 { true } else if strict.contains(&j) { last_max < min } else { last_max <= min };
            if !ok || (0..k).any(|i| mask >> i & 1 == 1 && left[i] == 0) {
                continue;
            }
            (0..k).filter(|i| mask >> i & 1 == 1).for_each(|i| left[i] -= 1);
            total += go(j + 1, n, k, max, strict, left);
            (0..k).filter(|i| mask >> i & 1 == 1).for_each(|i| left[i] += 1);
        }
        total
    }
    go(0, n, k, 0, &strict, &mut beta.parts().to_vec())
}

#[test]
fn multi_fundamental_matches_chain_enumeration() {
    for n in 1..=3 {
        for alpha in Composition::all_of(n) {
            for big in n..=6 {
                for beta in Composition::all_of(big) {
                    assert_eq!(multi_fundamental_coefficient(&alpha, &beta), chain_count(&alpha, &beta), "{alpha} {beta}");
                }
            }
        }
    }
}

/// Multi-permutations: packed words without equal adjacent letters.
fn multi_permutations(max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(packed_words).filter(|w| w.has_no_repeats()).collect()
}

#[test]
fn k_equivalence_classes_give_multi_fundamentals() {
    let d = 7;
    for w in multi_permutations(4) {
        let n = w.max_letter();
        let class = bfs_class(&rel(Builtin::KEquivalence), n, &w, d).unwrap();
        let alpha = Composition::from_descent_set(w.len(), &w.descents());
        let lt: QSym<i64> = multi_fundamental(&alpha, d).unwrap();
        assert_eq!(psi_members(Character::LT, &class, d), lt, "{w}");
        assert_eq!(psi_members(Character::LE, &class, d), lt.substitute_geometric().0, "{w}");
        let rclass = bfs_class(&rel(Builtin::KEquivalence), n, &w.reversed(), d).unwrap();
        let lr: QSym<i64> = multi_fundamental(&alpha.reverse(), d).unwrap();
        assert_eq!(psi_members(Character::GT, &rclass, d), lr, "{w}");
        assert_eq!(psi_members(Character::GE, &rclass, d), lr.substitute_geometric().0, "{w}");
    }
}

#[test]
fn k_knuth_classes_sum_grothendieck_functions() {
    for m in 1..=4u8 {
        let inst = close(&rel(Builtin::KKnuth), ClosureBounds::letter_set(m, 5, 1)).unwrap();
        for cl in inst.classes() {
            assert!(!increasing_tableau_shapes(&cl.members).is_empty(), "{}", cl.rep);
            let f: QSym<i64> = psi_members(Character::LE, &cl.members, 5);
            assert_eq!(f, tableau_j_sum(&cl.members, 5), "{}", cl.rep);
            let g: QSym<i64> = psi_members(Character::GT, &cl.members, 5);
            assert_eq!(g, tableau_k_tilde_sum(&cl.members, 5), "{}", cl.rep);
        }
    }
}
