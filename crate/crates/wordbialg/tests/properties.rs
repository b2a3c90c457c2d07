//! Randomized invariants.

use proptest::prelude::*;

use wordbialg::character::*;
use wordbialg::combinat::*;
use wordbialg::linear::LinComb;
use wordbialg::qsym::*;
use wordbialg::relation::{bfs_class, Builtin, RelationPresentation};
use wordbialg::Q;

fn word(max_letter: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_letter, 0..=max_len).prop_map(|v| Word::from_slice(&v))
}

fn composition(max: usize) -> impl Strategy<Value = Composition> {
    (1..=max).prop_flat_map(|n| prop::sample::select(Composition::all_of(n)))
}

fn qsym(degree: usize) -> impl Strategy<Value = QSym<i64>> {
    prop::collection::vec((composition(degree), -5i64..=5), 0..6).prop_map(move |ts| QSym::from_terms(degree, ts))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fundamental_round_trip(f in qsym(6)) {
        prop_assert_eq!(QSym::from_fundamental(&f.to_fundamental(), 6), f);
    }

    #[test]
    fn product_is_commutative_and_evaluates(f in qsym(3), g in qsym(3)) {
        // lifted to degree 6 the product is not truncated
        let lift = |h: &QSym<i64>| QSym::<Q>::from_terms(6, h.terms().iter().map(|(a, c)| (a.clone(), Q::from_integer((*c).into()))));
        let (f, g) = (lift(&f), lift(&g));
        let fg = f.mul(&g);
        prop_assert_eq!(&fg, &g.mul(&f));
        let xs = [Q::from_integer(2.into()), Q::from_integer((-1).into()), Q::from_integer(3.into())];
        prop_assert_eq!(fg.evaluate(&xs), f.evaluate(&xs) * g.evaluate(&xs));
    }

    #[test]
    fn involutions(f in qsym(6)) {
        prop_assert_eq!(f.omega_l().omega_l(), f.clone());
        prop_assert_eq!(f.reverse_l().reverse_l(), f.clone());
        prop_assert_eq!(f.complement_l().complement_l(), f.clone());
        prop_assert_eq!(f.omega_l(), f.reverse_l().complement_l());
    }

    #[test]
    fn psi_is_linear(ws in prop::collection::vec((word(4, 6), -3i64..=3), 0..6), c in 0usize..20) {
        let ch = Character::all()[c];
        let x: LinComb<Word, i64> = ws.iter().cloned().collect();
        let mut sum = QSym::zero(6);
        for (w, k) in x.iter() {
            sum = sum.add(&psi_word::<i64>(ch, w.letters(), 6).scale(k));
        }
        prop_assert_eq!(psi(ch, &x, 6), sum);
    }

    #[test]
    fn sign_key_path_matches_definition(w in word(5, 9), c in 0usize..20) {
        let ch = Character::all()[c];
        let n = w.len();
        prop_assert_eq!(psi_word::<i64>(ch, w.letters(), n), psi_word_direct(ch, w.letters(), n));
    }

    #[test]
    fn peak_solve_round_trip(ts in prop::collection::vec((composition(6), -4i64..=4), 0..5)) {
        let mut f: QSym<Q> = QSym::zero(6);
        let mut expect: LinComb<Composition, Q> = LinComb::zero();
        for (a, c) in ts {
            // turn α into a peak composition by merging small parts
            let mut parts: Vec<usize> = Vec::new();
            for p in a.parts() {
                match parts.last_mut() {
                    Some(l) if *l < 2 => *l += p,
                    _ => parts.push(*p),
                }
            }
            let alpha = Composition::from_parts(&parts);
            if !alpha.is_peak() {
                continue;
            }
            let c = Q::from_integer(c.into());
            f = f.add(&peak_k(&alpha, 6).unwrap().scale(&c));
            expect.add_term(alpha, c);
        }
        prop_assert_eq!(to_peak(&f).unwrap(), expect);
    }

    #[test]
    fn schur_expansion_round_trip(ts in prop::collection::vec((0usize..11, -4i64..=4), 0..5)) {
        let parts = Partition::all_of(6);
        let mut f: QSym<Q> = QSym::zero(6);
        let mut expect: LinComb<Partition, Q> = LinComb::zero();
        for (i, c) in ts {
            let c = Q::from_integer(c.into());
            f = f.add(&schur(&parts[i], 6).unwrap().scale(&c));
            expect.add_term(parts[i].clone(), c);
        }
        prop_assert_eq!(schur_expand(&f).unwrap().terms, expect);
    }

    #[test]
    fn knuth_classes_are_rsk_fibres(w in word(3, 6)) {
        let p = RelationPresentation::builtin(Builtin::Knuth);
        let class = bfs_class(&p, 3, &w, w.len()).unwrap();
        let t = rsk_insertion_tableau(&w);
        let fibre: Vec<Word> = words_of_length(3, w.len()).into_iter().filter(|v| rsk_insertion_tableau(v) == t).collect();
        prop_assert_eq!(class, fibre);
    }

    #[test]
    fn hecke_classes_are_demazure_fibres(w in word(3, 6)) {
        let p = RelationPresentation::builtin(Builtin::Hecke);
        let class = bfs_class(&p, 3, &w, 6).unwrap();
        let pi = eval_hecke_word(&w, 3).unwrap();
        let fibre: Vec<Word> = words_up_to(3, 6).into_iter().filter(|v| eval_hecke_word(v, 3).unwrap() == pi).collect();
        let mut class = class;
        class.sort();
        let mut fibre = fibre;
        fibre.sort();
        prop_assert_eq!(class, fibre);
    }
}
