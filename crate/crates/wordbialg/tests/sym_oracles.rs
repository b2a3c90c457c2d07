//! Symmetric-function expansions against brute-force tableau counts and a
//! small dense solver.

use num_traits::{One, Signed, Zero};
use wordbialg::combinat::{Composition, Partition};
use wordbialg::qsym::*;
use wordbialg::Q;

fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Semistandard fillings of `λ` with content `μ`, cell by cell.
fn ssyt_count(lambda: &[usize], mu: &[usize]) -> i64 {
    let cells: Vec<(usize, usize)> =
        lambda.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut grid = vec![vec![0usize; lambda.first().copied().unwrap_or(0)]; lambda.len()];
    let mut left = mu.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> i64 {
        let Some(&(i, j)) = cells.get(k) else { return 1 };
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 || (j > 0 && grid[i][j - 1] > v) || (i > 0 && grid[i - 1][j] >= v) {
                continue;
            }
            grid[i][j] = v;
            left[v - 1] -= 1;
            total += go(k + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        grid[i][j] = 0;
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// Marked shifted tableaux of strict shape `λ` with content `μ`. Letters are
/// coded `1' < 1 < 2' < 2 < ⋯` as `1, 2, 3, 4, …`; primed letters are odd.
fn marked_shifted_count(lambda: &[usize], mu: &[usize]) -> i64 {
    let cells: Vec<(usize, usize)> =
        lambda.iter().enumerate().flat_map(|(i, &r)| (i..i + r).map(move |j| (i, j))).collect();
    let width = lambda.first().copied().unwrap_or(0);
    let mut grid = vec![vec![0usize; width]; lambda.len()];
    let mut left = mu.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> i64 {
        let Some(&(i, j)) = cells.get(k) else { return 1 };
        let mut total = 0;
        for code in 1..=2 * left.len() {
            let letter = code.div_ceil(2);
            if left[letter - 1] == 0 {
                continue;
            }
            let primed = code % 2 == 1;
            let l = if j > i { grid[i][j - 1] } else { 0 };
            let u = if i > 0 && j >= i { grid[i - 1][j] } else { 0 };
            // primed letters are strict along rows, unprimed along columns
            if l > code || u > code || (primed && l == code) || (!primed && u == code) {
                continue;
            }
            grid[i][j] = code;
            left[letter - 1] -= 1;
            total += go(k + 1, cells, grid, left);
            left[letter - 1] += 1;
        }
        grid[i][j] = 0;
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

#[test]
fn kostka_numbers_match_tableau_counts() {
    for n in 0..=6 {
        for lam in Partition::all_of(n) {
            let s: QSym<i64> = schur(&lam, n).unwrap();
            for alpha in Composition::all_of(n) {
                let brute = ssyt_count(lam.parts(), alpha.parts());
                assert_eq!(s.coeff(&alpha), brute, "s_{lam} at M_{alpha}");
                if alpha.parts().windows(2).all(|p| p[0] >= p[1]) {
                    assert_eq!(kostka(&lam, alpha.parts()), brute);
                }
            }
        }
    }
}

#[test]
fn schur_q_matches_marked_shifted_tableaux() {
    for n in 0..=6 {
        for lam in Partition::strict_of(n) {
            let q: QSym<i64> = schur_q(&lam, n).unwrap();
            for alpha in Composition::all_of(n) {
                let brute = marked_shifted_count(lam.parts(), alpha.parts());
                assert_eq!(q.coeff(&alpha), brute, "Q_{lam} at M_{alpha}");
            }
        }
    }
    assert!(matches!(schur_q::<i64>(&Partition::new(vec![2, 2]), 4), Err(wordbialg::Error::NotStrict(_))));
}

#[test]
fn schur_functions_are_symmetric() {
    for n in 0..=8 {
        for lam in Partition::all_of(n) {
            assert!(schur::<i64>(&lam, n).unwrap().is_symmetric(), "s_{lam}");
        }
    }
}

/// Whether `target` lies in the span of `rows`, by Gaussian elimination.
fn in_span(rows: &[Vec<Q>], target: &[Q]) -> bool {
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    let reduce = |mut v: Vec<Q>, basis: &[(usize, Vec<Q>)]| {
        for (p, b) in basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone() / b[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= f.clone() * y;
                }
            }
        }
        v
    };
    for r in rows {
        let v = reduce(r.clone(), &basis);
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            basis.push((p, v));
        }
    }
    reduce(target.to_vec(), &basis).iter().all(Zero::is_zero)
}

#[test]
fn schur_q_lies_in_span_of_q_products() {
    for n in 1..=7 {
        let comps = Composition::all_of(n);
        let vector = |f: &QSym<Q>| comps.iter().map(|a| f.coeff(a)).collect::<Vec<Q>>();
        let rows: Vec<Vec<Q>> = Partition::all_of(n)
            .iter()
            .map(|mu| {
                let f = mu.parts().iter().fold(QSym::one(n), |acc, &k| acc.mul(&q_function(k, n).unwrap()));
                vector(&f)
            })
            .collect();
        for lam in Partition::strict_of(n) {
            assert!(in_span(&rows, &vector(&schur_q(&lam, n).unwrap())), "Q_{lam}");
        }
        // h_n is not in the span once n ≥ 2
        if n >= 2 {
            assert!(!in_span(&rows, &vector(&complete_h(n, n).unwrap())));
        }
    }
}

#[test]
fn pieri_products_are_schur_positive() {
    for a in 1..=4 {
        for b in 1..=a {
            let d = a + b;
            let f: QSym<Q> = complete_h(a, d).unwrap().mul(&complete_h(b, d).unwrap());
            let e = schur_expand(&f).unwrap();
            for k in 0..=b {
                assert_eq!(e.coeff(&Partition::new(vec![d - k, k])), Q::one());
            }
            assert_eq!(e.terms.len(), b + 1);
            let (_, cert) = schur_positive(&f).unwrap();
            assert!(cert.positive && cert.integral);
        }
    }
}

#[test]
fn schur_q_expansions_recover_q_products() {
    // q_2 q_1 = 2 Q_(3) + Q_(2,1) = 4 P_(3) + 4 P_(2,1)
    let f: QSym<Q> = q_function(2, 3).unwrap().mul(&q_function(1, 3).unwrap());
    let e = schur_q_expand(&f).unwrap();
    assert_eq!(e.coeff(&Partition::new(vec![3])), qi(2));
    assert_eq!(e.coeff(&Partition::new(vec![2, 1])), Q::one());
    let p = schur_p_expand(&f).unwrap();
    assert_eq!(p.coeff(&Partition::new(vec![2, 1])), qi(4));
    // s_(1,1) = e_2 is symmetric but outside the span of the Q_λ
    let s11: QSym<Q> = schur(&Partition::new(vec![1, 1]), 2).unwrap();
    assert!(matches!(schur_q_expand(&s11), Err(wordbialg::Error::Residual(_))));
    // Q_(2) - Q_(1)^2/2 = 0, while Q_(2) - Q_(1)^2 has a negative coefficient
    let q1: QSym<Q> = schur_q(&Partition::new(vec![1]), 2).unwrap();
    let g = schur_q(&Partition::new(vec![2]), 2).unwrap().sub(&q1.mul(&q1));
    let e = schur_q_expand(&g).unwrap();
    assert!(e.terms.iter().any(|(_, c)| c.is_negative()));
}
