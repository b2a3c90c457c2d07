//! Tableaux encoded as words: rows read bottom to top, each row left to right.

use super::composition::Partition;
use super::word::{Letters, Word};

/// Maximal weakly increasing runs of `w`.
pub fn weak_runs(w: &Word) -> Vec<&[u8]> {
    let l = w.letters();
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=l.len() {
        if i == l.len() || l[i - 1] > l[i] {
            if i > start {
                out.push(&l[start..i]);
            }
            start = i;
        }
    }
    out
}

/// Shape of `w` when it is a semistandard tableau word.
pub fn semistandard_shape(w: &Word) -> Option<Partition> {
    let runs = weak_runs(w);
    for pair in runs.windows(2) {
        let (lower, upper) = (pair[0], pair[1]);
        if lower.len() > upper.len() {
            return None;
        }
        if lower.iter().zip(upper).any(|(a, b)| a <= b) {
            return None;
        }
    }
    Some(Partition::new(runs.iter().map(|r| r.len()).collect()))
}

pub fn is_semistandard_tableau(w: &Word) -> bool {
    semistandard_shape(w).is_some()
}

/// Semistandard with no equal adjacent letters.
pub fn is_increasing_tableau(w: &Word) -> bool {
    w.has_no_repeats() && is_semistandard_tableau(w)
}

/// RSK row insertion; returns the rows of the insertion tableau, top row first.
pub fn rsk_rows(w: &Word) -> Vec<Vec<u8>> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for &a in w.letters() {
        let mut x = a;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            match row.iter().position(|&b| b > x) {
                Some(j) => {
                    std::mem::swap(&mut row[j], &mut x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    break;
                }
            }
        }
    }
    rows
}

/// The insertion tableau of `w` encoded as a tableau word.
pub fn rsk_insertion_tableau(w: &Word) -> Word {
    let rows = rsk_rows(w);
    let mut l = Letters::new();
    for row in rows.iter().rev() {
        l.extend_from_slice(row);
    }
    Word::from_letters(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::composition::part;
    use crate::combinat::word::w;

    #[test]
    fn semistandard_examples() {
        assert_eq!(semistandard_shape(&w("645123")), Some(part(&[3, 2, 1])));
        assert_eq!(semistandard_shape(&w("2211")), Some(part(&[2, 2])));
        assert_eq!(semistandard_shape(&w("655133")), Some(part(&[3, 2, 1])));
        assert_eq!(semistandard_shape(&w("")), Some(part(&[])));
        assert_eq!(semistandard_shape(&w("1122")), Some(part(&[4])));
        assert!(semistandard_shape(&w("1312")).is_none());
        assert!(semistandard_shape(&w("121")).is_none());
    }

    #[test]
    fn increasing_examples() {
        for t in ["", "645123", "5612", "545234"] {
            assert!(is_increasing_tableau(&w(t)), "{t}");
        }
        assert!(!is_increasing_tableau(&w("655133")));
        assert!(!is_increasing_tableau(&w("2211")));
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(rsk_insertion_tableau(&w("132")), rsk_insertion_tableau(&w("312")));
        assert_eq!(rsk_insertion_tableau(&w("1357")), w("1357"));
        let perms = ["123", "132", "213", "231", "312", "321"];
        let mut ps: Vec<Word> = perms.iter().map(|p| rsk_insertion_tableau(&w(p))).collect();
        ps.sort();
        ps.dedup();
        assert_eq!(ps.len(), 4);
        for p in ps {
            assert!(is_semistandard_tableau(&p));
        }
    }
}
