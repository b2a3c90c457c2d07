//! Words over the positive integers and anchored words `[w, n]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linear::KeyDisplay;

/// Largest letter a [`Word`] may hold, so letter sets fit a `u64` mask.
pub const MAX_LETTER: u8 = 64;

/// Letter storage; words in this crate rarely exceed sixteen letters.
pub type Letters = SmallVec<[u8; 16]>;

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Letters);

impl Word {
    pub fn empty() -> Self {
        Word(Letters::new())
    }

    /// Builds a word, rejecting zero and letters above [`MAX_LETTER`].
    pub fn new(letters: &[u8]) -> Result<Self> {
        if let Some(&a) = letters.iter().find(|&&a| a == 0 || a > MAX_LETTER) {
            return Err(Error::Domain(format!("letter {a} outside 1..={MAX_LETTER}")));
        }
        Ok(Word(Letters::from_slice(letters)))
    }

    /// Builds a word from letters already known to be valid.
    pub fn from_letters(letters: Letters) -> Self {
        debug_assert!(letters.iter().all(|a| (1..=MAX_LETTER).contains(a)));
        Word(letters)
    }

    pub fn from_slice(letters: &[u8]) -> Self {
        Self::from_letters(Letters::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Letters {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, zero for the empty word.
    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Smallest letter, zero for the empty word.
    pub fn min_letter(&self) -> u8 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut l = self.0.clone();
        l.extend_from_slice(&other.0);
        Word(l)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_slice(&self.0[from..to])
    }

    /// Bit `a - 1` is set for each letter `a`.
    pub fn letter_mask(&self) -> u64 {
        letter_mask(&self.0)
    }

    pub fn num_distinct(&self) -> usize {
        self.letter_mask().count_ones() as usize
    }

    /// Adds `m` to every letter.
    pub fn shift(&self, m: i64) -> Result<Word> {
        let mut l = Letters::with_capacity(self.len());
        for &a in &self.0 {
            let b = a as i64 + m;
            if b < 1 || b > MAX_LETTER as i64 {
                return Err(Error::Domain(format!("shifting {self} by {m} leaves 1..={MAX_LETTER}")));
            }
            l.push(b as u8);
        }
        Ok(Word(l))
    }

    /// `w↑m`.
    pub fn shift_up(&self, m: u8) -> Result<Word> {
        self.shift(m as i64)
    }

    /// `w↓m`.
    pub fn shift_down(&self, m: u8) -> Result<Word> {
        self.shift(-(m as i64))
    }

    /// Subword of letters satisfying `keep`.
    pub fn restrict<F: Fn(u8) -> bool>(&self, keep: F) -> Word {
        Word(self.0.iter().copied().filter(|&a| keep(a)).collect())
    }

    /// `w ∩ {lo, …, hi}`.
    pub fn restrict_range(&self, lo: u8, hi: u8) -> Word {
        self.restrict(|a| lo <= a && a <= hi)
    }

    /// `w ∩ S` for an explicit letter set.
    pub fn restrict_set(&self, set: &[u8]) -> Word {
        self.restrict(|a| set.contains(&a))
    }

    /// `fl(w)`: relabel letters by their rank in the letter set.
    pub fn flatten(&self) -> Word {
        let mask = self.letter_mask();
        Word(self.0.iter().map(|&a| rank_in_mask(mask, a)).collect())
    }

    pub fn is_packed(&self) -> bool {
        let mask = self.letter_mask();
        mask & mask.wrapping_add(1) == 0
    }

    /// `Des(w)`, one-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `Peak(w) = {i : w_{i-1} ≤ w_i > w_{i+1}}`, one-based.
    pub fn peaks(&self) -> Vec<usize> {
        let w = &self.0;
        (2..self.len()).filter(|&i| w[i - 2] <= w[i - 1] && w[i - 1] > w[i]).collect()
    }

    /// `Val(w) = {i : w_{i-1} ≥ w_i < w_{i+1}}`, one-based.
    pub fn valleys(&self) -> Vec<usize> {
        let w = &self.0;
        (2..self.len()).filter(|&i| w[i - 2] >= w[i - 1] && w[i - 1] < w[i]).collect()
    }

    /// True when no two adjacent letters are equal.
    pub fn has_no_repeats(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1])
    }

    /// The word obtained by merging runs of equal adjacent letters.
    pub fn collapse_repeats(&self) -> Word {
        let mut l = Letters::new();
        for &a in &self.0 {
            if l.last() != Some(&a) {
                l.push(a);
            }
        }
        Word(l)
    }
}

/// Letter mask of a letter slice.
pub fn letter_mask(letters: &[u8]) -> u64 {
    letters.iter().fold(0u64, |m, &a| m | 1u64 << (a - 1))
}

/// Rank of letter `a` in the set encoded by `mask`, one-based.
pub fn rank_in_mask(mask: u64, a: u8) -> u8 {
    let below = if a == 1 { 0 } else { mask & ((1u64 << (a - 1)) - 1) };
    below.count_ones() as u8 + 1
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
        } else {
            for (i, a) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `"3421"`, `"10,2,3"`, and `""` or `"∅"` for the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Word::empty());
        }
        let letters: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("{s}: bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(&letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl KeyDisplay for Word {
    fn key_string(&self) -> String {
        if self.is_empty() {
            "∅".into()
        } else {
            self.to_string()
        }
    }
}

/// Shorthand for literal words in tests and examples; panics on bad input.
pub fn w(s: &str) -> Word {
    s.parse().expect("word literal")
}

/// An anchored word `[w, n]` with `max(w) ≤ n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchoredWord {
    pub word: Word,
    pub anchor: u8,
}

impl AnchoredWord {
    pub fn new(word: Word, anchor: u8) -> Result<Self> {
        if word.max_letter() > anchor {
            return Err(Error::Domain(format!("[{word}|{anchor}] has a letter above its anchor")));
        }
        Ok(AnchoredWord { word, anchor })
    }

    /// `[∅, n]`.
    pub fn empty(anchor: u8) -> Self {
        AnchoredWord { word: Word::empty(), anchor }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

impl fmt::Display for AnchoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.word, self.anchor)
    }
}

impl fmt::Debug for AnchoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}|{}]", self.word, self.anchor)
    }
}

impl FromStr for AnchoredWord {
    type Err = Error;

    /// Parses `"[3421|4]"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("{s}: expected [word|anchor]")))?;
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("{s}: expected [word|anchor]")))?;
        let anchor = b.trim().parse::<u8>().map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        AnchoredWord::new(a.parse()?, anchor)
    }
}

impl KeyDisplay for AnchoredWord {
    fn key_string(&self) -> String {
        self.to_string()
    }
}

/// All words of length `len` over `[n]`, in lexicographic order.
pub fn words_of_length(n: u8, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 {
        if len == 0 {
            out.push(Word::empty());
        }
        return out;
    }
    let mut cur = vec![1u8; len];
    loop {
        out.push(Word::from_slice(&cur));
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}

/// All words of length at most `max_len` over `[n]`, shortest first.
pub fn words_up_to(n: u8, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(n, l)).collect()
}

/// All packed words of length `len`, in lexicographic order.
pub fn packed_words(len: usize) -> Vec<Word> {
    words_of_length(len as u8, len).into_iter().filter(Word::is_packed).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_examples() {
        assert_eq!(w("2552").flatten(), w("1221"));
        assert_eq!(w("").flatten(), w(""));
        assert_eq!(w("313").flatten(), w("212"));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(w("1423").restrict_set(&[2, 3, 4]), w("423"));
        assert_eq!(w("1423").restrict_set(&[]), w(""));
        assert_eq!(w("3421").restrict_range(2, 4), w("342"));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w("12").shift(3).unwrap(), w("45"));
        assert_eq!(w("45").shift(-3).unwrap(), w("12"));
        assert_eq!(w("").shift(7).unwrap(), w(""));
        assert!(w("21").shift(-1).is_err());
    }

    #[test]
    fn descent_peak_valley_examples() {
        assert_eq!(w("312").descents(), vec![1]);
        assert_eq!(w("1423").peaks(), vec![2]);
        assert!(w("21").peaks().is_empty());
        assert!(w("1").peaks().is_empty());
        assert_eq!(w("3142").valleys(), vec![2]);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(w("3421").to_string(), "3421");
        let big = Word::new(&[10, 2, 3]).unwrap();
        assert_eq!(big.to_string(), "10,2,3");
        assert_eq!("10,2,3".parse::<Word>().unwrap(), big);
        let a: AnchoredWord = "[3421|4]".parse().unwrap();
        assert_eq!(a.to_string(), "[3421|4]");
        assert!("[3421|3]".parse::<AnchoredWord>().is_err());
        assert!(Word::new(&[0]).is_err());
    }

    #[test]
    fn packedness() {
        assert!(w("").is_packed());
        assert!(w("2131").is_packed());
        assert!(!w("13").is_packed());
        assert_eq!(packed_words(3).len(), 13);
    }
}
