//! The monotonicity characters `ζ_•` and their convolutions `ζ_{•|∘}`.
//!
//! Every character here is homogeneous: `ζ(w) = c(w) t^{ℓ(w)}` for an integer
//! `c(w)`, so only the integer is stored.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::combinat::Composition;
use crate::error::{Error, Result};

/// One of the four monotonicity predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    /// weakly increasing
    Le,
    /// weakly decreasing
    Ge,
    /// strictly increasing
    Lt,
    /// strictly decreasing
    Gt,
}

impl Order {
    pub const ALL: [Order; 4] = [Order::Le, Order::Ge, Order::Lt, Order::Gt];

    /// Whether the adjacent pair `a, b` is allowed.
    pub fn allows(self, a: u8, b: u8) -> bool {
        match self {
            Order::Le => a <= b,
            Order::Ge => a >= b,
            Order::Lt => a < b,
            Order::Gt => a > b,
        }
    }

    pub fn holds(self, w: &[u8]) -> bool {
        w.windows(2).all(|p| self.allows(p[0], p[1]))
    }

    pub fn name(self) -> &'static str {
        match self {
            Order::Le => "le",
            Order::Ge => "ge",
            Order::Lt => "lt",
            Order::Gt => "gt",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Order::Le => "≤",
            Order::Ge => "≥",
            Order::Lt => "<",
            Order::Gt => ">",
        }
    }

    fn parse(s: &str) -> Option<Order> {
        Some(match s {
            "le" | "≤" | "<=" => Order::Le,
            "ge" | "≥" | ">=" => Order::Ge,
            "lt" | "<" => Order::Lt,
            "gt" | ">" => Order::Gt,
            _ => return None,
        })
    }
}

/// `ζ_•` or the convolution `ζ_• ζ_∘ = ∇_k ∘ (ζ_• ⊗ ζ_∘) ∘ Δ_⊙`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Character {
    Single(Order),
    Conv(Order, Order),
}

impl Character {
    pub const LE: Character = Character::Single(Order::Le);
    pub const GE: Character = Character::Single(Order::Ge);
    pub const LT: Character = Character::Single(Order::Lt);
    pub const GT: Character = Character::Single(Order::Gt);
    /// `ζ_{>|≤}`
    pub const PEAK: Character = Character::Conv(Order::Gt, Order::Le);

    /// The four single characters followed by all sixteen convolutions.
    pub fn all() -> Vec<Character> {
        let mut out: Vec<Character> = Order::ALL.iter().map(|&o| Character::Single(o)).collect();
        for a in Order::ALL {
            for b in Order::ALL {
                out.push(Character::Conv(a, b));
            }
        }
        out
    }

    pub fn name(self) -> String {
        match self {
            Character::Single(o) => o.name().to_string(),
            Character::Conv(a, b) => format!("{}-{}", a.name(), b.name()),
        }
    }

    pub fn symbol(self) -> String {
        match self {
            Character::Single(o) => o.symbol().to_string(),
            Character::Conv(a, b) => format!("{}|{}", a.symbol(), b.symbol()),
        }
    }

    /// The coefficient `c(w)` with `ζ(w) = c(w) t^{ℓ(w)}`.
    pub fn value(self, w: &[u8]) -> i64 {
        match self {
            Character::Single(o) => o.holds(w) as i64,
            Character::Conv(a, b) => (0..=w.len()).filter(|&i| a.holds(&w[..i]) && b.holds(&w[i..])).count() as i64,
        }
    }

    /// `ζ` on a word of length `len` given only through its adjacent
    /// comparisons: `sig[i]` is `0`, `1` or `2` as `w_i` is less than, equal
    /// to or greater than `w_{i+1}`.
    pub(crate) fn value_from_signs(self, len: usize, sig: &[u8]) -> i64 {
        let pair = |x: u8| match x {
            0 => (1, 2),
            1 => (1, 1),
            _ => (2, 1),
        };
        let holds = |o: Order, s: &[u8]| s.iter().all(|&x| {
            let (a, b) = pair(x);
            o.allows(a, b)
        });
        match self {
            Character::Single(o) => holds(o, sig) as i64,
            Character::Conv(a, b) => {
                // split after i letters: prefix signs sig[..i-1], suffix sig[i..]
                (0..=len)
                    .filter(|&i| holds(a, &sig[..i.saturating_sub(1)]) && holds(b, if i >= len { &[] } else { &sig[i..] }))
                    .count() as i64
            }
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Character {
    type Err = Error;

    /// Accepts `le`, `gt-le`, `>|≤`, `gt|le` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(o) = Order::parse(s) {
            return Ok(Character::Single(o));
        }
        let split = s.split_once('|').or_else(|| s.split_once('-'));
        if let Some((a, b)) = split {
            if let (Some(a), Some(b)) = (Order::parse(a), Order::parse(b)) {
                return Ok(Character::Conv(a, b));
            }
        }
        Err(Error::Parse(format!("unknown character {s:?}")))
    }
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// Closed form of `ζ_{>|≤}`: `2` when `w` is strictly decreasing and then
/// weakly increasing (with the turning letter shared), `1` for `∅`, else `0`.
pub fn peak_zeta_closed_form(w: &[u8]) -> i64 {
    if w.is_empty() {
        return 1;
    }
    let mut i = 0;
    while i + 1 < w.len() && w[i] > w[i + 1] {
        i += 1;
    }
    if Order::Le.holds(&w[i..]) {
        2
    } else {
        0
    }
}

/// `ζ_α(w)`: cut `w` into consecutive pieces of lengths `α_i` and multiply the
/// piece values. Zero unless `|α| = ℓ(w)`.
pub fn zeta_alpha(c: Character, w: &[u8], alpha: &Composition) -> i64 {
    if alpha.total() != w.len() {
        return 0;
    }
    let mut pos = 0;
    let mut acc = 1;
    for &p in alpha.parts() {
        acc *= c.value(&w[pos..pos + p]);
        if acc == 0 {
            return 0;
        }
        pos += p;
    }
    acc
}

/// Adjacent comparison signs of `w`, packed base 3 with the length.
pub(crate) fn sign_key(w: &[u8]) -> (usize, u64) {
    let key = w.windows(2).fold(0u64, |k, p| {
        k * 3
            + match p[0].cmp(&p[1]) {
                std::cmp::Ordering::Less => 0,
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => 2,
            }
    });
    (w.len(), key)
}

pub(crate) fn signs_of_key(len: usize, mut key: u64) -> Vec<u8> {
    let m = len.saturating_sub(1);
    let mut out = vec![0u8; m];
    for i in (0..m).rev() {
        out[i] = (key % 3) as u8;
        key /= 3;
    }
    out
}
