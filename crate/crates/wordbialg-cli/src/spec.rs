//! Experiment specifications and their resource caps.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};
use wordbialg::character::Character;
use wordbialg::relation::universe::Space;
use wordbialg::relation::{RelationPresentation, UniverseKind};

use crate::report::Format;

/// Packed-word length reachable without `--extended`.
pub const CI_MAX_LEN: usize = 7;
/// Packed-word length reachable with `--extended`.
pub const EXTENDED_MAX_LEN: usize = 9;
/// Default cap on closure universes, in words.
pub const DEFAULT_CAP: u128 = 20_000_000;

/// A bound outside the configured caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapExceeded(pub String);

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "resource cap exceeded: {}", self.0)
    }
}

impl std::error::Error for CapExceeded {}

/// One command invocation with all of its bounds.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentSpec {
    pub command: String,
    /// Built-in name or presentation file.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    /// Closure alphabet `[n]`; packed-word mode when absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<u8>,
    pub max_len: usize,
    pub headroom: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub character: Character,
    pub format: Format,
    pub extended: bool,
    pub cap: u128,
    pub seed: u64,
}

impl ExperimentSpec {
    pub fn new(command: &str) -> Self {
        ExperimentSpec {
            command: command.into(),
            relation: None,
            alphabet: None,
            max_len: CI_MAX_LEN,
            headroom: 2,
            degree: None,
            character: Character::LE,
            format: Format::Text,
            extended: false,
            cap: DEFAULT_CAP,
            seed: 0,
        }
    }

    pub fn relation(mut self, r: &str) -> Self {
        self.relation = Some(r.into());
        self
    }

    pub fn alphabet(mut self, n: u8) -> Self {
        self.alphabet = Some(n);
        self
    }

    pub fn max_len(mut self, l: usize) -> Self {
        self.max_len = l;
        self
    }

    pub fn headroom(mut self, h: usize) -> Self {
        self.headroom = h;
        self
    }

    pub fn character(mut self, c: Character) -> Self {
        self.character = c;
        self
    }

    pub fn extended(mut self, e: bool) -> Self {
        self.extended = e;
        self
    }

    /// The presentation named by `--relation`, or `default`.
    pub fn presentation(&self, default: &str) -> anyhow::Result<RelationPresentation> {
        Ok(RelationPresentation::resolve(self.relation.as_deref().unwrap_or(default))?)
    }

    /// Largest packed-word length allowed under the `--extended` setting.
    pub fn packed_len_cap(&self) -> usize {
        if self.extended {
            EXTENDED_MAX_LEN
        } else {
            CI_MAX_LEN
        }
    }

    /// Rejects packed lengths beyond the cap.
    pub fn check_packed_len(&self, len: usize) -> Result<(), CapExceeded> {
        let cap = self.packed_len_cap();
        if len > cap {
            let hint = if self.extended { "" } else { "; pass --extended for lengths up to 9" };
            return Err(CapExceeded(format!("packed length {len} exceeds {cap}{hint}")));
        }
        Ok(())
    }

    /// Rejects closure universes larger than `--cap` words.
    pub fn check_universe(&self, kind: UniverseKind, max_len: usize) -> Result<(), CapExceeded> {
        let needed = Space::size_of(kind, max_len);
        if needed > self.cap {
            return Err(CapExceeded(format!("universe of {needed} words exceeds the cap of {}", self.cap)));
        }
        Ok(())
    }

    /// Content that determines a result: the resolved presentation and the bounds.
    pub fn key_material(&self, p: &RelationPresentation) -> Value {
        json!({
            "command": self.command,
            "relation": p.to_json(),
            "alphabet": self.alphabet,
            "max_len": self.max_len,
            "headroom": self.headroom,
            "degree": self.degree,
            "character": self.character.name(),
        })
    }
}
