//! The bialgebra `W` of anchored words, its packed quotient `W_P`, and the
//! dual structure maps, with bounded axiom verifiers.

pub mod maps;
pub mod verify;

pub use maps::*;
pub use verify::{
    duality_pairing_check, verify_bialgebra_axioms, AxiomResult, BasedBialgebra, Bounds, DropEmptyPrefix,
    PackedBialgebra, Status, WordBialgebra,
};
