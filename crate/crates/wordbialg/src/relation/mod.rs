//! Word relations from generator presentations: bounded closure, class
//! enumeration and classification checks.

pub mod checks;
pub mod closure;
pub mod doubling;
pub mod packed;
pub mod presentation;
pub mod rewrite;
pub mod universe;

pub use checks::{
    braid_lemma_check, check_algebraic, check_p_algebraic, check_uniformly_algebraic, count_destandardizations,
    CheckReport, PropertyReport, Verdict,
};
pub use closure::{bfs_class, close, Class, ClosureBounds, FiniteTypeCertificate, RelationInstance};
pub use doubling::{doubling_check, DoublingReport, PairFailures};
pub use packed::{count_packed_classes, packed_slice_map};
pub use presentation::{Builtin, CoxeterM, GeneratorSource, MValue, RelationPresentation};
pub use rewrite::Rewriter;
pub use universe::UniverseKind;
