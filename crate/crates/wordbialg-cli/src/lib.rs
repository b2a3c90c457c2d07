//! Experiment harness behind the `wordbialg` binary: class listings,
//! relation classification, `ψ`-images, conjecture searches and verification
//! suites, each producing a deterministic [`Report`].

pub mod cache;
pub mod commands;
pub mod conjectures;
pub mod report;
pub mod spec;
pub mod suites;

pub use report::{Format, Outcome, Report};
pub use spec::{CapExceeded, ExperimentSpec};

/// Exit code for a property failure with a witness.
pub const EXIT_PROPERTY: u8 = 2;
/// Exit code for an exceeded resource cap.
pub const EXIT_CAP: u8 = 3;

/// Exit code for an error: resource caps map to [`EXIT_CAP`], anything else to 1.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<CapExceeded>().is_some() {
        return EXIT_CAP;
    }
    match err.downcast_ref::<wordbialg::Error>() {
        Some(wordbialg::Error::UniverseCap { .. }) => EXIT_CAP,
        _ => 1,
    }
}
