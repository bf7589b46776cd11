//! Sampling, fixtures, file formats and seeded verification runs.

pub mod compute;
pub mod io;
pub mod sampling;
pub mod verify;

pub use compute::{compute_invariant, parse_face, InvariantKind, InvariantRequest};
pub use io::ConfigFile;
pub use sampling::{moment_curve_configuration, sample_configuration, DEFAULT_BOUND, SAMPLE_RETRY_CAP};
pub use verify::{run_trial, run_verification, RunConfig, RunReport, Statement, TrialReport};
