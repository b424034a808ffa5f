//! Assembles the module operations and cited facts into proof transcripts.

pub mod cases;
pub mod facts;
pub mod fixtures;
mod phases;
mod recorder;
pub mod report;
pub mod transcript;

pub use cases::{run_complex_case, run_complex_with, run_tame_case, run_tame_with, run_wild_case, run_wild_with};
pub use facts::{Axiom, FactTable};
pub use fixtures::{CaseFixture, Perturbation, PERTURBATIONS};
pub use report::{supersingularity_report, SupersingularityReport};
pub use transcript::{CaseTag, ProofStep, ProofTranscript, Verdict};

/// Directory for transcript files written by the command-line tool.
pub const TRANSCRIPT_DIR_ENV: &str = "ORDER66_TRANSCRIPT_DIR";
