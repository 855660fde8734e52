//! Command-line front end for `wps-core`: single classifications, Dedekind
//! sum queries, bounded surveys and the randomized self-check.

pub mod format;
pub mod survey;
pub mod verify;

pub use format::Format;
pub use survey::{enumerate_weights, run_survey, Filter, SurveyRecord, SurveySummary};
pub use verify::{run_verify, VerifyReport};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const INVALID_INPUT: u8 = 1;
    pub const VERIFICATION_FAILED: u8 = 2;
}
