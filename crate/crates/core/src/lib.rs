//! Relevance of uncertain arguments and attacks for extension verification
//! in incomplete argumentation frameworks.
//!
//! The crate covers Dung semantics on plain frameworks ([`af`]), incomplete
//! frameworks and their completions ([`iaf`]), possible and necessary
//! verification ([`verification`]), relevance and strong relevance
//! ([`relevance`]) and the transformations between problems
//! ([`reductions`]). [`format`], [`generate`] and [`diff`] provide the text
//! format, random instances and the differential test harness.

pub mod af;
pub mod cli;
pub mod diff;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod iaf;
pub mod reductions;
pub mod relevance;
pub mod verification;

pub use af::{arg_set, attack, Af, ArgSet, ArgumentId, Attack, Semantics};
pub use error::{Error, Result};
pub use iaf::{Action, Iaf, UncertainElement};
pub use relevance::{relevance_report, strongly_relevant, RelevanceReport, ReportMode};
pub use verification::{
    necver, posver, stability_status, Method, StabilityAnswer, VerificationStatus,
};

/// Upper bound on the size of anything enumerated exhaustively: the number
/// of uncertain elements of a frame, or the arguments of a framework whose
/// extensions are listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cap(pub usize);

impl Default for Cap {
    fn default() -> Self {
        Cap(20)
    }
}
