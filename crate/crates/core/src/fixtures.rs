//! Frames used throughout the documentation, examples and tests.

use crate::format::{parse_iaf_with, ParseOptions};
use crate::iaf::Iaf;
use crate::reductions::QbfInstance;

pub const RUNNING_EXAMPLE: &str = include_str!("../fixtures/running_example.iaf");
pub const RUNNING_EXAMPLE_ATIAF: &str = include_str!("../fixtures/running_example_atiaf.iaf");
pub const MUTUAL_RELEVANCE: &str = include_str!("../fixtures/mutual_relevance.iaf");
pub const GROUNDED_DIVERGENCE: &str = include_str!("../fixtures/grounded_divergence.iaf");
pub const TWO_CLAUSE_QBF: &str = include_str!("../fixtures/two_clause.pi2");

/// All frame fixtures by file name.
pub const ALL_FRAMES: [(&str, &str); 4] = [
    ("running_example.iaf", RUNNING_EXAMPLE),
    ("running_example_atiaf.iaf", RUNNING_EXAMPLE_ATIAF),
    ("mutual_relevance.iaf", MUTUAL_RELEVANCE),
    ("grounded_divergence.iaf", GROUNDED_DIVERGENCE),
];

fn load(text: &str) -> Iaf {
    parse_iaf_with(text, ParseOptions::default()).expect("bundled fixture parses")
}

/// Six certain arguments a,b,c,e,f,g, uncertain d and h, four certain and
/// five uncertain attacks.
pub fn running_example() -> Iaf {
    load(RUNNING_EXAMPLE)
}

/// The running example with its uncertain arguments made certain and
/// guarded by uncertain attacks from a fresh argument `w`.
pub fn running_example_atiaf() -> Iaf {
    load(RUNNING_EXAMPLE_ATIAF)
}

/// A frame where one attack is relevant both to add and to remove.
pub fn mutual_relevance() -> Iaf {
    load(MUTUAL_RELEVANCE)
}

/// A frame where grounded and complete relevance disagree.
pub fn grounded_divergence() -> Iaf {
    load(GROUNDED_DIVERGENCE)
}

/// `(¬x1 ∨ y2) ∧ (¬y2 ∨ y3)` with universal `x1`.
pub fn two_clause_qbf() -> QbfInstance {
    TWO_CLAUSE_QBF.parse().expect("bundled fixture parses")
}
