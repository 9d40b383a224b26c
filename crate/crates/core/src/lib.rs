//! Words that represent graphs under consecutive pattern avoidance.
//!
//! A word `w` over `[n]` represents a labeled graph `G = ([n], E)` under a
//! pattern `u` over `{1, 2}` when each pair `xy` is an edge exactly when the
//! restriction of `w` to `{x, y}` contains no consecutive occurrence of `u`.
//! For every pattern of length at least 3 every graph has such a word, and
//! [`construct`] builds one; for length-2 patterns [`find_representation`]
//! searches within a length budget.

pub mod error;
pub mod graphs;
pub mod represent;
pub mod search;
pub mod words;

pub use error::{Error, Result};
pub use graphs::{complete_graph, parse_graph, GraphFormat, LabeledGraph};
pub use represent::{construct, plan, verify, ConstructionPlan, ConstructionTrace, VerifyReport};
pub use search::{
    classify_labelings, find_representation, oracle_cross_check, SearchConfig, SearchOutcome,
};
pub use words::{find_matches, has_match, MatchReport, Pattern, Word};
