//! Checking and building words that represent labeled graphs.
//!
//! A word `w` with `A(w) = [n]` represents `G = ([n], E)` under a pattern `u`
//! when, for every pair `x < y`, the restriction of `w` to `{x, y}` has no
//! `u`-match exactly when `xy` is an edge.

mod construct;
mod plan;

pub use construct::{
    construct, length_bound, prefix_block_return, prefix_one_k, prefix_ones_two, prefix_ones_twos,
    ConstructionTrace, TraceStep,
};
pub use plan::{plan, ConstructionPlan, Core, GraphTransform, WordTransform};

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{all_pairs, LabeledGraph};
use crate::words::{Pattern, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    /// The pair is an edge but its restriction has a match starting at `at` (1-based).
    EdgeWithMatch { at: usize },
    /// The pair is a non-edge but its restriction avoids the pattern.
    NonEdgeWithoutMatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub pair: (u32, u32),
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.pair;
        match self.kind {
            ViolationKind::EdgeWithMatch { at } => {
                write!(f, "pair ({x},{y}) edge-with-match at {at}")
            }
            ViolationKind::NonEdgeWithoutMatch => {
                write!(f, "pair ({x},{y}) non-edge-without-match")
            }
        }
    }
}

/// Outcome of [`verify`]; violations are sorted by pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Errors with [`Error::AlphabetMismatch`] unless the word uses exactly the letters `1..=n`.
pub fn check_alphabet(w: &Word, n: u32) -> Result<()> {
    let alphabet = w.alphabet();
    let missing: Vec<u32> = (1..=n).filter(|v| !alphabet.contains(v)).collect();
    let extra: Vec<u32> = alphabet.iter().copied().filter(|&v| v > n).collect();
    if missing.is_empty() && extra.is_empty() {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { n, missing, extra })
    }
}

pub fn verify(w: &Word, g: &LabeledGraph, u: &Pattern) -> Result<VerifyReport> {
    check_alphabet(w, g.n())?;
    let mut violations = Vec::new();
    let mut buf = Vec::with_capacity(w.len());
    for (x, y) in all_pairs(g.n()) {
        buf.clear();
        buf.extend(w.letters().iter().copied().filter(|&l| l == x || l == y));
        let hit = u.first_match(&buf);
        let kind = match (g.has_edge(x, y), hit) {
            (true, Some(at)) => Some(ViolationKind::EdgeWithMatch { at }),
            (false, None) => Some(ViolationKind::NonEdgeWithoutMatch),
            _ => None,
        };
        if let Some(kind) = kind {
            violations.push(Violation { pair: (x, y), kind });
        }
    }
    Ok(VerifyReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// Shorthand for `verify(..)?.ok`.
pub fn represents(w: &Word, g: &LabeledGraph, u: &Pattern) -> Result<bool> {
    Ok(verify(w, g, u)?.ok)
}
