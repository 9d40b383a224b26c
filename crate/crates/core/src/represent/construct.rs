//! Building a representing word by removing edges from the complete graph.
//!
//! Start from `1 2 ... n`, which represents `K_n` for every pattern of length
//! at least 3. Each non-edge `ij` of the target graph is then removed in
//! lexicographic order by prepending a prefix built for the plan's core; the
//! old word stays a suffix, so no other pair changes status.

use crate::error::{Error, Result};
use crate::graphs::{complete_graph, LabeledGraph};
use crate::words::{Pattern, Word};

use super::plan::{plan, ConstructionPlan, Core, GraphTransform, WordTransform};

fn check_edge(i: u32, j: u32, n: u32) -> Result<()> {
    if i < 1 || i >= j {
        return Err(Error::BadEdgeOrder { i, j });
    }
    if j > n {
        return Err(Error::VertexOutOfRange { vertex: j, n });
    }
    Ok(())
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::UnsupportedPattern("1".repeat(k)));
    }
    Ok(())
}

/// `i^(k-1) π i p(w)` where `π` lists `[n] \ {i, j}` ascending and `p(w)` is
/// the initial permutation of the current word.
pub fn prefix_one_k(i: u32, j: u32, k: usize, n: u32, w: &Word) -> Result<Word> {
    check_edge(i, j, n)?;
    check_k(k)?;
    let mut out = vec![i; k - 1];
    out.extend((1..=n).filter(|&v| v != i && v != j));
    out.push(i);
    out.extend_from_slice(w.initial_permutation().letters());
    Ok(Word::from_vec(out))
}

/// `u[i,j] 1^(b+1) 2^(b+1) ... n^(b+1)` for `u = 1^a 2^b 1 ...`.
pub fn prefix_block_return(i: u32, j: u32, u: &Pattern, n: u32) -> Result<Word> {
    check_edge(i, j, n)?;
    let letters = u.letters();
    let a = letters.iter().take_while(|&&l| l == 1).count();
    let b = letters[a..].iter().take_while(|&&l| l == 2).count();
    if a == 0 || b == 0 || a + b >= letters.len() {
        return Err(Error::WrongCore {
            pattern: u.to_string(),
            core: "block-return",
        });
    }
    let mut out = u.substitute(i, j)?.into_letters();
    for v in 1..=n {
        out.extend(std::iter::repeat_n(v, b + 1));
    }
    Ok(Word::from_vec(out))
}

/// `i^(k-2) (i+1)..(j-1) (j+1)..n  i j (j+1)..n  (i+1)..n`; empty ranges vanish.
pub fn prefix_ones_two(i: u32, j: u32, k: usize, n: u32) -> Result<Word> {
    check_edge(i, j, n)?;
    check_k(k)?;
    let mut out = vec![i; k - 2];
    out.extend(i + 1..j);
    out.extend(j + 1..=n);
    out.push(i);
    out.push(j);
    out.extend(j + 1..=n);
    out.extend(i + 1..=n);
    Ok(Word::from_vec(out))
}

/// `u[i,j] 12..n 12..n` for `u = 1^a 2^b` with `a, b >= 2`.
pub fn prefix_ones_twos(i: u32, j: u32, u: &Pattern, n: u32) -> Result<Word> {
    check_edge(i, j, n)?;
    let letters = u.letters();
    let a = letters.iter().take_while(|&&l| l == 1).count();
    let b = letters[a..].iter().take_while(|&&l| l == 2).count();
    if a < 2 || b < 2 || a + b != letters.len() {
        return Err(Error::WrongCore {
            pattern: u.to_string(),
            core: "ones-twos",
        });
    }
    let mut out = u.substitute(i, j)?.into_letters();
    out.extend(1..=n);
    out.extend(1..=n);
    Ok(Word::from_vec(out))
}

/// Upper bound on the constructed word length: `n + m*k*(n+1)` for `m` removed
/// non-edges and pattern length `k`.
pub fn length_bound(n: u32, removed: usize, k: usize) -> usize {
    n as usize + removed * k * (n as usize + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub removed: (u32, u32),
    pub prefix: Word,
    /// Length of the word after this prefix was prepended.
    pub cumulative_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub plan: ConstructionPlan,
    /// The input graph after the plan's graph transforms.
    pub core_graph: LabeledGraph,
    pub initial_word: Word,
    pub steps: Vec<TraceStep>,
    /// The word before the plan's word transforms; represents `core_graph`
    /// under the effective pattern.
    pub core_word: Word,
    pub final_word: Word,
}

impl ConstructionTrace {
    /// The word after the first `t` steps.
    pub fn word_after(&self, t: usize) -> Word {
        let mut letters = Vec::new();
        for step in self.steps[..t].iter().rev() {
            letters.extend_from_slice(step.prefix.letters());
        }
        letters.extend_from_slice(self.initial_word.letters());
        Word::from_vec(letters)
    }

    /// `K_n` with the first `t` removed pairs deleted.
    pub fn graph_after(&self, t: usize) -> LabeledGraph {
        let mut g = complete_graph(self.core_graph.n()).expect("n >= 1");
        for step in &self.steps[..t] {
            g.remove_edge(step.removed.0, step.removed.1);
        }
        g
    }
}

fn core_prefix(core: &Core, u: &Pattern, i: u32, j: u32, n: u32, current: &Word) -> Result<Word> {
    match core {
        Core::OneK { k } => prefix_one_k(i, j, *k, n, current),
        Core::BlockReturn { .. } => prefix_block_return(i, j, u, n),
        Core::OnesTwo { k } => prefix_ones_two(i, j, *k, n),
        Core::OnesTwos { .. } => prefix_ones_twos(i, j, u, n),
    }
}

/// A word representing `g` under `u` (for `|u| >= 3`), with the step-by-step trace.
pub fn construct(g: &LabeledGraph, u: &Pattern) -> Result<(Word, ConstructionTrace)> {
    let plan = plan(u)?;
    let n = g.n();

    let mut core_graph = g.clone();
    for t in &plan.pre_transforms {
        core_graph = match t {
            GraphTransform::SupplementGraph => core_graph.supplement(),
        };
    }

    let initial_word = Word::identity(n);
    let mut word = initial_word.clone();
    let mut steps = Vec::new();
    for (i, j) in core_graph.non_edges() {
        let prefix = core_prefix(&plan.core, &plan.effective_pattern, i, j, n, &word)?;
        word = prefix.concat(&word);
        steps.push(TraceStep {
            removed: (i, j),
            prefix,
            cumulative_len: word.len(),
        });
    }

    let core_word = word.clone();
    for t in &plan.post_transforms {
        word = match t {
            WordTransform::ComplementWord => word.complement(n)?,
            WordTransform::ReverseWord => word.reverse(),
        };
    }

    let trace = ConstructionTrace {
        plan,
        core_graph,
        initial_word,
        steps,
        core_word,
        final_word: word.clone(),
    };
    Ok((word, trace))
}
