//! Bounded exhaustive search for representing words.
//!
//! Candidates over `[n]` are visited by length, then lexicographically, and
//! words missing a letter of `[n]` are skipped. This is the only decision
//! procedure for length-2 patterns and serves as an independent oracle for
//! the constructions otherwise.
//!
//! Work is split into fixed-size index chunks scanned in parallel with
//! `find_first`, so the reported word is always the first hit in enumeration
//! order whatever the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::represent::{construct, verify, Violation};
use crate::words::{Pattern, Word};

const CHUNK: u128 = 1 << 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Longest candidate word considered.
    pub max_len: usize,
    /// When false the whole budget is scanned and every representing word is counted.
    pub stop_at_first: bool,
    /// Sweep all labelings of the graph instead of searching the given one.
    pub labeling_sweep: bool,
    /// Worker cap; `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

impl SearchConfig {
    pub fn new(max_len: usize) -> Self {
        SearchConfig {
            max_len,
            stop_at_first: true,
            labeling_sweep: false,
            threads: None,
        }
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// First representing word in enumeration order.
    pub found: Option<Word>,
    /// Candidates with full alphabet that were checked.
    pub words_examined: u64,
    pub budget: usize,
    /// Number of representing words seen (1 or 0 when stopping at the first).
    pub hits: u64,
}

/// Adjacency matrix plus pattern, specialised for repeated checks.
struct Checker<'a> {
    n: usize,
    adjacent: Vec<bool>,
    pattern: &'a Pattern,
}

impl<'a> Checker<'a> {
    fn new(g: &LabeledGraph, pattern: &'a Pattern) -> Self {
        let n = g.n() as usize;
        let mut adjacent = vec![false; n * n];
        for (i, j) in g.edges() {
            adjacent[(i as usize - 1) * n + j as usize - 1] = true;
        }
        Checker {
            n,
            adjacent,
            pattern,
        }
    }

    fn covers(&self, letters: &[u32]) -> bool {
        let mut seen = 0u64;
        for &l in letters {
            seen |= 1 << (l - 1);
        }
        seen.count_ones() as usize == self.n
    }

    /// Assumes `covers(letters)`.
    fn represents(&self, letters: &[u32], buf: &mut Vec<u32>) -> bool {
        for x in 1..=self.n as u32 {
            for y in x + 1..=self.n as u32 {
                buf.clear();
                buf.extend(letters.iter().copied().filter(|&l| l == x || l == y));
                let edge = self.adjacent[(x as usize - 1) * self.n + y as usize - 1];
                if edge == self.pattern.first_match(buf).is_some() {
                    return false;
                }
            }
        }
        true
    }
}

/// Writes the `index`-th word of length `letters.len()` over `[n]` in lexicographic order.
fn decode(mut index: u128, n: u32, letters: &mut [u32]) {
    for slot in letters.iter_mut().rev() {
        *slot = (index % n as u128) as u32 + 1;
        index /= n as u128;
    }
}

fn with_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(job),
        None => job(),
    }
}

pub fn find_representation(
    g: &LabeledGraph,
    u: &Pattern,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    let n = g.n();
    if cfg.max_len < n as usize {
        return Err(Error::BudgetTooSmall {
            max_len: cfg.max_len,
            n,
        });
    }
    if n > 64 {
        return Err(Error::VertexOutOfRange { vertex: n, n: 64 });
    }
    Ok(with_pool(cfg.threads, || scan(g, u, cfg)))
}

fn scan(g: &LabeledGraph, u: &Pattern, cfg: &SearchConfig) -> SearchOutcome {
    let n = g.n();
    let checker = Checker::new(g, u);
    let mut outcome = SearchOutcome {
        found: None,
        words_examined: 0,
        budget: cfg.max_len,
        hits: 0,
    };

    for len in n as usize..=cfg.max_len {
        let space = (n as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        let mut start = 0u128;
        while start < space {
            let size = (space - start).min(CHUNK) as u64;
            let candidate = |offset: u64| {
                let mut letters = vec![0; len];
                decode(start + offset as u128, n, &mut letters);
                letters
            };
            let is_hit = |offset: u64| {
                let letters = candidate(offset);
                checker.covers(&letters)
                    && checker.represents(&letters, &mut Vec::with_capacity(len))
            };
            let covering = |range: std::ops::Range<u64>| {
                range
                    .into_par_iter()
                    .filter(|&o| checker.covers(&candidate(o)))
                    .count() as u64
            };

            if cfg.stop_at_first {
                if let Some(offset) = (0..size).into_par_iter().find_first(|&o| is_hit(o)) {
                    outcome.words_examined += covering(0..offset + 1);
                    outcome.found = Some(Word::from_vec(candidate(offset)));
                    outcome.hits = 1;
                    return outcome;
                }
                outcome.words_examined += covering(0..size);
            } else {
                outcome.words_examined += covering(0..size);
                if outcome.found.is_none() {
                    if let Some(offset) = (0..size).into_par_iter().find_first(|&o| is_hit(o)) {
                        outcome.found = Some(Word::from_vec(candidate(offset)));
                    }
                }
                outcome.hits += (0..size).into_par_iter().filter(|&o| is_hit(o)).count() as u64;
            }
            start += size as u128;
        }
    }
    outcome
}

/// Lexicographic successor of a permutation, or `false` at the last one.
fn next_permutation(perm: &mut [u32]) -> bool {
    let Some(pivot) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let swap = perm.iter().rposition(|&x| x > perm[pivot]).unwrap();
    perm.swap(pivot, swap);
    perm[pivot + 1..].reverse();
    true
}

/// Searches every relabeling of `h`. Each entry pairs a labeling (vertex `x`
/// of `h` gets label `labeling[x - 1]`) with the search outcome for the
/// relabeled graph; labelings come in lexicographic order.
pub fn classify_labelings(
    h: &LabeledGraph,
    u: &Pattern,
    cfg: &SearchConfig,
) -> Result<Vec<(Vec<u32>, SearchOutcome)>> {
    let n = h.n();
    if n > 8 {
        return Err(Error::TooManyLabelings(n));
    }
    let mut labeling: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let outcome = find_representation(&h.relabel(&labeling), u, cfg)?;
        out.push((labeling.clone(), outcome));
        if !next_permutation(&mut labeling) {
            break;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscrepancyKind {
    /// The constructed word failed verification.
    ConstructionRejected(Vec<Violation>),
    /// Bounded search found nothing within the constructed word's length.
    SearchExhausted { budget: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub graph: LabeledGraph,
    pub kind: DiscrepancyKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub graphs_checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Runs construction and bounded search side by side on every labeled graph
/// with at most `n_max` vertices (intended for `n_max <= 4`). The search
/// budget for each graph is the length of the constructed word.
pub fn oracle_cross_check(
    n_max: u32,
    u: &Pattern,
    threads: Option<usize>,
) -> Result<CrossCheckReport> {
    let mut report = CrossCheckReport::default();
    for n in 1..=n_max {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = LabeledGraph::from_mask(n, mask)?;
            report.graphs_checked += 1;
            let (word, _) = construct(&g, u)?;
            let verdict = verify(&word, &g, u)?;
            if !verdict.ok {
                report.discrepancies.push(Discrepancy {
                    graph: g.clone(),
                    kind: DiscrepancyKind::ConstructionRejected(verdict.violations),
                });
            }
            let cfg = SearchConfig::new(word.len()).with_threads(threads);
            let outcome = find_representation(&g, u, &cfg)?;
            if outcome.found.is_none() {
                report.discrepancies.push(Discrepancy {
                    graph: g,
                    kind: DiscrepancyKind::SearchExhausted { budget: word.len() },
                });
            }
        }
    }
    Ok(report)
}
