//! Labeled simple graphs on the vertex set `[n] = {1, ..., n}`.

mod format;

pub use format::{parse_edge_list, parse_graph, parse_graph6, parse_graph6_corpus, GraphFormat};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on `[n]`; each edge is stored as `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl LabeledGraph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadSize);
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i >= j {
                return Err(Error::BadEdgeOrder { i, j });
            }
            if i < 1 || j > n {
                return Err(Error::VertexOutOfRange {
                    vertex: if i < 1 { i } else { j },
                    n,
                });
            }
            if !set.insert((i, j)) {
                return Err(Error::DuplicateEdge { line: 0, i, j });
            }
        }
        Ok(LabeledGraph { n, edges: set })
    }

    pub fn edgeless(n: u32) -> Result<Self> {
        LabeledGraph::new(n, [])
    }

    /// Graph on `[n]` whose edges are the pairs selected by the bits of `mask`,
    /// pairs taken in lexicographic order (bit 0 is `(1,2)`).
    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        let edges = all_pairs(n)
            .enumerate()
            .filter(|(idx, _)| mask >> idx & 1 == 1)
            .map(|(_, e)| e);
        LabeledGraph::new(n, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Adjacency test; argument order does not matter.
    pub fn has_edge(&self, x: u32, y: u32) -> bool {
        let key = if x < y { (x, y) } else { (y, x) };
        self.edges.contains(&key)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// All pairs `i < j` that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(u32, u32)> {
        all_pairs(self.n)
            .filter(|e| !self.edges.contains(e))
            .collect()
    }

    pub fn remove_edge(&mut self, i: u32, j: u32) -> bool {
        self.edges.remove(&(i.min(j), i.max(j)))
    }

    /// Relabels vertex `x` as `n + 1 - x`.
    pub fn supplement(&self) -> LabeledGraph {
        let n = self.n;
        LabeledGraph {
            n,
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| (n + 1 - j, n + 1 - i))
                .collect(),
        }
    }

    /// Relabels vertex `x` as `labels[x - 1]`; `labels` must be a permutation of `[n]`.
    pub fn relabel(&self, labels: &[u32]) -> LabeledGraph {
        assert_eq!(labels.len(), self.n as usize, "labeling must cover [n]");
        LabeledGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (labels[i as usize - 1], labels[j as usize - 1]);
                    (a.min(b), a.max(b))
                })
                .collect(),
        }
    }

    /// The subgraph induced on `keep`, relabeled `1..=|keep|` in increasing
    /// order. The second value lists the original vertex behind each new label.
    pub fn induced_subgraph(&self, keep: &BTreeSet<u32>) -> Result<(LabeledGraph, Vec<u32>)> {
        if keep.is_empty() || keep.iter().any(|&v| v < 1 || v > self.n) {
            return Err(Error::BadVertexSet(keep.iter().copied().collect()));
        }
        let originals: Vec<u32> = keep.iter().copied().collect();
        let mut edges = BTreeSet::new();
        for (a, &x) in originals.iter().enumerate() {
            for (b, &y) in originals.iter().enumerate().skip(a + 1) {
                if self.edges.contains(&(x, y)) {
                    edges.insert((a as u32 + 1, b as u32 + 1));
                }
            }
        }
        let graph = LabeledGraph {
            n: originals.len() as u32,
            edges,
        };
        Ok((graph, originals))
    }

    /// Canonical edge-list text: `n <N>` then `e <i> <j>` lines in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (i, j) in &self.edges {
            out.push_str(&format!("e {i} {j}\n"));
        }
        out
    }

    /// Short-form graph6 encoding (requires `n <= 62`).
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "short-form graph6 holds at most 62 vertices");
        let mut bits = Vec::new();
        for j in 2..=self.n {
            for i in 1..j {
                bits.push(self.edges.contains(&(i, j)));
            }
        }
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut value = 0u8;
            for (pos, &bit) in chunk.iter().enumerate() {
                if bit {
                    value |= 1 << (5 - pos);
                }
            }
            out.push((value + 63) as char);
        }
        out
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

pub fn complete_graph(n: u32) -> Result<LabeledGraph> {
    LabeledGraph::new(n, all_pairs(n))
}

/// Every pair `(i, j)` with `1 <= i < j <= n`, lexicographically.
pub fn all_pairs(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}
