//! Text formats for graphs: the edge-list format and short-form graph6.
//!
//! Edge list:
//!
//! ```text
//! # optional comment lines
//! n 3
//! e 1 2
//! e 2 3
//! ```
//!
//! graph6 vertices `0..n-1` map to `1..=n`.

use std::collections::BTreeSet;
use std::str::FromStr;

use super::LabeledGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edges" | "edge-list" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!(
                "unknown graph format {other:?} (expected edges or graph6)"
            )),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<LabeledGraph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let mut graphs = parse_graph6_corpus(text)?;
            match graphs.len() {
                1 => Ok(graphs.pop().unwrap()),
                count => Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("expected exactly one graph6 line, found {count}"),
                }),
            }
        }
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut n: Option<u32> = None;
    let mut edges = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<(usize, &str)> = raw
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - raw.as_ptr() as usize + 1, t))
            .collect();
        let number = |(column, token): (usize, &str)| -> Result<u32> {
            token.parse::<u32>().map_err(|_| {
                parse_error(
                    line_no,
                    column,
                    format!("expected an integer, found {token:?}"),
                )
            })
        };

        match tokens[0].1 {
            "n" => {
                if tokens.len() != 2 {
                    return Err(parse_error(line_no, 1, "header must be `n <N>`"));
                }
                if n.is_some() {
                    return Err(parse_error(line_no, 1, "duplicate `n` header"));
                }
                let value = number(tokens[1])?;
                if value < 1 {
                    return Err(parse_error(line_no, tokens[1].0, "n must be at least 1"));
                }
                n = Some(value);
            }
            "e" => {
                let Some(n) = n else {
                    return Err(parse_error(line_no, 1, "edge before the `n <N>` header"));
                };
                if tokens.len() != 3 {
                    return Err(parse_error(line_no, 1, "edge must be `e <i> <j>`"));
                }
                let i = number(tokens[1])?;
                let j = number(tokens[2])?;
                for v in [i, j] {
                    if v < 1 || v > n {
                        return Err(Error::Range {
                            line: line_no,
                            vertex: v,
                            n,
                        });
                    }
                }
                if i >= j {
                    return Err(parse_error(
                        line_no,
                        tokens[1].0,
                        format!("edge ({i},{j}) must satisfy i < j"),
                    ));
                }
                if !edges.insert((i, j)) {
                    return Err(Error::DuplicateEdge {
                        line: line_no,
                        i,
                        j,
                    });
                }
            }
            other => {
                return Err(parse_error(
                    line_no,
                    tokens[0].0,
                    format!("expected `n` or `e`, found {other:?}"),
                ))
            }
        }
    }

    let n = n.ok_or_else(|| parse_error(1, 1, "missing `n <N>` header"))?;
    Ok(LabeledGraph { n, edges })
}

/// Decodes one short-form graph6 string (no trailing newline).
pub fn parse_graph6(line: &str) -> Result<LabeledGraph> {
    parse_graph6_line(line, 1)
}

/// Decodes every non-empty line; an optional `>>graph6<<` header is skipped.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<LabeledGraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, l)| parse_graph6_line(l.trim_end(), idx + 1))
        .collect()
}

fn parse_graph6_line(line: &str, line_no: usize) -> Result<LabeledGraph> {
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let offset = line.len() - body.len();
    let bytes = body.as_bytes();

    let Some(&first) = bytes.first() else {
        return Err(parse_error(line_no, 1, "empty graph6 string"));
    };
    if first == b'~' {
        return Err(parse_error(
            line_no,
            offset + 1,
            "only short-form graph6 (n <= 62) is supported",
        ));
    }
    if !(63..=126).contains(&first) {
        return Err(parse_error(line_no, offset + 1, "invalid graph6 size byte"));
    }
    let n = (first - 63) as u32;
    if n == 0 {
        return Err(Error::BadSize);
    }

    let pairs = (n * (n - 1) / 2) as usize;
    let expected = pairs.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(parse_error(
            line_no,
            offset + 1,
            format!(
                "graph6 string for n={n} needs {expected} data bytes, found {}",
                bytes.len() - 1
            ),
        ));
    }

    let mut bits = Vec::with_capacity(expected * 6);
    for (pos, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(
                line_no,
                offset + pos + 2,
                "invalid graph6 data byte",
            ));
        }
        let value = b - 63;
        bits.extend((0..6).rev().map(|s| value >> s & 1 == 1));
    }

    // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = BTreeSet::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.insert((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Ok(LabeledGraph { n, edges })
}
