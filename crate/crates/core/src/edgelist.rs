//! Plain edge-list format: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex numbers.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}, expected \"n m\"")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: graph needs at least one vertex")]
    ZeroVertices { line: usize },
    #[error("line {line}: malformed edge {text:?}, expected \"u v\"")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: loop edge ({v}, {v})")]
    LoopEdge { line: usize, v: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {v} out of range for order {n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("expected {expected} edge lines, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses the edge-list format. Empty lines are ignored; duplicate edges,
/// loops and out-of-range vertices are rejected with their line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((header_line, header)) = lines.next() else {
        return Err(EdgeListError::MissingHeader);
    };
    let (n, m) = parse_pair(header).ok_or_else(|| EdgeListError::BadHeader {
        line: header_line,
        text: header.to_string(),
    })?;
    if n == 0 {
        return Err(EdgeListError::ZeroVertices { line: header_line });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut count = 0usize;
    for (line, text) in lines {
        count += 1;
        let (u, v) = parse_pair(text).ok_or_else(|| EdgeListError::BadEdge {
            line,
            text: text.to_string(),
        })?;
        if u == v {
            return Err(EdgeListError::LoopEdge { line, v: u });
        }
        for w in [u, v] {
            if w >= n {
                return Err(EdgeListError::VertexOutOfRange { line, v: w, n });
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(EdgeListError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if count != m {
        return Err(EdgeListError::WrongEdgeCount { expected: m, found: count });
    }

    Ok(Graph::new(n, edges).expect("edges validated above"))
}

/// Writes the edge-list format, edges in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
