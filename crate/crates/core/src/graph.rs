//! Simple undirected graphs with validated construction.

use std::collections::VecDeque;

use thiserror::Error;

/// Errors from building or querying a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph is disconnected; Mostar-type quantities are undefined")]
    Disconnected,
}

/// A simple undirected graph on vertices `0..n`: no loops, no multi-edges.
///
/// Edges are normalized to `(min, max)` pairs and kept sorted, so two graphs
/// compare equal exactly when they have the same order and edge set.
///
/// ```
/// use graphidx::Graph;
/// let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
/// assert_eq!(p4.order(), 4);
/// assert_eq!(p4.size(), 3);
/// assert!(p4.has_edge(2, 1));
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range vertices.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: es, adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True when every vertex has the same degree.
    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// True when the graph is a star: a tree with a universal vertex.
    ///
    /// The single-vertex graph and a lone edge count as (degenerate) stars.
    pub fn is_star(&self) -> bool {
        self.size() == self.n - 1 && self.max_degree() == self.n - 1
    }

    /// BFS reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Triangle count via common neighbors of each edge (each triangle is
    /// seen once per edge, hence the division by 3).
    pub fn triangle_count(&self) -> i64 {
        let mut total: i64 = 0;
        for &(u, v) in &self.edges {
            total += common_neighbor_count(&self.adj[u], &self.adj[v]) as i64;
        }
        total / 3
    }
}

fn common_neighbor_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Two-coloring of a graph, when one exists.
///
/// `side`, `n1` and `n2` are only meaningful while `is_bipartite` is true.
/// The canonical rule: in every component, the part containing the
/// lowest-numbered vertex is part 1 (side 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitionInfo {
    pub is_bipartite: bool,
    /// Per-vertex side, 0 or 1.
    pub side: Vec<u8>,
    /// Size of part 1.
    pub n1: usize,
    /// Size of part 2.
    pub n2: usize,
}

impl BipartitionInfo {
    /// `(n1, n2)` when bipartite.
    pub fn part_sizes(&self) -> Option<(usize, usize)> {
        self.is_bipartite.then_some((self.n1, self.n2))
    }
}

/// Two-colors the graph by BFS; detects odd cycles.
pub fn bipartition(g: &Graph) -> BipartitionInfo {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return BipartitionInfo { is_bipartite: false, side: Vec::new(), n1: 0, n2: 0 };
                }
            }
        }
    }
    let n1 = side.iter().filter(|&&s| s == 0).count();
    BipartitionInfo { is_bipartite: true, side, n1, n2: n - n1 }
}
