//! Unweighted all-pairs distances (BFS per vertex) and the per-edge
//! peripherality counts that feed the Mostar and Szeged indices.

use std::collections::VecDeque;

use crate::graph::{Graph, GraphError};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path distances; unreachable pairs hold a sentinel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.d[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite distance; `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.is_connected().then(|| self.d.iter().copied().max().unwrap_or(0))
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        let row = &mut d[start * n..(start + 1) * n];
        row[start] = 0;
        queue.clear();
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Largest finite distance of `g`, or `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<u32> {
    all_pairs_distances(g).diameter()
}

/// Peripherality counts of one edge `(u, v)`: how many vertices sit strictly
/// closer to `u`, strictly closer to `v`, or at equal distance. The
/// endpoints themselves count toward their own side, so
/// `closer_u + closer_v + equidistant = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgePeripherality {
    pub u: usize,
    pub v: usize,
    pub closer_u: usize,
    pub closer_v: usize,
    pub equidistant: usize,
}

/// Computes peripherality counts for every edge by comparing distance rows.
///
/// Errors on disconnected graphs: the counts compare distances that must all
/// be finite.
pub fn edge_peripherality(
    g: &Graph,
    distances: &DistanceMatrix,
) -> Result<Vec<EdgePeripherality>, GraphError> {
    if !distances.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.order();
    let mut out = Vec::with_capacity(g.size());
    for &(u, v) in g.edges() {
        let (mut cu, mut cv, mut eq) = (0, 0, 0);
        for w in 0..n {
            let du = distances.get(w, u).expect("connected");
            let dv = distances.get(w, v).expect("connected");
            match du.cmp(&dv) {
                std::cmp::Ordering::Less => cu += 1,
                std::cmp::Ordering::Greater => cv += 1,
                std::cmp::Ordering::Equal => eq += 1,
            }
        }
        out.push(EdgePeripherality { u, v, closer_u: cu, closer_v: cv, equidistant: eq });
    }
    Ok(out)
}
