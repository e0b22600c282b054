//! Graph generators: deterministic families, seeded random families, and an
//! exhaustive enumeration of free trees.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::distance::diameter;
use crate::graph::Graph;

/// Attempt budget for rejection-sampled families.
pub const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("resampling budget exceeded after {attempts} attempts")]
    BudgetExceeded { attempts: usize },
}

fn infeasible(msg: impl Into<String>) -> GenerateError {
    GenerateError::Infeasible(msg.into())
}

/// Deterministic RNG for one generated item: `seed` selects the run,
/// `stream` the item, so batches are reproducible and order-independent.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Path 0-1-…-(n-1).
pub fn path(n: usize) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(infeasible("path needs n >= 2"));
    }
    Ok(Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).expect("valid path"))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(infeasible("cycle needs n >= 3"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle"))
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(infeasible("star needs n >= 2"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (0, i))).expect("valid star"))
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(infeasible("complete graph needs n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges).expect("valid complete graph"))
}

/// Complete bipartite graph K_{n1,n2}; part 1 is `0..n1`.
pub fn complete_bipartite(n1: usize, n2: usize) -> Result<Graph, GenerateError> {
    if n1 < 1 || n2 < 1 {
        return Err(infeasible("complete bipartite graph needs n1, n2 >= 1"));
    }
    let edges = (0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v)));
    Ok(Graph::new(n1 + n2, edges).expect("valid complete bipartite graph"))
}

/// Decodes a Prüfer sequence into the labelled tree on `n` vertices.
///
/// The sequence must have length `n - 2` (empty for n = 2).
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(infeasible("Prüfer decoding needs n >= 2"));
    }
    if seq.len() != n - 2 {
        return Err(infeasible(format!(
            "Prüfer sequence for n = {n} must have length {}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(infeasible(format!("Prüfer symbol {v} out of range for n = {n}")));
    }

    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let a = rest.next().expect("two vertices remain");
    let b = rest.next().expect("two vertices remain");
    edges.push((a, b));
    Ok(Graph::new(n, edges).expect("Prüfer decoding yields a tree"))
}

/// Uniform random labelled tree via a uniform Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(infeasible("tree needs n >= 1"));
    }
    if n == 1 {
        return Ok(Graph::new(1, []).expect("single vertex"));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(&seq, n)
}

/// Random connected graph with exactly `m` edges: a uniform random spanning
/// tree plus `m - (n - 1)` distinct extra edges. Connectivity is guaranteed
/// by construction and double-checked before returning.
pub fn random_gnm_connected(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(infeasible("graph needs n >= 1"));
    }
    let max_m = n * (n - 1) / 2;
    if m + 1 < n || m > max_m {
        return Err(infeasible(format!(
            "connected graph on n = {n} needs {} <= m <= {max_m}, got m = {m}",
            n.saturating_sub(1)
        )));
    }
    let tree = random_tree(n, rng)?;
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    let present: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !present.contains(e))
        .collect();
    let extra = m - (n - 1);
    for k in 0..extra {
        let j = rng.random_range(k..candidates.len());
        candidates.swap(k, j);
    }
    edges.extend_from_slice(&candidates[..extra]);
    let g = Graph::new(n, edges).expect("tree plus distinct extras is simple");
    assert!(g.is_connected(), "spanning tree guarantees connectivity");
    Ok(g)
}

/// Bernoulli random graph: each of the `n(n-1)/2` possible edges included
/// independently with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(infeasible("graph needs n >= 1"));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect::<Vec<_>>();
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}

/// Random connected bipartite graph with parts `n1`, `n2` and diameter
/// exactly 3, by rejection sampling over cross-edge densities.
///
/// Parts of size 1 force diameter ≤ 2 (the lone vertex is universal on its
/// side), so both parts must have at least two vertices.
pub fn random_bipartite_diam3(
    n1: usize,
    n2: usize,
    rng: &mut impl Rng,
) -> Result<Graph, GenerateError> {
    if n1 < 2 || n2 < 2 {
        return Err(infeasible(
            "bipartite graph of diameter 3 needs both parts >= 2",
        ));
    }
    for _ in 0..RESAMPLE_BUDGET {
        let p = rng.random_range(0.4..0.8);
        let edges = (0..n1)
            .flat_map(|u| (0..n2).map(move |v| (u, n1 + v)))
            .filter(|_| rng.random_bool(p))
            .collect::<Vec<_>>();
        let g = Graph::new(n1 + n2, edges).expect("cross edges are simple");
        if g.is_connected() && diameter(&g) == Some(3) {
            return Ok(g);
        }
    }
    Err(GenerateError::BudgetExceeded { attempts: RESAMPLE_BUDGET })
}

fn check_range(range: &RangeInclusive<usize>, least: usize) -> Result<(), GenerateError> {
    if range.is_empty() || *range.start() < least {
        return Err(infeasible(format!(
            "vertex-count range {}..={} must be nonempty with lower end >= {least}",
            range.start(),
            range.end()
        )));
    }
    Ok(())
}

/// Batch of random connected graphs with n drawn from `n_range` and m
/// uniform over the connected range. Item `i` uses RNG stream `i`.
pub fn random_connected_batch(
    count: usize,
    n_range: RangeInclusive<usize>,
    seed: u64,
) -> Result<Vec<Graph>, GenerateError> {
    check_range(&n_range, 1)?;
    (0..count)
        .map(|i| {
            let mut rng = seeded_rng(seed, i as u64);
            let n = rng.random_range(n_range.clone());
            let m = rng.random_range(n.saturating_sub(1)..=n * (n - 1) / 2);
            random_gnm_connected(n, m, &mut rng)
        })
        .collect()
}

/// Batch of random trees with n drawn from `n_range`.
pub fn random_tree_batch(
    count: usize,
    n_range: RangeInclusive<usize>,
    seed: u64,
) -> Result<Vec<Graph>, GenerateError> {
    check_range(&n_range, 1)?;
    (0..count)
        .map(|i| {
            let mut rng = seeded_rng(seed, i as u64);
            let n = rng.random_range(n_range.clone());
            random_tree(n, &mut rng)
        })
        .collect()
}

/// Batch of dense connected graphs: m drawn strictly above n²/4.
pub fn random_dense_batch(
    count: usize,
    n_range: RangeInclusive<usize>,
    seed: u64,
) -> Result<Vec<Graph>, GenerateError> {
    check_range(&n_range, 3)?;
    (0..count)
        .map(|i| {
            let mut rng = seeded_rng(seed, i as u64);
            let n = rng.random_range(n_range.clone());
            let lo = n * n / 4 + 1;
            let hi = n * (n - 1) / 2;
            debug_assert!(lo <= hi, "dense range is feasible for n >= 3");
            let m = rng.random_range(lo..=hi);
            random_gnm_connected(n, m, &mut rng)
        })
        .collect()
}

/// Batch of connected bipartite diameter-3 graphs with `n1 + n2 <= n_max`.
pub fn random_bipartite_diam3_batch(
    count: usize,
    n_max: usize,
    seed: u64,
) -> Result<Vec<Graph>, GenerateError> {
    if n_max < 4 {
        return Err(infeasible("bipartite diameter-3 batch needs n_max >= 4"));
    }
    (0..count)
        .map(|i| {
            let mut rng = seeded_rng(seed, i as u64);
            let n1 = rng.random_range(2..=n_max - 2);
            let n2 = rng.random_range(2..=n_max - n1);
            random_bipartite_diam3(n1, n2, &mut rng)
        })
        .collect()
}

/// All free (unlabelled) trees on exactly `n` vertices, one representative
/// per isomorphism class, in a deterministic order.
///
/// Trees on k+1 vertices are grown by attaching a leaf to every vertex of
/// every tree on k vertices; duplicates are removed via the canonical
/// encoding. Every tree arises this way because deleting any leaf of a tree
/// on k+1 vertices leaves a tree on k vertices.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    let mut current = vec![Graph::new(1, []).expect("single vertex")];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for tree in &current {
            for v in 0..k - 1 {
                let mut edges = tree.edges().to_vec();
                edges.push((v, k - 1));
                let candidate = Graph::new(k, edges).expect("leaf extension is simple");
                if seen.insert(tree_canonical(&candidate)) {
                    next.push(candidate);
                }
            }
        }
        current = next;
    }
    current
}

/// Canonical encoding of a free tree (rooted at its center, children sorted);
/// two trees are isomorphic iff their encodings match. The input must be a
/// tree.
pub fn tree_canonical(g: &Graph) -> String {
    debug_assert!(g.size() == g.order() - 1 && g.is_connected(), "input must be a tree");
    tree_centers(g)
        .into_iter()
        .map(|c| encode_rooted(g, c, usize::MAX))
        .min()
        .expect("a tree has one or two centers")
}

/// Center vertices of a tree, found by peeling leaves layer by layer.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![0];
    }
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for &w in g.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut centers = layer;
    centers.sort_unstable();
    centers
}

fn encode_rooted(g: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode_rooted(g, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}
