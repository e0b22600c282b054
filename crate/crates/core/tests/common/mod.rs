//! Shared test oracles, kept independent of the library code paths they
//! check: distances via Floyd-Warshall, triangles via the adjacency cube,
//! Mostar-type sums recomputed from raw distance tables.

#![allow(dead_code)]
// Index loops below mirror the matrix recurrences they implement.
#![allow(clippy::needless_range_loop)]

use graphidx::generate::{
    complete, complete_bipartite, cycle, path, random_bipartite_diam3_batch,
    random_connected_batch, random_tree_batch, star,
};
use graphidx::Graph;

pub const INF: u64 = u64::MAX;

/// Floyd-Warshall all-pairs distances.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] == INF {
                    continue;
                }
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Triangle count as trace(A^3)/6.
pub fn triangles_by_trace(g: &Graph) -> i64 {
    let n = g.order();
    let mut a = vec![vec![0i64; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        let mut z = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                if x[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    z[i][j] += x[i][k] * y[k][j];
                }
            }
        }
        z
    };
    let a2 = mul(&a, &a);
    let a3 = mul(&a2, &a);
    let trace: i64 = (0..n).map(|i| a3[i][i]).sum();
    trace / 6
}

/// Per-edge peripherality triple `(closer_u, closer_v, equidistant)`
/// recomputed from the Floyd-Warshall table; `None` when disconnected.
pub fn brute_peripherality(g: &Graph) -> Option<Vec<(usize, usize, usize)>> {
    let d = floyd_warshall(g);
    if d.iter().flatten().any(|&x| x == INF) {
        return None;
    }
    let n = g.order();
    Some(
        g.edges()
            .iter()
            .map(|&(u, v)| {
                let (mut cu, mut cv, mut eq) = (0, 0, 0);
                for w in 0..n {
                    match d[w][u].cmp(&d[w][v]) {
                        std::cmp::Ordering::Less => cu += 1,
                        std::cmp::Ordering::Greater => cv += 1,
                        std::cmp::Ordering::Equal => eq += 1,
                    }
                }
                (cu, cv, eq)
            })
            .collect(),
    )
}

pub fn brute_mostar(g: &Graph) -> Option<i64> {
    Some(
        brute_peripherality(g)?
            .iter()
            .map(|&(cu, cv, _)| (cu as i64 - cv as i64).abs())
            .sum(),
    )
}

pub fn brute_szeged(g: &Graph) -> Option<i64> {
    Some(brute_peripherality(g)?.iter().map(|&(cu, cv, _)| (cu * cv) as i64).sum())
}

/// Mixed deterministic + seeded-random corpus covering the families the
/// invariants quantify over. `n_max` caps the deterministic family sizes.
pub fn mixed_corpus(seed: u64, random_count: usize, n_max: usize) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.push(path(n.max(2)).unwrap());
        graphs.push(star(n.max(2)).unwrap());
        if n >= 3 {
            graphs.push(cycle(n).unwrap());
        }
        graphs.push(complete(n).unwrap());
    }
    for n1 in 1..=3usize {
        for n2 in n1..=4 {
            if n1 + n2 <= n_max {
                graphs.push(complete_bipartite(n1, n2).unwrap());
            }
        }
    }
    graphs.extend(random_connected_batch(random_count, 2..=n_max.min(16), seed).unwrap());
    graphs.extend(random_tree_batch(random_count / 2, 2..=n_max.min(16), seed + 1).unwrap());
    if n_max >= 8 {
        graphs
            .extend(random_bipartite_diam3_batch(random_count / 2, n_max.min(12), seed + 2).unwrap());
    }
    graphs
}
