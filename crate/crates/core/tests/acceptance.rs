//! Acceptance suite: seven criteria covering exact index values, the full
//! bound catalog over large seeded batches, known equality cases, the two
//! documented equality anomalies, spectral accuracy, oracle equivalence and
//! graph6 round-tripping. Each test prints one PASS line; run with
//! `--nocapture` to see them.
#![allow(clippy::needless_range_loop)]

mod common;

use std::time::Instant;

use common::{floyd_warshall, mixed_corpus, triangles_by_trace, INF};
use graphidx::bounds::{self, BoundId, GraphFacts};
use graphidx::generate::{
    complete, complete_bipartite, cycle, path, random_bipartite_diam3_batch,
    random_connected_batch, random_dense_batch, random_gnm_connected, random_graph, random_tree,
    seeded_rng, star,
};
use graphidx::indices;
use graphidx::spectral;
use graphidx::{
    all_pairs_distances, diameter, parse_graph6, write_graph6, Graph, Rational, Real,
};
use rand::Rng;

fn pass(id: u32, what: &str) {
    println!("acceptance criterion {id}: PASS — {what}");
}

/// Criterion 1: exact Mostar values on stars, Mostar = Albertson on
/// diameter-2 graphs, and the tree dominance/parity laws on all trees with
/// up to ten vertices. Runtime capped at 60 s.
#[test]
fn criterion_1_exact_value_suite() {
    let start = Instant::now();

    for n in 3..=20usize {
        let s = star(n).unwrap();
        let want = ((n - 1) * (n - 2)) as i64;
        assert_eq!(indices::mostar(&s).unwrap(), want, "Mo(S_{n})");
    }

    // 500 generated diameter-2 graphs: dense connected samples, filtered.
    let mut found = 0;
    let mut stream = 0u64;
    while found < 500 {
        stream += 1;
        assert!(stream < 50_000, "diameter-2 sampling budget exhausted");
        let mut rng = seeded_rng(201, stream);
        let n = rng.random_range(5..=10usize);
        let max_m = n * (n - 1) / 2;
        let m = rng.random_range(max_m / 2..max_m);
        let g = random_gnm_connected(n, m, &mut rng).unwrap();
        if diameter(&g) != Some(2) {
            continue;
        }
        found += 1;
        assert_eq!(
            indices::mostar(&g).unwrap(),
            indices::albertson(&g),
            "diameter-2 graph {}",
            bounds::graph_label(&g)
        );
    }

    let mut trees_checked = 0usize;
    for n in 1..=10usize {
        for t in graphidx::generate::enumerate_trees(n) {
            trees_checked += 1;
            let mo = indices::mostar(&t).unwrap();
            let irr = indices::albertson(&t);
            assert!(mo >= irr, "tree {}", bounds::graph_label(&t));
            assert_eq!(mo == irr, t.is_star(), "equality class on {}", bounds::graph_label(&t));
            assert_eq!(mo.rem_euclid(2), irr.rem_euclid(2), "parity on {}", bounds::graph_label(&t));
        }
    }
    assert_eq!(trees_checked, 201, "free trees with n <= 10");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "criterion 1 took {elapsed:?}");
    pass(1, &format!(
        "stars n<=20 exact, 500 diameter-2 graphs, 201 trees checked in {elapsed:.2?}"
    ));
}

/// Criterion 2: zero violations of the whole bound catalog over 10^4 random
/// connected graphs (n <= 12), 10^3 bipartite diameter-3 graphs (n <= 14)
/// and 10^3 dense graphs with m > n^2/4 (n <= 12), single-threaded in under
/// ten minutes.
#[test]
fn criterion_2_bound_suite() {
    let start = Instant::now();

    let mut graphs = random_connected_batch(10_000, 3..=12, 202).unwrap();
    graphs.extend(random_bipartite_diam3_batch(1_000, 14, 203).unwrap());
    graphs.extend(random_dense_batch(1_000, 3..=12, 204).unwrap());

    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let report = pool.install(|| bounds::run_suite(&graphs, &BoundId::ALL));

    assert_eq!(report.summary.graphs, 12_000);
    assert_eq!(
        report.summary.violations,
        0,
        "violating checks: {:?}",
        report
            .violations
            .iter()
            .map(|c| format!("{} on {}", c.bound_id, c.graph6))
            .collect::<Vec<_>>()
    );
    // The diameter-3 batch must actually exercise the diameter-3 bounds.
    let thm_3_5 = report
        .summary
        .bounds
        .iter()
        .find(|s| s.bound_id == BoundId::MostarBipartiteDiam3)
        .unwrap();
    assert!(thm_3_5.applicable >= 1_000);
    let dense = report
        .summary
        .bounds
        .iter()
        .find(|s| s.bound_id == BoundId::MostarDense)
        .unwrap();
    assert!(dense.applicable >= 1_000);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "criterion 2 took {elapsed:?}");
    pass(2, &format!(
        "12000 graphs x {} bounds, 0 violations, single-threaded in {elapsed:.2?}",
        BoundId::ALL.len()
    ));
}

/// Criterion 3: the known equality cases reproduce exactly, with both sides
/// computed rather than assumed.
#[test]
fn criterion_3_equality_cases() {
    // Regular graphs: equality in the variance and Zagreb bounds.
    let regulars: Vec<Graph> = vec![
        cycle(5).unwrap(),
        cycle(8).unwrap(),
        complete(3).unwrap(),
        complete(6).unwrap(),
        complete_bipartite(3, 3).unwrap(),
        complete_bipartite(4, 4).unwrap(),
    ];
    for g in &regulars {
        assert!(g.is_regular());
        let n = g.order() as i128;
        let m = g.size() as i128;
        let irr = indices::albertson(g) as i128;
        let var = indices::degree_variance(g);
        assert_eq!(var, Rational::new(irr * irr, m * n * n), "thm_2_2 equality on regular");

        let m1 = Rational::from_integer(indices::first_zagreb(g) as i128);
        let rhs = Rational::new(4 * m * m, n) + Rational::new(irr * irr, m * n);
        assert_eq!(m1, rhs, "cor_2_3 equality on regular");

        let facts = GraphFacts::new(g.clone()).unwrap();
        assert_eq!(bounds::check_var_irr(&facts).equality, Some(true));
        assert_eq!(bounds::check_zagreb_lower(&facts).equality, Some(true));
    }

    // Stars: right equality in the trivial Mostar bound and exact equality
    // in the Mostar-Szeged bound.
    for n in 3..=12usize {
        let facts = GraphFacts::new(star(n).unwrap()).unwrap();
        let trivial = bounds::check_mostar_trivial(&facts);
        assert_eq!(trivial.equality, Some(true), "thm_3_4 right equality on S_{n}");
        assert!(trivial.discrepancy.is_none());
        let mo = facts.mostar.unwrap();
        assert_eq!(mo, ((n - 1) * (n - 2)) as i64);
        let szeged = bounds::check_mostar_szeged(&facts);
        assert_eq!(szeged.equality, Some(true), "prop_3_8 equality on S_{n}");
        assert_eq!(mo * mo, szeged.aux["radicand"] as i64);
    }

    // K_4: double equality in the triangle sandwich and 0 = 0 in the dense
    // Mostar bound.
    let facts = GraphFacts::new(complete(4).unwrap()).unwrap();
    let sandwich = bounds::check_triangle_sandwich(&facts);
    assert_eq!(sandwich.equality, Some(true));
    assert_eq!((sandwich.lhs, sandwich.rhs), (Some(12.0), Some(12.0)));
    assert_eq!(sandwich.aux["three_t"], 12.0);
    let dense = bounds::check_mostar_dense(&facts);
    assert_eq!((dense.lhs, dense.rhs), (Some(0.0), Some(0.0)));
    assert_eq!(dense.equality, Some(true));

    pass(3, "regular, star and K_4 equality cases reproduced exactly");
}

/// Criterion 4: the two documented equality anomalies are reproduced as
/// flagged discrepancies, never as violations.
#[test]
fn criterion_4_discrepancy_witnesses() {
    // S_4 attains equality in the variance bound while being irregular.
    let s4 = star(4).unwrap();
    assert!(!s4.is_regular());
    let var = indices::degree_variance(&s4);
    let irr = indices::albertson(&s4) as i128;
    let rhs = Rational::new(irr * irr, 3 * 16);
    assert_eq!(var, Rational::new(3, 4));
    assert_eq!(rhs, Rational::new(3, 4));
    let facts = GraphFacts::new(s4).unwrap();
    let check = bounds::check_var_irr(&facts);
    assert_eq!(check.equality, Some(true));
    assert_eq!(check.holds, Some(true));
    assert!(check.discrepancy.is_some(), "S_4 equality must be flagged");
    assert!(!check.is_violation());

    // K_4 refutes strictness in the dense Mostar bound: 0 = 0.
    let facts = GraphFacts::new(complete(4).unwrap()).unwrap();
    let check = bounds::check_mostar_dense(&facts);
    assert_eq!(check.equality, Some(true));
    assert_eq!(check.aux["strict"], 0.0);
    assert!(check.discrepancy.is_some(), "K_4 strictness failure must be flagged");
    assert!(!check.is_violation());

    // The suite surfaces both through its summary.
    let report = bounds::run_suite(
        &[star(4).unwrap(), complete(4).unwrap()],
        &[BoundId::VarIrregularity, BoundId::MostarDense],
    );
    assert_eq!(report.summary.violations, 0);
    assert_eq!(report.summary.discrepancies, 2);

    pass(4, "S_4 (thm_2_2 equality, 3/4 = 3/4) and K_4 (thm_3_11, 0 = 0) flagged, not violations");
}

fn spectral_batch() -> Vec<Graph> {
    let mut graphs = vec![
        path(2).unwrap(),
        path(17).unwrap(),
        cycle(24).unwrap(),
        star(32).unwrap(),
        complete(16).unwrap(),
        complete_bipartite(5, 11).unwrap(),
        Graph::new(3, []).unwrap(),
    ];
    graphs.push(random_tree(31, &mut seeded_rng(205, 0)).unwrap());
    graphs.push(random_gnm_connected(32, 180, &mut seeded_rng(205, 1)).unwrap());
    graphs.push(random_gnm_connected(24, 60, &mut seeded_rng(205, 2)).unwrap());
    graphs.push(random_graph(30, 0.3, &mut seeded_rng(205, 3)).unwrap());
    graphs.extend(random_bipartite_diam3_batch(2, 14, 206).unwrap());
    graphs
}

/// Criterion 5: spectral accuracy on generated graphs up to n = 32 —
/// residuals, trace identities, the Laplacian radius cap, and both sides of
/// the spectral-radius characterization.
#[test]
fn criterion_5_spectral_correctness() {
    let graphs = spectral_batch();
    assert!(graphs.iter().all(|g| g.order() <= 32));

    let mut rng = seeded_rng(207, 0);
    for g in &graphs {
        let n = g.order();
        let m = g.size() as f64;
        let lap = spectral::laplacian::<Real>(g);
        let eig = lap.eigen().unwrap();
        assert!(eig.max_residual <= 1e-8, "Laplacian residual on {}", bounds::graph_label(g));
        let lap_sum: f64 = eig.values.iter().sum();
        assert!((lap_sum - 2.0 * m).abs() <= 1e-8);
        let lambda_max = *eig.values.last().unwrap();
        assert!(lambda_max <= n as f64 + 1e-8);

        let adj = spectral::adjacency_spectrum::<Real>(g).unwrap();
        assert!(adj.max_residual() <= 1e-8, "adjacency residual on {}", bounds::graph_label(g));
        assert!(adj.sum().abs() <= 1e-8);
        assert!((adj.sum_of_squares() - 2.0 * m).abs() <= 1e-8);

        if n >= 2 {
            for _ in 0..10_000 {
                let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
                if x.iter().all(|&v| v == x[0]) {
                    continue;
                }
                let ratio = spectral::fiedler_ratio(g, &x).unwrap();
                assert!(
                    ratio <= lambda_max + 1e-8,
                    "ratio {ratio} exceeds lambda_max {lambda_max} on {}",
                    bounds::graph_label(g)
                );
            }
            if g.size() > 0 {
                let attained = spectral::fiedler_ratio(g, eig.top_vector()).unwrap();
                assert!(
                    (attained - lambda_max).abs() <= 1e-6,
                    "attainment on {}",
                    bounds::graph_label(g)
                );
            }
        }
    }

    // Double-sum identity on 10^3 random vectors of dimension up to 64.
    for i in 0..1_000 {
        let mut vrng = seeded_rng(208, i);
        let dim = vrng.random_range(1..=64usize);
        let x: Vec<f64> = (0..dim).map(|_| vrng.random_range(-50.0..50.0)).collect();
        let (lhs, rhs) = spectral::check_sum_identity(&x);
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        assert!((lhs - rhs).abs() <= 1e-10 * scale);
    }

    pass(5, &format!(
        "{} graphs n<=32: residuals <= 1e-8, trace identities, 10^4 ratio samples per graph, identity on 10^3 vectors",
        graphs.len()
    ));
}

/// Criterion 6: oracle equivalence — BFS against Floyd-Warshall, the two
/// triangle-counting routes, and the closed-form Mostar expression against
/// the distance-counting one.
#[test]
fn criterion_6_oracle_equivalence() {
    let mut graphs = mixed_corpus(209, 150, 12);
    graphs.push(path(64).unwrap());
    for i in 0..6 {
        let mut rng = seeded_rng(210, i);
        let p = rng.random_range(0.05..0.5);
        graphs.push(random_graph(64, p, &mut rng).unwrap());
    }

    for g in &graphs {
        let bfs = all_pairs_distances(g);
        let fw = floyd_warshall(g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                let want = (fw[u][v] != INF).then_some(fw[u][v] as u32);
                assert_eq!(bfs.get(u, v), want, "distance ({u},{v})");
            }
        }
        assert_eq!(g.triangle_count(), triangles_by_trace(g));
    }

    let mut checked = 0;
    let mut diam3 = random_bipartite_diam3_batch(500, 14, 211).unwrap();
    diam3.push(path(4).unwrap());
    diam3.push(cycle(6).unwrap());
    for g in &diam3 {
        checked += 1;
        assert_eq!(
            indices::bipartite_diam3_mostar_form(g).unwrap(),
            indices::mostar(g).unwrap(),
            "closed form on {}",
            bounds::graph_label(g)
        );
    }

    pass(6, &format!(
        "{} graphs BFS=FW and triangle routes agree; closed-form Mostar on {checked} diameter-3 graphs",
        graphs.len()
    ));
}

/// Criterion 7: graph6 round-trip on 10^4 random graphs up to n = 62 with
/// byte-identical re-encoding.
#[test]
fn criterion_7_graph6_roundtrip() {
    for i in 0..10_000u64 {
        let mut rng = seeded_rng(212, i);
        let n = rng.random_range(1..=62usize);
        let p = rng.random_range(0.0..1.0);
        let g = random_graph(n, p, &mut rng).unwrap();
        let encoded = write_graph6(&g).unwrap();
        let decoded = parse_graph6(&encoded).unwrap();
        assert_eq!(decoded, g, "edge-identical round trip");
        assert_eq!(write_graph6(&decoded).unwrap(), encoded, "byte-identical re-encoding");
    }
    pass(7, "10^4 random graphs n<=62 round-trip byte-identically");
}
