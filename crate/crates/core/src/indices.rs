//! Topological indices: exact rational/integer values wherever the
//! definition allows, floats only where square roots or eigenvalues force
//! them.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::distance::{all_pairs_distances, diameter, edge_peripherality, EdgePeripherality};
use crate::graph::{bipartition, Graph};
use crate::scalar::{from_usize, Scalar};
use crate::spectral::{graph_energy, laplacian_spectral_radius, SpectralError};
use crate::{Rational, Real};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("graph is disconnected; Mostar-type quantities are undefined")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has diameter {got:?}, expected exactly 3")]
    WrongDiameter { got: Option<u32> },
}

/// Degree variance: the average squared deviation of vertex degrees from the
/// mean degree `2m/n`, as an exact rational. Zero exactly for regular graphs.
pub fn degree_variance(g: &Graph) -> Rational {
    let n = g.order() as i128;
    let m = g.size() as i128;
    // Σ (deg·n - 2m)² / n³ avoids intermediate fractions.
    let numerator: i128 = g
        .degrees()
        .iter()
        .map(|&d| {
            let diff = d as i128 * n - 2 * m;
            diff * diff
        })
        .sum();
    Rational::new(numerator, n * n * n)
}

/// First Zagreb index: the sum of squared vertex degrees.
pub fn first_zagreb(g: &Graph) -> i64 {
    g.degrees().iter().map(|&d| (d * d) as i64).sum()
}

/// Albertson irregularity: `Σ_edges |deg(u) - deg(v)|`.
pub fn albertson(g: &Graph) -> i64 {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) as i64 - g.degree(v) as i64).abs())
        .sum()
}

/// IRB index: `Σ_edges (√deg(u) - √deg(v))²`.
pub fn irb<F: Scalar>(g: &Graph) -> F {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let d = from_usize::<F>(g.degree(u)).sqrt() - from_usize::<F>(g.degree(v)).sqrt();
            d * d
        })
        .sum()
}

/// `Σ_v √deg(v)`, the degree-based energy upper bound.
pub fn sqrt_degree_sum<F: Scalar>(g: &Graph) -> F {
    g.degrees().iter().map(|&d| from_usize::<F>(d).sqrt()).sum()
}

/// Mostar index from precomputed peripherality counts.
pub fn mostar_from(per: &[EdgePeripherality]) -> i64 {
    per.iter().map(|e| (e.closer_u as i64 - e.closer_v as i64).abs()).sum()
}

/// Szeged index from precomputed peripherality counts.
pub fn szeged_from(per: &[EdgePeripherality]) -> i64 {
    per.iter().map(|e| e.closer_u as i64 * e.closer_v as i64).sum()
}

/// Total count of equidistant vertices over all edges.
pub fn sum_equidistant_from(per: &[EdgePeripherality]) -> i64 {
    per.iter().map(|e| e.equidistant as i64).sum()
}

fn peripherality_of(g: &Graph) -> Result<Vec<EdgePeripherality>, IndexError> {
    let d = all_pairs_distances(g);
    edge_peripherality(g, &d).map_err(|_| IndexError::Disconnected)
}

/// Mostar index: `Σ_edges |n_e(u) - n_e(v)|`. Requires a connected graph.
pub fn mostar(g: &Graph) -> Result<i64, IndexError> {
    Ok(mostar_from(&peripherality_of(g)?))
}

/// Szeged index: `Σ_edges n_e(u)·n_e(v)`. Requires a connected graph.
pub fn szeged(g: &Graph) -> Result<i64, IndexError> {
    Ok(szeged_from(&peripherality_of(g)?))
}

/// `Σ_edges n_uv`, the equidistant-vertex total. Requires connectivity.
pub fn sum_equidistant(g: &Graph) -> Result<i64, IndexError> {
    Ok(sum_equidistant_from(&peripherality_of(g)?))
}

/// Mostar index of a connected bipartite diameter-3 graph computed through
/// the closed form `Σ_edges |(n1 + 2deg(u)) - (n2 + 2deg(v))|` with `u` in
/// part 1. Must agree with [`mostar`]; the agreement is the strongest
/// cross-check of the closed form.
pub fn bipartite_diam3_mostar_form(g: &Graph) -> Result<i64, IndexError> {
    if !g.is_connected() {
        return Err(IndexError::Disconnected);
    }
    let parts = bipartition(g);
    if !parts.is_bipartite {
        return Err(IndexError::NotBipartite);
    }
    let diam = diameter(g);
    if diam != Some(3) {
        return Err(IndexError::WrongDiameter { got: diam });
    }
    let n1 = parts.n1 as i64;
    let n2 = parts.n2 as i64;
    let total = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (u, v) = if parts.side[a] == 0 { (a, b) } else { (b, a) };
            let left = n1 + 2 * g.degree(u) as i64;
            let right = n2 + 2 * g.degree(v) as i64;
            (left - right).abs()
        })
        .sum();
    Ok(total)
}

fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Every invariant of one graph. Distance-based fields are `None` when the
/// graph is disconnected; spectral fields are always present.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub degree_variance: Rational,
    pub first_zagreb: i64,
    pub albertson: i64,
    pub irb: Real,
    pub mostar: Option<i64>,
    pub szeged: Option<i64>,
    pub sum_n_uv: Option<i64>,
    pub triangle_count: i64,
    pub energy: Real,
    pub laplacian_lambda_max: Real,
    pub sqrt_degree_sum: Real,
}

impl IndexReport {
    pub fn of(g: &Graph) -> Result<Self, SpectralError> {
        let distances = all_pairs_distances(g);
        let per = edge_peripherality(g, &distances).ok();
        Ok(IndexReport {
            n: g.order(),
            m: g.size(),
            degree_variance: degree_variance(g),
            first_zagreb: first_zagreb(g),
            albertson: albertson(g),
            irb: irb::<Real>(g),
            mostar: per.as_deref().map(mostar_from),
            szeged: per.as_deref().map(szeged_from),
            sum_n_uv: per.as_deref().map(sum_equidistant_from),
            triangle_count: g.triangle_count(),
            energy: graph_energy::<Real>(g)?,
            laplacian_lambda_max: laplacian_spectral_radius::<Real>(g)?,
            sqrt_degree_sum: sqrt_degree_sum::<Real>(g),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, path, star};
    use crate::graph::Graph;

    fn rat(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn degree_variance_examples() {
        assert_eq!(degree_variance(&star(4).unwrap()), rat(3, 4));
        assert_eq!(degree_variance(&path(4).unwrap()), rat(1, 4));
        for g in [complete(5).unwrap(), cycle(6).unwrap()] {
            assert_eq!(degree_variance(&g), rat(0, 1));
        }
    }

    #[test]
    fn degree_variance_identity() {
        // Var = M1/n - (2m/n)², exactly.
        for g in [star(7).unwrap(), path(6).unwrap(), complete_bipartite(2, 5).unwrap()] {
            let n = g.order() as i128;
            let m = g.size() as i128;
            let alt = rat(first_zagreb(&g) as i128, n) - rat(4 * m * m, n * n);
            assert_eq!(degree_variance(&g), alt);
        }
    }

    #[test]
    fn zagreb_examples() {
        assert_eq!(first_zagreb(&star(4).unwrap()), 12);
        assert_eq!(first_zagreb(&path(4).unwrap()), 10);
        for n in 2..=6 {
            let want = (n * (n - 1) * (n - 1)) as i64;
            assert_eq!(first_zagreb(&complete(n).unwrap()), want);
        }
    }

    #[test]
    fn albertson_examples() {
        assert_eq!(albertson(&star(4).unwrap()), 6);
        assert_eq!(albertson(&path(4).unwrap()), 2);
        assert_eq!(albertson(&cycle(7).unwrap()), 0);
    }

    #[test]
    fn irb_examples() {
        assert_eq!(irb::<Real>(&complete(4).unwrap()), 0.0);
        let two_edges = 2.0 * (2.0_f64.sqrt() - 1.0).powi(2);
        assert!((irb::<Real>(&path(3).unwrap()) - two_edges).abs() < 1e-12);
        // P_4 has the same two (1,2)-edges plus a flat (2,2) edge.
        assert!((irb::<Real>(&path(4).unwrap()) - two_edges).abs() < 1e-12);
    }

    #[test]
    fn mostar_examples() {
        assert_eq!(mostar(&star(5).unwrap()).unwrap(), 12);
        for n in 2..=6 {
            assert_eq!(mostar(&complete(n).unwrap()).unwrap(), 0);
        }
        assert_eq!(mostar(&path(4).unwrap()).unwrap(), 4);
        assert_eq!(
            mostar(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()),
            Err(IndexError::Disconnected)
        );
    }

    #[test]
    fn szeged_examples() {
        assert_eq!(szeged(&path(4).unwrap()).unwrap(), 10);
        assert_eq!(szeged(&complete(2).unwrap()).unwrap(), 1);
        for n in 3..=8 {
            let want = ((n - 1) * (n - 1)) as i64;
            assert_eq!(szeged(&star(n).unwrap()).unwrap(), want);
        }
    }

    #[test]
    fn closed_form_matches_mostar_on_diam3_bipartite() {
        let p4 = path(4).unwrap();
        assert_eq!(bipartite_diam3_mostar_form(&p4).unwrap(), 4);
        assert_eq!(mostar(&p4).unwrap(), 4);

        // C_6 is bipartite with diameter 3 and distance-balanced.
        let c6 = cycle(6).unwrap();
        assert_eq!(bipartite_diam3_mostar_form(&c6).unwrap(), 0);
        assert_eq!(mostar(&c6).unwrap(), 0);
    }

    #[test]
    fn closed_form_rejects_wrong_shapes() {
        assert_eq!(
            bipartite_diam3_mostar_form(&complete_bipartite(2, 3).unwrap()),
            Err(IndexError::WrongDiameter { got: Some(2) })
        );
        assert_eq!(
            bipartite_diam3_mostar_form(&complete(3).unwrap()),
            Err(IndexError::NotBipartite)
        );
        assert_eq!(
            bipartite_diam3_mostar_form(&Graph::new(5, [(0, 1), (2, 3)]).unwrap()),
            Err(IndexError::Disconnected)
        );
    }

    #[test]
    fn report_handles_disconnected_graphs() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let report = IndexReport::of(&g).unwrap();
        assert_eq!(report.mostar, None);
        assert_eq!(report.szeged, None);
        assert_eq!(report.sum_n_uv, None);
        assert_eq!(report.first_zagreb, 4);
        // Two disjoint edges: adjacency eigenvalues ±1 twice.
        assert!((report.energy - 4.0).abs() < 1e-9);

        let s4 = star(4).unwrap();
        let report = IndexReport::of(&s4).unwrap();
        assert_eq!(report.mostar, Some(6));
        assert_eq!(report.albertson, 6);
        assert_eq!(report.degree_variance, rat(3, 4));
    }
}
