//! Graph invariants at desk scale.
//!
//! The crate computes exact degree- and distance-based indices (degree
//! variance, first Zagreb, Albertson irregularity, IRB, Mostar, Szeged),
//! dense symmetric spectra (graph energy, Laplacian spectral radius), and
//! runs a verification suite for the inequalities relating them, with slack,
//! equality detection and counterexample reporting.
//!
//! Integer- and rational-valued quantities are computed exactly; floating
//! point only enters where eigenvalues or square roots force it. The
//! spectral routines are generic over the scalar type (see [`Scalar`]), with
//! the concrete aliases [`Real`] and [`Rational`] used by reports and the
//! command-line tools.

pub mod bounds;
pub mod distance;
pub mod edgelist;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod scalar;
pub mod spectral;

pub use distance::{all_pairs_distances, diameter, edge_peripherality, DistanceMatrix, EdgePeripherality};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph::{bipartition, BipartitionInfo, Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6};
pub use scalar::Scalar;

/// Floating-point scalar used by reports and the command-line tools.
pub type Real = f64;

/// Exact rational type used wherever an index or bound is rational-valued.
///
/// `i128` components leave ample headroom: at the supported graph sizes
/// (n ≤ 62 for graph6 output) every numerator that appears stays far below
/// 2^80 even after cross-multiplication.
pub type Rational = num_rational::Ratio<i128>;

/// Formats a float with 12 significant digits, trimming trailing zeros.
///
/// Values of extreme magnitude fall back to scientific notation.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (_, exp) = sci.rsplit_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        fixed.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        sci
    }
}
