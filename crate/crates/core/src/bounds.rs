//! One checkable record per inequality: evaluate both sides, applicability,
//! slack and equality, and aggregate violations across graph batches.
//!
//! Comparisons are exact wherever both sides are rational (including the
//! radicand tricks `lhs ≤ √r  ⟺  lhs² ≤ r` for nonnegative integer `lhs`);
//! a 1e-8 absolute tolerance applies only where an eigenvalue, a square
//! root, or the graph energy makes a side irrational.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::distance::{all_pairs_distances, edge_peripherality, EdgePeripherality};
use crate::graph::{bipartition, BipartitionInfo, Graph};
use crate::graph6::write_graph6;
use crate::indices;
use crate::spectral::{graph_energy, laplacian_spectral_radius, SpectralError};
use crate::{Rational, Real};

/// Absolute tolerance for comparisons involving floats.
pub const FLOAT_TOL: f64 = 1e-8;
/// Threshold below which a float slack is flagged as near-equality
/// (reporting only, never part of pass/fail).
pub const NEAR_EQUALITY_TOL: f64 = 1e-6;

/// Identifiers of the checkable inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    /// `Var(G) ≥ Irr(G)²/(m·n²)` for connected graphs (exact rational).
    VarIrregularity,
    /// `M1(G) ≥ 4m²/n + Irr(G)²/(m·n)` (exact rational).
    ZagrebLower,
    /// `E(G) ≤ √(2mn - IRB(G))` for connected graphs.
    EnergyIrb,
    /// `E(G) ≤ √(2mn)`.
    McClelland,
    /// `E(G) ≤ 2m/n + √((n-1)(2m - (2m/n)²))` when `2m > n`.
    KoolenMoulton,
    /// `E(G) ≤ Σ_v √deg(v)`.
    EnergySqrtDeg,
    /// `0 ≤ Mo(G) ≤ m(n-2)` for connected graphs with `n ≥ 3`; right
    /// equality exactly on stars, left equality on distance-balanced graphs.
    MostarTrivial,
    /// `Mo(G) ≤ √m·√((λ_max/n)·(n1n2n² - 4mn² + 4M1n - 4n1²n2² - 16m² + 16n1n2m))`
    /// for connected bipartite diameter-3 graphs.
    MostarBipartiteDiam3,
    /// `Irr(G) ≤ √(m·(n·M1 - 4m²)·λ_max/n)` for connected graphs.
    Goldberg,
    /// Part-size-only Mostar bound for connected bipartite diameter-3 graphs.
    MostarPartSizes,
    /// `Mo(G) ≤ √(m²n² - 4m·Sz(G))` for connected bipartite graphs
    /// (exact integer radicand).
    MostarSzeged,
    /// `m(4m - n²)/n ≤ 3t(G) ≤ Σ_edges n_uv` for connected graphs (exact).
    TriangleSandwich,
    /// `Mo(G) ≤ √(m²(n-2)² - m²(n-2)(4m-n²)/n)` when `m > n²/4`, non-strict
    /// with a separate strictness flag (complete graphs attain equality).
    MostarDense,
}

impl BoundId {
    pub const ALL: [BoundId; 13] = [
        BoundId::VarIrregularity,
        BoundId::ZagrebLower,
        BoundId::EnergyIrb,
        BoundId::McClelland,
        BoundId::KoolenMoulton,
        BoundId::EnergySqrtDeg,
        BoundId::MostarTrivial,
        BoundId::MostarBipartiteDiam3,
        BoundId::Goldberg,
        BoundId::MostarPartSizes,
        BoundId::MostarSzeged,
        BoundId::TriangleSandwich,
        BoundId::MostarDense,
    ];

    /// Stable identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            BoundId::VarIrregularity => "thm_2_2",
            BoundId::ZagrebLower => "cor_2_3",
            BoundId::EnergyIrb => "thm_2_5",
            BoundId::McClelland => "eq_13",
            BoundId::KoolenMoulton => "eq_15",
            BoundId::EnergySqrtDeg => "energy_sqrtdeg",
            BoundId::MostarTrivial => "thm_3_4",
            BoundId::MostarBipartiteDiam3 => "thm_3_5",
            BoundId::Goldberg => "goldberg",
            BoundId::MostarPartSizes => "cor_3_7",
            BoundId::MostarSzeged => "prop_3_8",
            BoundId::TriangleSandwich => "prop_3_10",
            BoundId::MostarDense => "thm_3_11",
        }
    }

    pub fn from_id(s: &str) -> Option<BoundId> {
        BoundId::ALL.into_iter().find(|b| b.id() == s)
    }

    /// Short human-readable statement of the inequality.
    pub fn description(self) -> &'static str {
        match self {
            BoundId::VarIrregularity => "Var >= Irr^2/(m n^2)",
            BoundId::ZagrebLower => "M1 >= 4m^2/n + Irr^2/(m n)",
            BoundId::EnergyIrb => "E <= sqrt(2mn - IRB)",
            BoundId::McClelland => "E <= sqrt(2mn)",
            BoundId::KoolenMoulton => "E <= 2m/n + sqrt((n-1)(2m - (2m/n)^2))",
            BoundId::EnergySqrtDeg => "E <= sum of sqrt(deg)",
            BoundId::MostarTrivial => "0 <= Mo <= m(n-2)",
            BoundId::MostarBipartiteDiam3 => "Mo <= sqrt(m (lambda_max/n) P(n1,n2,m,M1))",
            BoundId::Goldberg => "Irr <= sqrt(m (n M1 - 4m^2) lambda_max / n)",
            BoundId::MostarPartSizes => "Mo <= part-size bound F(n1, n2, n)",
            BoundId::MostarSzeged => "Mo <= sqrt(m^2 n^2 - 4m Sz)",
            BoundId::TriangleSandwich => "m(4m - n^2)/n <= 3t <= sum n_uv",
            BoundId::MostarDense => "Mo <= sqrt(m^2 (n-2)^2 - m^2 (n-2)(4m - n^2)/n)",
        }
    }

    /// Runs this check against precomputed graph facts.
    pub fn run(self, facts: &GraphFacts) -> BoundCheck {
        match self {
            BoundId::VarIrregularity => check_var_irr(facts),
            BoundId::ZagrebLower => check_zagreb_lower(facts),
            BoundId::EnergyIrb => check_energy_irb(facts),
            BoundId::McClelland => check_mcclelland(facts),
            BoundId::KoolenMoulton => check_koolen_moulton(facts),
            BoundId::EnergySqrtDeg => check_energy_sqrtdeg(facts),
            BoundId::MostarTrivial => check_mostar_trivial(facts),
            BoundId::MostarBipartiteDiam3 => check_mostar_bipartite_diam3(facts),
            BoundId::Goldberg => check_goldberg(facts),
            BoundId::MostarPartSizes => check_mostar_part_sizes(facts),
            BoundId::MostarSzeged => check_mostar_szeged(facts),
            BoundId::TriangleSandwich => check_triangle_sandwich(facts),
            BoundId::MostarDense => check_mostar_dense(facts),
        }
    }
}

impl std::fmt::Display for BoundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Orientation of a recorded inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "lhs<=rhs")]
    Le,
    #[serde(rename = "lhs>=rhs")]
    Ge,
}

/// Result of checking one bound on one graph.
///
/// `slack` is the margin in the bound's own orientation (`rhs - lhs` for
/// ≤-bounds, `lhs - rhs` for ≥-bounds), so `slack ≥ 0` exactly when the
/// bound holds. For non-applicable checks the numeric fields are `None`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    pub bound_id: BoundId,
    pub graph6: String,
    pub applicable: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub reason: String,
    pub relation: Relation,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    /// Whether the verdict came from exact integer/rational arithmetic.
    pub exact: bool,
    /// Set when the check reproduces a known equality-case anomaly (for
    /// example, equality attained off the stated equality class). Never a
    /// violation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub aux: BTreeMap<&'static str, f64>,
}

impl BoundCheck {
    fn not_applicable(bound_id: BoundId, graph6: String, reason: impl Into<String>) -> Self {
        BoundCheck {
            bound_id,
            graph6,
            applicable: false,
            reason: reason.into(),
            relation: Relation::Le,
            lhs: None,
            rhs: None,
            slack: None,
            holds: None,
            equality: None,
            exact: false,
            discrepancy: None,
            note: None,
            aux: BTreeMap::new(),
        }
    }

    fn exact_ge(bound_id: BoundId, graph6: String, lhs: Rational, rhs: Rational) -> Self {
        let slack = lhs - rhs;
        BoundCheck {
            bound_id,
            graph6,
            applicable: true,
            reason: String::new(),
            relation: Relation::Ge,
            lhs: Some(rational_f64(lhs)),
            rhs: Some(rational_f64(rhs)),
            slack: Some(rational_f64(slack)),
            holds: Some(lhs >= rhs),
            equality: Some(lhs == rhs),
            exact: true,
            discrepancy: None,
            note: None,
            aux: BTreeMap::new(),
        }
    }

    fn exact_le_int(bound_id: BoundId, graph6: String, lhs: i64, rhs: i64) -> Self {
        BoundCheck {
            bound_id,
            graph6,
            applicable: true,
            reason: String::new(),
            relation: Relation::Le,
            lhs: Some(lhs as f64),
            rhs: Some(rhs as f64),
            slack: Some((rhs - lhs) as f64),
            holds: Some(lhs <= rhs),
            equality: Some(lhs == rhs),
            exact: true,
            discrepancy: None,
            note: None,
            aux: BTreeMap::new(),
        }
    }

    /// Exact check of `lhs ≤ √radicand` for nonnegative integer `lhs`:
    /// compares `lhs²` with the radicand in rational arithmetic; the stored
    /// rhs is the float square root for reporting.
    fn exact_le_sqrt(bound_id: BoundId, graph6: String, lhs: i64, radicand: Rational) -> Self {
        debug_assert!(lhs >= 0 && radicand >= Rational::new(0, 1));
        let lhs_sq = Rational::from_integer((lhs as i128) * (lhs as i128));
        let rhs = rational_f64(radicand).max(0.0).sqrt();
        BoundCheck {
            bound_id,
            graph6,
            applicable: true,
            reason: String::new(),
            relation: Relation::Le,
            lhs: Some(lhs as f64),
            rhs: Some(rhs),
            slack: Some(rhs - lhs as f64),
            holds: Some(lhs_sq <= radicand),
            equality: Some(lhs_sq == radicand),
            exact: true,
            discrepancy: None,
            note: None,
            aux: BTreeMap::new(),
        }
    }

    fn float_le(bound_id: BoundId, graph6: String, lhs: f64, rhs: f64) -> Self {
        BoundCheck {
            bound_id,
            graph6,
            applicable: true,
            reason: String::new(),
            relation: Relation::Le,
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(rhs - lhs),
            holds: Some(lhs <= rhs + FLOAT_TOL),
            equality: Some((rhs - lhs).abs() <= NEAR_EQUALITY_TOL),
            exact: false,
            discrepancy: None,
            note: None,
            aux: BTreeMap::new(),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.holds == Some(false)
    }

    fn csv_row(&self) -> String {
        let opt = |v: Option<f64>| v.map(crate::format_real).unwrap_or_default();
        let eq = self.equality.map(|e| e.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.bound_id,
            self.graph6,
            opt(self.lhs),
            opt(self.rhs),
            opt(self.slack),
            eq,
            self.applicable
        )
    }
}

// Numerators stay below 2^53 at the supported graph sizes, so the direct
// quotient is correct to the last float bit we report.
fn rational_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// graph6 string of `g`, or an `n=..;m=..` placeholder past the format cap.
pub fn graph_label(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| format!("n={};m={}", g.order(), g.size()))
}

/// Everything the checks need about one graph, computed once.
pub struct GraphFacts {
    pub graph: Graph,
    pub label: String,
    pub connected: bool,
    pub diameter: Option<u32>,
    pub bipartition: BipartitionInfo,
    pub peripherality: Option<Vec<EdgePeripherality>>,
    pub mostar: Option<i64>,
    pub szeged: Option<i64>,
    pub sum_equidistant: Option<i64>,
    pub first_zagreb: i64,
    pub albertson: i64,
    pub degree_variance: Rational,
    pub irb: Real,
    pub triangles: i64,
    pub energy: Real,
    pub lambda_max: Real,
    pub sqrt_degree_sum: Real,
    pub is_regular: bool,
    pub is_star: bool,
}

impl GraphFacts {
    pub fn new(graph: Graph) -> Result<Self, SpectralError> {
        let label = graph_label(&graph);
        let distances = all_pairs_distances(&graph);
        let connected = distances.is_connected();
        let diameter = distances.diameter();
        let parts = bipartition(&graph);
        let peripherality = edge_peripherality(&graph, &distances).ok();
        let energy = graph_energy::<Real>(&graph)?;
        let lambda_max = laplacian_spectral_radius::<Real>(&graph)?;
        Ok(GraphFacts {
            label,
            connected,
            diameter,
            mostar: peripherality.as_deref().map(indices::mostar_from),
            szeged: peripherality.as_deref().map(indices::szeged_from),
            sum_equidistant: peripherality.as_deref().map(indices::sum_equidistant_from),
            peripherality,
            bipartition: parts,
            first_zagreb: indices::first_zagreb(&graph),
            albertson: indices::albertson(&graph),
            degree_variance: indices::degree_variance(&graph),
            irb: indices::irb(&graph),
            triangles: graph.triangle_count(),
            energy,
            lambda_max,
            sqrt_degree_sum: indices::sqrt_degree_sum(&graph),
            is_regular: graph.is_regular(),
            is_star: graph.is_star(),
            graph,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn m(&self) -> usize {
        self.graph.size()
    }

    fn ni(&self) -> i128 {
        self.n() as i128
    }

    fn mi(&self) -> i128 {
        self.m() as i128
    }
}

pub fn check_var_irr(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::VarIrregularity;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    if f.m() == 0 {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph has no edges");
    }
    let (n, m) = (f.ni(), f.mi());
    let irr = f.albertson as i128;
    let rhs = Rational::new(irr * irr, m * n * n);
    let mut check = BoundCheck::exact_ge(id, f.label.clone(), f.degree_variance, rhs);
    if check.equality == Some(true) && !f.is_regular {
        check.discrepancy = Some("equality attained on a non-regular graph".to_string());
    }
    check
}

pub fn check_zagreb_lower(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::ZagrebLower;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    if f.m() == 0 {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph has no edges");
    }
    let (n, m) = (f.ni(), f.mi());
    let irr = f.albertson as i128;
    let classical = Rational::new(4 * m * m, n);
    let improvement = Rational::new(irr * irr, m * n);
    let lhs = Rational::from_integer(f.first_zagreb as i128);
    let mut check = BoundCheck::exact_ge(id, f.label.clone(), lhs, classical + improvement);
    check.aux.insert("classical_term", rational_f64(classical));
    check.aux.insert("improvement", rational_f64(improvement));
    check
}

pub fn check_energy_irb(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::EnergyIrb;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    let two_mn = 2.0 * f.m() as f64 * f.n() as f64;
    let radicand = two_mn - f.irb;
    if radicand < -FLOAT_TOL {
        return BoundCheck::not_applicable(id, f.label.clone(), "radicand negative: bound ill-posed for this graph");
    }
    let mut check = BoundCheck::float_le(id, f.label.clone(), f.energy, radicand.max(0.0).sqrt());
    check.aux.insert("mcclelland", two_mn.sqrt());
    check.aux.insert("irb", f.irb);
    check
}

pub fn check_mcclelland(f: &GraphFacts) -> BoundCheck {
    let rhs = (2.0 * f.m() as f64 * f.n() as f64).sqrt();
    BoundCheck::float_le(BoundId::McClelland, f.label.clone(), f.energy, rhs)
}

pub fn check_koolen_moulton(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::KoolenMoulton;
    if 2 * f.m() <= f.n() {
        return BoundCheck::not_applicable(id, f.label.clone(), "requires 2m > n");
    }
    let (n, m) = (f.n() as f64, f.m() as f64);
    let mean = 2.0 * m / n;
    let rhs = mean + ((n - 1.0) * (2.0 * m - mean * mean)).sqrt();
    let mut check = BoundCheck::float_le(id, f.label.clone(), f.energy, rhs);
    // Side-by-side with the IRB-based bound: reported, never asserted.
    let irb_rhs = (2.0 * m * n - f.irb).max(0.0).sqrt();
    check.aux.insert("rhs_thm_2_5", irb_rhs);
    check.note = Some(if (rhs - irb_rhs).abs() <= NEAR_EQUALITY_TOL {
        "rhs matches thm_2_5 rhs within tolerance".to_string()
    } else if rhs < irb_rhs {
        "eq_15 rhs is smaller than thm_2_5 rhs here".to_string()
    } else {
        "thm_2_5 rhs is smaller than eq_15 rhs here".to_string()
    });
    check
}

pub fn check_energy_sqrtdeg(f: &GraphFacts) -> BoundCheck {
    BoundCheck::float_le(BoundId::EnergySqrtDeg, f.label.clone(), f.energy, f.sqrt_degree_sum)
}

pub fn check_mostar_trivial(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::MostarTrivial;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    if f.n() < 3 {
        return BoundCheck::not_applicable(id, f.label.clone(), "requires n >= 3");
    }
    let mo = f.mostar.expect("connected");
    let rhs = f.m() as i64 * (f.n() as i64 - 2);
    let mut check = BoundCheck::exact_le_int(id, f.label.clone(), mo, rhs);
    check.aux.insert("distance_balanced", f64::from(mo == 0));
    check.aux.insert("is_star", f64::from(f.is_star));
    // The equality class is exactly the stars; both directions watched.
    if check.equality == Some(true) && !f.is_star {
        check.discrepancy = Some("right equality attained on a non-star graph".to_string());
    } else if f.is_star && check.equality == Some(false) {
        check.discrepancy = Some("star without right equality".to_string());
    }
    check
}

/// Inner polynomial of the bipartite diameter-3 bound, exactly in integers.
fn diam3_inner_poly(n1: i128, n2: i128, n: i128, m: i128, zagreb: i128) -> i128 {
    n1 * n2 * n * n - 4 * m * n * n + 4 * zagreb * n - 4 * n1 * n1 * n2 * n2 - 16 * m * m
        + 16 * n1 * n2 * m
}

fn require_bipartite_diam3(
    f: &GraphFacts,
    id: BoundId,
) -> Result<(usize, usize), Box<BoundCheck>> {
    if !f.connected {
        return Err(BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected").into());
    }
    if !f.bipartition.is_bipartite {
        return Err(BoundCheck::not_applicable(id, f.label.clone(), "graph is not bipartite").into());
    }
    if f.diameter != Some(3) {
        return Err(BoundCheck::not_applicable(
            id,
            f.label.clone(),
            format!("diameter is {:?}, requires exactly 3", f.diameter),
        )
        .into());
    }
    Ok((f.bipartition.n1, f.bipartition.n2))
}

pub fn check_mostar_bipartite_diam3(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::MostarBipartiteDiam3;
    let (n1, n2) = match require_bipartite_diam3(f, id) {
        Ok(parts) => parts,
        Err(na) => return *na,
    };
    let inner = diam3_inner_poly(n1 as i128, n2 as i128, f.ni(), f.mi(), f.first_zagreb as i128);
    if inner < 0 {
        let mut na = BoundCheck::not_applicable(
            id,
            f.label.clone(),
            "radicand negative: bound vacuous/ill-posed for this graph",
        );
        na.aux.insert("inner_poly", inner as f64);
        return na;
    }
    let rhs = (f.m() as f64 * f.lambda_max / f.n() as f64 * inner as f64).sqrt();
    let mo = f.mostar.expect("connected");
    let mut check = BoundCheck::float_le(id, f.label.clone(), mo as f64, rhs);
    check.aux.insert("inner_poly", inner as f64);
    check.aux.insert("lambda_max", f.lambda_max);
    check
}

pub fn check_goldberg(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::Goldberg;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    let (n, m) = (f.ni(), f.mi());
    // m(n·M1 - 4m²) = m·n²·Var ≥ 0, exactly.
    let radicand_int = m * (n * f.first_zagreb as i128 - 4 * m * m);
    debug_assert!(radicand_int >= 0);
    let rhs = (radicand_int as f64 * f.lambda_max / f.n() as f64).sqrt();
    let mut check = BoundCheck::float_le(id, f.label.clone(), f.albertson as f64, rhs);
    if f.bipartition.is_bipartite && f.diameter == Some(3) && f.bipartition.n1 == f.bipartition.n2
    {
        // With equal parts the Mostar index must be exactly twice the
        // Albertson index before this bound applies to it.
        let mo = f.mostar.expect("connected");
        check.aux.insert("mostar", mo as f64);
        if mo == 2 * f.albertson {
            check.note =
                Some("equal parts, diameter 3: mostar = 2*albertson verified".to_string());
        } else {
            check.discrepancy = Some(format!(
                "equal-part diameter-3 premise failed: mostar = {mo}, albertson = {}",
                f.albertson
            ));
        }
    }
    check
}

pub fn check_mostar_part_sizes(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::MostarPartSizes;
    let (n1, n2) = match require_bipartite_diam3(f, id) {
        Ok(parts) => parts,
        Err(na) => return *na,
    };
    let a = (n1 * n2) as f64;
    let nn = (f.n() * f.n()) as f64;
    let root = (4.0 * a * a + 3.0 * a * nn).sqrt();
    let rhs_sq = a * a * nn / 3.0 + (2.0 * a * a / 27.0 + a * nn / 18.0) * root
        - 4.0 * a * a * a / 27.0;
    let rhs = rhs_sq.max(0.0).sqrt();
    let mo = f.mostar.expect("connected");
    let mut check = BoundCheck::float_le(id, f.label.clone(), mo as f64, rhs);
    check.aux.insert("n1", n1 as f64);
    check.aux.insert("n2", n2 as f64);
    check
}

pub fn check_mostar_szeged(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::MostarSzeged;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    if !f.bipartition.is_bipartite {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is not bipartite");
    }
    let m = f.mi();
    let n = f.ni();
    let sz = f.szeged.expect("connected") as i128;
    let radicand = m * m * n * n - 4 * m * sz;
    if radicand < 0 {
        let mut na = BoundCheck::not_applicable(
            id,
            f.label.clone(),
            "radicand negative: bound vacuous/ill-posed for this graph",
        );
        na.aux.insert("radicand", radicand as f64);
        return na;
    }
    let mo = f.mostar.expect("connected");
    let mut check =
        BoundCheck::exact_le_sqrt(id, f.label.clone(), mo, Rational::from_integer(radicand));
    check.aux.insert("radicand", radicand as f64);
    check
}

pub fn check_triangle_sandwich(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::TriangleSandwich;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    let (n, m) = (f.ni(), f.mi());
    let lower = Rational::new(m * (4 * m - n * n), n);
    let three_t = Rational::from_integer(3 * f.triangles as i128);
    let upper = Rational::from_integer(f.sum_equidistant.expect("connected") as i128);
    let holds_lower = lower <= three_t;
    let holds_upper = three_t <= upper;
    let slack_lower = rational_f64(three_t - lower);
    let slack_upper = rational_f64(upper - three_t);
    let mut check = BoundCheck {
        bound_id: id,
        graph6: f.label.clone(),
        applicable: true,
        reason: String::new(),
        relation: Relation::Le,
        lhs: Some(rational_f64(lower)),
        rhs: Some(rational_f64(upper)),
        slack: Some(slack_lower.min(slack_upper)),
        holds: Some(holds_lower && holds_upper),
        equality: Some(lower == three_t && three_t == upper),
        exact: true,
        discrepancy: None,
        note: None,
        aux: BTreeMap::new(),
    };
    check.aux.insert("three_t", rational_f64(three_t));
    check.aux.insert("slack_lower", slack_lower);
    check.aux.insert("slack_upper", slack_upper);
    check.aux.insert("equality_lower", f64::from(lower == three_t));
    check.aux.insert("equality_upper", f64::from(three_t == upper));
    check
}

pub fn check_mostar_dense(f: &GraphFacts) -> BoundCheck {
    let id = BoundId::MostarDense;
    if !f.connected {
        return BoundCheck::not_applicable(id, f.label.clone(), "graph is disconnected");
    }
    let (n, m) = (f.ni(), f.mi());
    if 4 * m <= n * n {
        return BoundCheck::not_applicable(id, f.label.clone(), "requires m > n^2/4");
    }
    // m²(n-2)² - m²(n-2)(4m-n²)/n = m²(n-2)(2n² - 2n - 4m)/n ≥ 0.
    let radicand = Rational::new(m * m * (n - 2) * (n * (n - 2) - (4 * m - n * n)), n);
    if radicand < Rational::new(0, 1) {
        return BoundCheck::not_applicable(
            id,
            f.label.clone(),
            "radicand negative: bound vacuous/ill-posed for this graph",
        );
    }
    let mo = f.mostar.expect("connected");
    let mut check = BoundCheck::exact_le_sqrt(id, f.label.clone(), mo, radicand);
    let trivial = (m * (n - 2)) as f64;
    check.aux.insert("trivial_rhs", trivial);
    check.aux.insert("strict", f64::from(check.equality == Some(false)));
    if check.equality == Some(true) {
        check.discrepancy =
            Some("equality attained; the strict form of the bound fails here".to_string());
    }
    check
}

/// Per-bound tallies over a batch.
#[derive(Clone, Debug, Serialize)]
pub struct BoundStats {
    pub bound_id: BoundId,
    pub applicable: usize,
    pub not_applicable: usize,
    pub holds: usize,
    pub equality: usize,
    pub violations: usize,
    pub discrepancies: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub graphs: usize,
    pub violations: usize,
    pub discrepancies: usize,
    pub bounds: Vec<BoundStats>,
}

/// Full result of a suite run: summary plus every check, with violating
/// checks repeated for quick access (each embeds its graph6 witness).
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub summary: SuiteSummary,
    pub checks: Vec<BoundCheck>,
    pub violations: Vec<BoundCheck>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV with one row per check: `bound_id,graph6,lhs,rhs,slack,equality,applicable`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("bound_id,graph6,lhs,rhs,slack,equality,applicable\n");
        for check in &self.checks {
            out.push_str(&check.csv_row());
            out.push('\n');
        }
        out
    }
}

/// Runs the selected bounds over a batch of graphs.
///
/// Duplicate selections are collapsed and bounds run in their canonical
/// order; checks appear in input graph order. Graphs are evaluated in
/// parallel under the ambient rayon pool, and per-graph failures (for
/// example a solver error) are recorded as not-applicable rather than
/// aborting the batch.
pub fn run_suite(graphs: &[Graph], bounds: &[BoundId]) -> SuiteReport {
    let selected: Vec<BoundId> =
        BoundId::ALL.into_iter().filter(|b| bounds.contains(b)).collect();
    let per_graph: Vec<Vec<BoundCheck>> = graphs
        .par_iter()
        .map(|g| match GraphFacts::new(g.clone()) {
            Ok(facts) => selected.iter().map(|b| b.run(&facts)).collect(),
            Err(err) => {
                let label = graph_label(g);
                selected
                    .iter()
                    .map(|&b| {
                        BoundCheck::not_applicable(b, label.clone(), format!("solver failure: {err}"))
                    })
                    .collect()
            }
        })
        .collect();

    let checks: Vec<BoundCheck> = per_graph.into_iter().flatten().collect();
    let mut stats: BTreeMap<BoundId, BoundStats> = selected
        .iter()
        .map(|&b| {
            (b, BoundStats {
                bound_id: b,
                applicable: 0,
                not_applicable: 0,
                holds: 0,
                equality: 0,
                violations: 0,
                discrepancies: 0,
            })
        })
        .collect();
    let mut violations = Vec::new();
    for check in &checks {
        let entry = stats.get_mut(&check.bound_id).expect("selected bound");
        if check.applicable {
            entry.applicable += 1;
        } else {
            entry.not_applicable += 1;
        }
        if check.holds == Some(true) {
            entry.holds += 1;
        }
        if check.equality == Some(true) {
            entry.equality += 1;
        }
        if check.discrepancy.is_some() {
            entry.discrepancies += 1;
        }
        if check.is_violation() {
            entry.violations += 1;
            violations.push(check.clone());
        }
    }
    let bounds_stats: Vec<BoundStats> = stats.into_values().collect();
    let summary = SuiteSummary {
        graphs: graphs.len(),
        violations: violations.len(),
        discrepancies: bounds_stats.iter().map(|s| s.discrepancies).sum(),
        bounds: bounds_stats,
    };
    SuiteReport { summary, checks, violations }
}
