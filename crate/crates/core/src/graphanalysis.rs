//! The entanglement-graph layer: masses are nodes, pairs with nonzero
//! entangling phase are edges. Graph connectivity decides genuine
//! many-body entanglement; exact rational phase ratios decide the GHZ and
//! full-separability conditions.
//!
//! Rationality is an input-type property, never inferred from floats: a
//! float [`PhaseMatrix`] gets graph and bound analyses only, while the GHZ
//! and separability predicates demand [`RationalPhases`].

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use std::f64::consts::{PI, TAU};
use thiserror::Error;

use crate::closedform::{self, Bipartition};
use crate::geometry::PhaseMatrix;

/// Default edge threshold separating structural zeros from floating dust
/// in geometry-derived matrices.
pub const DEFAULT_EPSILON_EDGE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("all entangling phases are zero")]
    AllZeroPhases,
    #[error("mass index {index} out of range for {n} masses")]
    IndexError { index: usize, n: usize },
    #[error("indices must be distinct, got {index} twice")]
    SameIndex { index: usize },
    #[error("at least {required} masses required, got {n}")]
    TooFewNodes { required: usize, n: usize },
    #[error("invalid multipliers: {0}")]
    InvalidMultipliers(String),
    #[error("closed-form evaluation failed: {0}")]
    ClosedForm(String),
}

/// One graph edge; indices are zero-based mass indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphEdge {
    pub p: usize,
    pub q: usize,
    pub phi: f64,
}

/// Undirected graph of nonzero entangling phases.
#[derive(Debug, Clone)]
pub struct EntanglementGraph {
    n: usize,
    epsilon_edge: f64,
    adj: Vec<u32>,
    edges: Vec<GraphEdge>,
}

impl EntanglementGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn epsilon_edge(&self) -> f64 {
        self.epsilon_edge
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn has_edge(&self, p: usize, q: usize) -> bool {
        self.adj[p] >> q & 1 == 1
    }

    /// Graph with one edge removed; used for monotonicity checks.
    pub fn without_edge(&self, p: usize, q: usize) -> EntanglementGraph {
        let mut g = self.clone();
        g.adj[p] &= !(1 << q);
        g.adj[q] &= !(1 << p);
        g.edges.retain(|e| !(e.p == p.min(q) && e.q == p.max(q)));
        g
    }
}

/// Build the graph: edge (p, q) present iff Phi_pq > epsilon_edge.
pub fn build_graph(phases: &PhaseMatrix, epsilon_edge: f64) -> EntanglementGraph {
    let n = phases.n();
    let mut adj = vec![0u32; n];
    let mut edges = Vec::new();
    for (p, q, phi) in phases.pairs() {
        if phi > epsilon_edge {
            adj[p] |= 1 << q;
            adj[q] |= 1 << p;
            edges.push(GraphEdge { p, q, phi });
        }
    }
    EntanglementGraph {
        n,
        epsilon_edge,
        adj,
        edges,
    }
}

/// Flood fill from the lowest alive node; returns the reached mask.
fn component_of(adj: &[u32], alive: u32, start: usize) -> u32 {
    let mut reached = 1u32 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & alive & !reached;
        }
        reached |= next;
        frontier = next;
    }
    reached
}

pub fn is_connected(g: &EntanglementGraph) -> bool {
    if g.n <= 1 {
        return true;
    }
    let alive = full_mask(g.n);
    component_of(&g.adj, alive, 0) == alive
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn connected_without(adj: &[u32], n: usize, removed: u32) -> bool {
    let alive = full_mask(n) & !removed;
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    component_of(adj, alive, start) == alive
}

/// Vertex connectivity kappa(G): the largest k such that removing any
/// k - 1 nodes leaves the graph connected; 0 for disconnected graphs,
/// n - 1 for the complete graph.
///
/// Brute-force vertex-subset search; exponential in n, intended for the
/// desk scale this crate works at.
pub fn connectivity(g: &EntanglementGraph) -> usize {
    let n = g.n;
    if n <= 1 {
        return 0;
    }
    if !is_connected(g) {
        return 0;
    }
    // smallest r whose removal disconnects the rest; the remainder needs
    // at least two nodes to be disconnected
    for r in 1..=n.saturating_sub(2) {
        let mut idx: Vec<usize> = (0..r).collect();
        loop {
            let removed = idx.iter().fold(0u32, |m, &i| m | 1 << i);
            if !connected_without(&g.adj, n, removed) {
                return r;
            }
            if !crate::numeric::next_combination(&mut idx, n) {
                break;
            }
        }
    }
    n - 1
}

/// Outcome of the genuine-entanglement predicate.
#[derive(Debug, Clone, PartialEq)]
pub enum GenuineVerdict {
    /// Connected graph: no bipartition has identically-zero I-concurrence.
    Genuine,
    /// Disconnected: the witness bipartition has no cross edges, so its
    /// I-concurrence vanishes at all times.
    NotGenuine { witness: Bipartition },
}

impl GenuineVerdict {
    pub fn is_genuine(&self) -> bool {
        matches!(self, GenuineVerdict::Genuine)
    }

    pub fn witness(&self) -> Option<&Bipartition> {
        match self {
            GenuineVerdict::Genuine => None,
            GenuineVerdict::NotGenuine { witness } => Some(witness),
        }
    }
}

/// Genuine N-body entanglement emerges iff the graph is connected. For a
/// disconnected graph the component of mass 0 versus everything else is
/// returned as witness.
pub fn predicts_genuine_entanglement(
    g: &EntanglementGraph,
) -> Result<GenuineVerdict, GraphError> {
    if g.n < 2 {
        return Err(GraphError::TooFewNodes { required: 2, n: g.n });
    }
    let alive = full_mask(g.n);
    let comp = component_of(&g.adj, alive, 0);
    if comp == alive {
        return Ok(GenuineVerdict::Genuine);
    }
    let witness = Bipartition::new(g.n, comp)
        .expect("component of a disconnected graph is proper and nonempty");
    Ok(GenuineVerdict::NotGenuine { witness })
}

/// Exact rational phase ratios: Phi_pq = (n_pq/d_pq) Phi_0.
#[derive(Debug, Clone)]
pub struct RationalPhases {
    base: f64,
    n: usize,
    multipliers: Vec<Ratio<i64>>,
}

impl RationalPhases {
    /// Validate a symmetric, zero-diagonal matrix of nonnegative rational
    /// multipliers of the base rate `base` (rad/s).
    pub fn new(base: f64, rows: &[Vec<Ratio<i64>>]) -> Result<Self, GraphError> {
        let n = rows.len();
        if n < 2 {
            return Err(GraphError::TooFewNodes { required: 2, n });
        }
        if !(base > 0.0) || !base.is_finite() {
            return Err(GraphError::InvalidMultipliers(format!(
                "base rate must be positive and finite, got {base}"
            )));
        }
        let zero = Ratio::new(0, 1);
        for (p, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::InvalidMultipliers(format!(
                    "row {} has {} entries for n = {n}",
                    p + 1,
                    row.len()
                )));
            }
            if rows[p][p] != zero {
                return Err(GraphError::InvalidMultipliers(format!(
                    "diagonal entry {} must be zero",
                    p + 1
                )));
            }
            for q in p + 1..n {
                if rows[p][q] != rows[q][p] {
                    return Err(GraphError::InvalidMultipliers(format!(
                        "asymmetric at ({}, {})",
                        p + 1,
                        q + 1
                    )));
                }
                if rows[p][q] < zero {
                    return Err(GraphError::InvalidMultipliers(format!(
                        "negative multiplier at ({}, {})",
                        p + 1,
                        q + 1
                    )));
                }
            }
        }
        let mut multipliers = vec![zero; n * n];
        for p in 0..n {
            for q in 0..n {
                multipliers[p * n + q] = rows[p][q];
            }
        }
        Ok(Self {
            base,
            n,
            multipliers,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn multiplier(&self, p: usize, q: usize) -> Ratio<i64> {
        self.multipliers[p * self.n + q]
    }

    /// Float phase matrix Phi_pq = (n_pq/d_pq) base.
    pub fn to_phase_matrix(&self) -> PhaseMatrix {
        let mut m = PhaseMatrix::zeros(self.n);
        for p in 0..self.n {
            for q in p + 1..self.n {
                let r = self.multiplier(p, q);
                m.set(p, q, ratio_to_f64(r) * self.base);
            }
        }
        m
    }

    fn nonzero_pairs(&self) -> Vec<(usize, usize, Ratio<i64>)> {
        let zero = Ratio::new(0, 1);
        let mut out = Vec::new();
        for p in 0..self.n {
            for q in p + 1..self.n {
                let r = self.multiplier(p, q);
                if r != zero {
                    out.push((p, q, r));
                }
            }
        }
        out
    }
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Greatest common measure of positive rationals:
/// gcd(n_i)/lcm(d_i); every input is an integer multiple of it.
pub fn common_measure(ratios: &[Ratio<i64>]) -> Option<Ratio<i64>> {
    let mut it = ratios.iter();
    let first = *it.next()?;
    Some(it.fold(first, |a, &b| {
        Ratio::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
    }))
}

/// One Phi_pq = odd * Phi relation in a GHZ prediction; mass labels are
/// 1-based for reporting.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct OddEdge {
    pub p: usize,
    pub q: usize,
    pub odd: i64,
}

/// A successful GHZ condition: every (relevant) phase is an odd multiple
/// of the common measure `phi`, so the state becomes a generalised GHZ at
/// t = (2n+1) pi / phi.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GhzPrediction {
    /// Common measure Phi in rad/s.
    pub phi: f64,
    /// Phi as a multiple of the base rate: phi = (num/den) Phi_0.
    pub multiplier_num: i64,
    pub multiplier_den: i64,
    /// The odd integer for every nonzero pair.
    pub odd_multipliers: Vec<OddEdge>,
    /// First GHZ time pi / phi.
    pub first_time: f64,
    /// GHZ recurrence period 2 pi / phi.
    pub period: f64,
}

/// Decide the GHZ condition on exact rational inputs.
///
/// Strict mode (`require_all_pairs`) succeeds iff every multiplier is
/// nonzero and all pairwise ratios reduce to odd/odd. The relaxed mode
/// applies to the three-body case only, where one of the three phases may
/// be zero as long as the remaining (at least two) satisfy the odd-ratio
/// condition; for N != 3 relaxed mode behaves like strict mode.
pub fn ghz_condition(phases: &RationalPhases, require_all_pairs: bool) -> Option<GhzPrediction> {
    let n = phases.n();
    let pair_count = n * (n - 1) / 2;
    let nonzero = phases.nonzero_pairs();
    if nonzero.is_empty() {
        return None;
    }
    let relaxed_three_body = !require_all_pairs && n == 3;
    if relaxed_three_body {
        if nonzero.len() < 2 {
            return None;
        }
    } else if nonzero.len() != pair_count {
        return None;
    }

    let ratios: Vec<Ratio<i64>> = nonzero.iter().map(|&(_, _, r)| r).collect();
    let g = common_measure(&ratios)?;
    let mut odd_multipliers = Vec::with_capacity(nonzero.len());
    for &(p, q, r) in &nonzero {
        let m = r / g;
        debug_assert!(m.is_integer());
        let m = m.to_integer();
        if m % 2 == 0 {
            return None;
        }
        odd_multipliers.push(OddEdge { p: p + 1, q: q + 1, odd: m });
    }
    let phi = ratio_to_f64(g) * phases.base();
    Some(GhzPrediction {
        phi,
        multiplier_num: *g.numer(),
        multiplier_den: *g.denom(),
        odd_multipliers,
        first_time: PI / phi,
        period: TAU / phi,
    })
}

/// Full-separability recurrence for exact rational inputs.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SeparabilityTimes {
    /// Smallest t > 0 with Phi_pq t = 0 mod 2 pi for every nonzero pair.
    pub first_time: f64,
    /// Separability recurs at integer multiples of this period.
    pub period: f64,
    /// first_time = 2 pi / ((num/den) Phi_0).
    pub measure_num: i64,
    pub measure_den: i64,
}

/// Smallest t > 0 at which every pair phase winds to a multiple of 2 pi
/// simultaneously: t = 2 pi / (g Phi_0), with g the common measure of the
/// nonzero multipliers.
pub fn separability_times(phases: &RationalPhases) -> Result<SeparabilityTimes, GraphError> {
    let nonzero = phases.nonzero_pairs();
    if nonzero.is_empty() {
        return Err(GraphError::AllZeroPhases);
    }
    let ratios: Vec<Ratio<i64>> = nonzero.iter().map(|&(_, _, r)| r).collect();
    let g = common_measure(&ratios).expect("nonempty");
    let t = TAU / (ratio_to_f64(g) * phases.base());
    Ok(SeparabilityTimes {
        first_time: t,
        period: t,
        measure_num: *g.numer(),
        measure_den: *g.denom(),
    })
}

/// Symbolic separability verdict.
#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Sustainability {
    /// Trivial case: no entanglement is ever generated.
    AlwaysSeparable,
    /// Rational ratios: the state returns to a full product periodically.
    PeriodicallySeparable { first_time: f64, period: f64 },
    /// User-asserted pairwise-incommensurate phases: entanglement never
    /// fully vanishes for t > 0.
    NeverSeparable,
    /// Float input without an incommensurability assertion; rationality is
    /// undecidable from finite-precision data.
    Undetermined,
}

/// Combine the separability analysis with a user-supplied
/// incommensurability marker. Exact rational inputs always yield a
/// periodic (or trivial) verdict; float inputs are `NeverSeparable` only
/// when the caller asserts pairwise-incommensurate phases, else
/// `Undetermined`.
pub fn sustainability_verdict(
    rational: Option<&RationalPhases>,
    marked_incommensurate: bool,
) -> Sustainability {
    match rational {
        Some(r) => match separability_times(r) {
            Ok(sep) => Sustainability::PeriodicallySeparable {
                first_time: sep.first_time,
                period: sep.period,
            },
            Err(_) => Sustainability::AlwaysSeparable,
        },
        None if marked_incommensurate => Sustainability::NeverSeparable,
        None => Sustainability::Undetermined,
    }
}

/// Result of checking C_{p1|rest(N)}(t) >= C_{p1|rest(N-1)}(t) over a grid.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheckReport {
    /// 1-based index of the isolated mass.
    pub p1: usize,
    /// 1-based index of the removed mass.
    pub removed: usize,
    pub points: usize,
    /// max over the grid of C_{N-1} - C_N; nonpositive up to rounding.
    pub max_violation: f64,
    pub worst_t: f64,
}

/// Check the one-vs-rest lower bound pointwise on a time grid: the N-body
/// curve must dominate the (N-1)-body curve of the system without
/// `removed`.
pub fn one_vs_rest_bound_check(
    phases: &PhaseMatrix,
    p1: usize,
    removed: usize,
    t_grid: &[f64],
) -> Result<BoundCheckReport, GraphError> {
    let n = phases.n();
    if n < 3 {
        return Err(GraphError::TooFewNodes { required: 3, n });
    }
    for &i in &[p1, removed] {
        if i >= n {
            return Err(GraphError::IndexError { index: i, n });
        }
    }
    if p1 == removed {
        return Err(GraphError::SameIndex { index: p1 });
    }
    let sub = phases.without_mass(removed);
    let p1_sub = if removed < p1 { p1 - 1 } else { p1 };
    let bip_n = Bipartition::one_vs_rest(n, p1).expect("checked");
    let bip_sub = Bipartition::one_vs_rest(n - 1, p1_sub).expect("checked");

    let mut max_violation = f64::NEG_INFINITY;
    let mut worst_t = f64::NAN;
    for &t in t_grid {
        let c_n = closedform::iconcurrence(phases, &bip_n, t)
            .map_err(|e| GraphError::ClosedForm(e.to_string()))?;
        let c_sub = closedform::iconcurrence(&sub, &bip_sub, t)
            .map_err(|e| GraphError::ClosedForm(e.to_string()))?;
        let violation = c_sub - c_n;
        if violation > max_violation {
            max_violation = violation;
            worst_t = t;
        }
    }
    Ok(BoundCheckReport {
        p1: p1 + 1,
        removed: removed + 1,
        points: t_grid.len(),
        max_violation,
        worst_t,
    })
}
