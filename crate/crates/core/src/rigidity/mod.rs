//! The bipartite `(k,l)`-rigidity matrix and the verdicts read off its rank.
//!
//! Rows are edges. Each A-vertex owns `l` columns and each B-vertex owns `k`.
//! The row of `ab'` carries `(Θ_B[i][b])_{i<l}` in the columns of `a` and
//! `(Θ_A[i][a])_{i<k}` in the columns of `b`.

pub mod facet_ridge;
pub mod laman;

use std::fmt;

use serde::Serialize;

use crate::combinat::{BipartiteGraph, Edge, Side, Vertex};
use crate::exactla::{run_trials, GenericMatrix, PrimeField, Theta, TrialMeta, TrialPolicy};
use crate::Error;

pub use facet_ridge::{build_m, heawood_check, rows_independent_m, HeawoodReport, MReport};
pub use laman::{laman_check, LamanReport, LamanWitness, LAMAN_SIDE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeLabel(pub Edge);

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", Vertex::a(self.0 .0), Vertex::b(self.0 .1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlotLabel {
    pub vertex: Vertex,
    pub slot: usize,
}

/// Generic parameters sized for `R^{(k,l)}(g)`: square blocks for
/// shifting, with at least `k` rows on A and `l` rows on B.
pub fn rigidity_theta(g: &BipartiteGraph, k: usize, l: usize, field: PrimeField, seed: u64) -> Theta {
    Theta::sample(field, seed, &[g.a_size(), g.b_size()], &[k, l])
}

pub fn build_rigidity_matrix(
    g: &BipartiteGraph,
    k: usize,
    l: usize,
    theta: &Theta,
) -> GenericMatrix<EdgeLabel, SlotLabel> {
    assert!(theta.rows(0) >= k && theta.rows(1) >= l, "theta has too few rows for (k,l)");
    let (n, m) = (g.a_size(), g.b_size());
    let cols: Vec<SlotLabel> = (0..n)
        .flat_map(|a| (0..l).map(move |slot| SlotLabel { vertex: Vertex::a(a), slot }))
        .chain((0..m).flat_map(|b| (0..k).map(move |slot| SlotLabel { vertex: Vertex::b(b), slot })))
        .collect();
    let rows_labels: Vec<EdgeLabel> = g.edges().iter().copied().map(EdgeLabel).collect();
    let mut mat = GenericMatrix::zeros(theta.field, rows_labels, cols, theta.seed);
    for (row, &(a, b)) in mat.rows.iter_mut().zip(g.edges()) {
        for i in 0..l {
            row[a * l + i] = theta.get(1, i, b);
        }
        for i in 0..k {
            row[n * l + b * k + i] = theta.get(0, i, a);
        }
    }
    mat
}

/// `l|A| + k|B| - kl`, which may be negative for tiny sides.
pub fn max_rank(g: &BipartiteGraph, k: usize, l: usize) -> i64 {
    (l * g.a_size() + k * g.b_size()) as i64 - (k * l) as i64
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RigidityReport {
    pub k: usize,
    pub l: usize,
    pub rank: usize,
    pub is_rigid: bool,
    pub is_stress_free: bool,
    pub stress_dim: usize,
    pub max_rank: i64,
    pub n_edges: usize,
    #[serde(flatten)]
    pub meta: TrialMeta,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Rank of `R^{(k,l)}(g)` under one draw of `Θ`.
pub fn rigidity_rank_with(g: &BipartiteGraph, k: usize, l: usize, theta: &Theta) -> usize {
    build_rigidity_matrix(g, k, l, theta).rank()
}

fn side_warnings(g: &BipartiteGraph, k: usize, l: usize) -> Vec<String> {
    let mut w = Vec::new();
    if k > g.a_size() {
        w.push(format!("k = {k} exceeds |A| = {}", g.a_size()));
    }
    if l > g.b_size() {
        w.push(format!("l = {l} exceeds |B| = {}", g.b_size()));
    }
    w
}

pub fn analyze(g: &BipartiteGraph, k: usize, l: usize, policy: &TrialPolicy) -> Result<RigidityReport, Error> {
    let (rank, meta) = run_trials(policy, g.n_edges().max(1) as u64, |field, seed| {
        rigidity_rank_with(g, k, l, &rigidity_theta(g, k, l, field, seed))
    })?;
    let max_rank = max_rank(g, k, l);
    Ok(RigidityReport {
        k,
        l,
        rank,
        is_rigid: rank as i64 == max_rank,
        is_stress_free: rank == g.n_edges(),
        stress_dim: g.n_edges() - rank,
        max_rank,
        n_edges: g.n_edges(),
        meta,
        warnings: side_warnings(g, k, l),
    })
}

/// Rigidity and stress-freeness read off a shifted graph: stress free iff
/// `(k+1)(l+1)'` is absent, rigid iff every pair `ij'` with `i <= k` or
/// `j <= l` is present.
pub fn verdicts_from_shifted(shifted: &BipartiteGraph, k: usize, l: usize) -> (bool, bool) {
    let (n, m) = (shifted.a_size(), shifted.b_size());
    let stress_free = !(k < n && l < m && shifted.has_edge(k, l));
    let rigid = (0..n)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| i < k || j < l)
        .all(|(i, j)| shifted.has_edge(i, j));
    (rigid, stress_free)
}

/// A basis of self-stresses, each an edge weighting in equilibrium at every
/// vertex and slot.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StressSpace {
    pub edges: Vec<Edge>,
    pub basis: Vec<Vec<u64>>,
    /// Seed of the draw the basis was computed from.
    pub theta_seed: u64,
    #[serde(flatten)]
    pub meta: TrialMeta,
}

/// Whether the weights `w` balance at every vertex slot:
/// `Σ_b w_ab Θ_B[i][b] = 0` for each A-vertex `a`, `i < l`, and symmetrically
/// for B. Checked directly from the graph, not from the matrix.
pub fn is_self_stress(g: &BipartiteGraph, k: usize, l: usize, theta: &Theta, w: &[u64]) -> bool {
    let f = &theta.field;
    let weights: Vec<(Edge, u64)> = g.edges().iter().copied().zip(w.iter().copied()).collect();
    let side_ok = |side: Side, slots: usize, n: usize| {
        (0..n).all(|v| {
            (0..slots).all(|i| {
                let total = weights.iter().fold(0, |acc, &((a, b), x)| {
                    let (own, other, color) = match side {
                        Side::A => (a, b, 1),
                        Side::B => (b, a, 0),
                    };
                    if own == v {
                        f.add(acc, f.mul(x, theta.get(color, i, other)))
                    } else {
                        acc
                    }
                });
                total == 0
            })
        })
    };
    side_ok(Side::A, l, g.a_size()) && side_ok(Side::B, k, g.b_size())
}

pub fn stress_space(g: &BipartiteGraph, k: usize, l: usize, policy: &TrialPolicy) -> Result<StressSpace, Error> {
    let (dim, meta) = run_trials(policy, g.n_edges().max(1) as u64, |field, seed| {
        g.n_edges() - rigidity_rank_with(g, k, l, &rigidity_theta(g, k, l, field, seed))
    })?;
    let seed = policy.trial_seed(0);
    let theta = rigidity_theta(g, k, l, policy.field, seed);
    let basis = build_rigidity_matrix(g, k, l, &theta).left_kernel();
    if basis.len() != dim {
        return Err(Error::Trial(crate::exactla::TrialError::Disagreement {
            trials: meta.trials,
            detail: format!("kernel of first draw has dimension {}, trials agreed on {dim}", basis.len()),
        }));
    }
    for w in &basis {
        assert!(is_self_stress(g, k, l, &theta, w), "left kernel vector fails equilibrium");
    }
    Ok(StressSpace { edges: g.edges().iter().copied().collect(), basis, theta_seed: seed, meta })
}
