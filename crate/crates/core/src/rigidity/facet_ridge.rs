//! The facet-by-ridge matrix `M(K,l)` of a pure balanced complex.
//!
//! Rows are facets, columns come in `l`-tuples per ridge, and the block of a
//! facet `F` at a ridge `G ⊂ F` is the `l`-vector of the vertex `F - G`.
//! Its rows are independent exactly when the shifted complex, taken with an
//! order whose first `l` vertices of every color come first, avoids the join
//! of `d + 1` sets of `l + 1` points.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::combinat::{BalancedComplex, CombinatError, Face, VertexOrder};
use crate::exactla::{run_trials, GenericMatrix, Theta, TrialMeta, TrialPolicy};
use crate::shifting::{contains_join, shift_complex};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RidgeSlot {
    pub ridge: Face,
    pub slot: usize,
}

impl fmt::Display for RidgeSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.ridge, self.slot + 1)
    }
}

/// Generic parameters with at least `l` rows per color.
pub fn m_theta(k: &BalancedComplex, l: usize, field: crate::exactla::PrimeField, seed: u64) -> Theta {
    Theta::sample(field, seed, k.color_sizes(), &vec![l; k.n_colors()])
}

pub fn build_m(k: &BalancedComplex, l: usize, theta: &Theta) -> Result<GenericMatrix<Face, RidgeSlot>, Error> {
    if !k.is_pure() {
        return Err(CombinatError::NotPure.into());
    }
    let ridges: Vec<Face> = k.ridges().into_iter().collect();
    let col_of: BTreeMap<&Face, usize> = ridges.iter().enumerate().map(|(i, r)| (r, i * l)).collect();
    let cols = ridges
        .iter()
        .flat_map(|r| (0..l).map(move |slot| RidgeSlot { ridge: r.clone(), slot }))
        .collect();
    let facets: Vec<Face> = k.facets().iter().cloned().collect();
    let mut m = GenericMatrix::zeros(theta.field, facets, cols, theta.seed);
    for (row, facet) in m.rows.iter_mut().zip(&m.row_labels) {
        for &(c, v) in facet.vertices() {
            let base = col_of[&facet.without((c, v))];
            for i in 0..l {
                row[base + i] = theta.get(c, i, v);
            }
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MReport {
    pub l: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub rows_independent: bool,
    #[serde(flatten)]
    pub meta: TrialMeta,
}

pub fn rows_independent_m(k: &BalancedComplex, l: usize, policy: &TrialPolicy) -> Result<MReport, Error> {
    let probe = build_m(k, l, &m_theta(k, l, policy.field, 0))?;
    let (rows, cols) = (probe.n_rows(), probe.n_cols());
    let (rank, meta) = run_trials(policy, rows.max(1) as u64, |field, seed| {
        build_m(k, l, &m_theta(k, l, field, seed)).expect("purity checked").rank()
    })?;
    Ok(MReport { l, rows, cols, rank, rows_independent: rank == rows, meta })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HeawoodReport {
    pub f_d: usize,
    pub f_d_minus_1: usize,
    /// The shifted complex avoids the join of `d + 1` three-point sets.
    pub shifted_avoids_join: bool,
    /// `f_d <= 2 f_{d-1}`.
    pub inequality_holds: bool,
    /// Largest fibre of `F ↦ F - min(F)` on facets of the shifted complex.
    pub max_fibre: usize,
    #[serde(flatten)]
    pub meta: TrialMeta,
}

impl HeawoodReport {
    pub fn holds(&self) -> bool {
        self.inequality_holds
    }
}

/// Shifts `k` under the default order with the first two vertices of every
/// color in front. If the result avoids the three-point join, removing the
/// least vertex maps facets to ridges at most two to one, so the count
/// `f_d <= 2 f_{d-1}` must hold; the report records both the fibre bound and
/// the inequality.
pub fn heawood_check(k: &BalancedComplex, policy: &TrialPolicy) -> Result<HeawoodReport, Error> {
    if !k.is_pure() {
        return Err(CombinatError::NotPure.into());
    }
    let order = VertexOrder::default_admissible(k.color_sizes(), &vec![2; k.n_colors()]);
    let r = shift_complex(k, &order, policy)?;
    let shifted = r.shifted;
    let mut fibres: BTreeMap<Face, usize> = BTreeMap::new();
    for f in shifted.facets() {
        let least = *f.vertices().iter().min_by_key(|&&v| order.position(v)).expect("nonempty facet");
        *fibres.entry(f.without(least)).or_default() += 1;
    }
    let fv = k.f_vector();
    let d1 = k.n_colors();
    let (f_d, f_d_minus_1) = (fv[d1], if d1 >= 1 { fv[d1 - 1] } else { 0 });
    let avoids = !contains_join(&shifted, 3);
    let max_fibre = fibres.values().copied().max().unwrap_or(0);
    if avoids {
        assert!(max_fibre <= 2, "fibre bound fails on a shifted complex avoiding the join");
    }
    Ok(HeawoodReport {
        f_d,
        f_d_minus_1,
        shifted_avoids_join: avoids,
        inequality_holds: f_d <= 2 * f_d_minus_1,
        max_fibre,
        meta: r.meta,
    })
}
