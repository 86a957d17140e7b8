//! Exhaustive `(k,l)`-Laman counts.
//!
//! Condition (i) is the global count `|E| = l|A| + k|B| - kl`. Condition
//! (ii) bounds every induced subgraph with `|A'| >= k`, `|B'| >= l` by
//! `l|A'| + k|B'| - kl`.
//!
//! Only one side is enumerated. For a fixed `A'`, the densest `B'` of size
//! `s` takes the `s` vertices with most neighbours in `A'`, so comparing
//! prefix sums of the sorted counts covers every `B'` at once. The smaller
//! side is the one enumerated, so the cost is `2^min(|A|,|B|)` times a sort.

use serde::Serialize;

use crate::combinat::BipartiteGraph;
use crate::Error;

/// Largest smaller-side size accepted by `laman_check`.
pub const LAMAN_SIDE_CAP: usize = 22;

/// An induced subgraph breaking the hereditary bound. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LamanWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub edges: usize,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LamanReport {
    pub k: usize,
    pub l: usize,
    pub holds: bool,
    pub count_ok: bool,
    pub hereditary_ok: bool,
    pub edges: usize,
    pub target: i64,
    pub witness: Option<LamanWitness>,
    pub subsets_checked: u64,
}

pub fn laman_check(g: &BipartiteGraph, k: usize, l: usize) -> Result<LamanReport, Error> {
    if g.a_size() < k || g.b_size() < l {
        return Err(Error::Invalid(format!(
            "sides ({}, {}) are smaller than (k, l) = ({k}, {l})",
            g.a_size(),
            g.b_size()
        )));
    }
    let small = g.a_size().min(g.b_size());
    if small > LAMAN_SIDE_CAP {
        return Err(Error::SizeCap(format!(
            "exhaustive check enumerates the smaller side, {small} > {LAMAN_SIDE_CAP} vertices"
        )));
    }
    // Enumerate A of the oriented graph; transposing swaps the roles of k, l.
    let transposed = g.a_size() > g.b_size();
    let (h, kk, ll) = if transposed { (g.transpose(), l, k) } else { (g.clone(), k, l) };
    let target = max_count(g.a_size(), g.b_size(), k, l);

    let n = h.a_size();
    let nbr_masks: Vec<u64> = (0..h.b_size())
        .map(|j| {
            (0..n).filter(|&i| h.has_edge(i, j)).fold(0u64, |m, i| m | 1 << i)
        })
        .collect();

    let mut witness = None;
    let mut checked = 0u64;
    let mut counts: Vec<(usize, usize)> = Vec::with_capacity(h.b_size());
    'outer: for mask in 0u64..1 << n {
        let a_count = mask.count_ones() as usize;
        if a_count < kk {
            continue;
        }
        checked += 1;
        counts.clear();
        counts.extend(nbr_masks.iter().enumerate().map(|(j, &nm)| ((nm & mask).count_ones() as usize, j)));
        counts.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let mut edges = 0usize;
        for (s, &(c, _)) in counts.iter().enumerate() {
            edges += c;
            let size = s + 1;
            if size < ll {
                continue;
            }
            let bound = max_count(a_count, size, kk, ll);
            if edges as i64 > bound {
                let a_side: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let mut b_side: Vec<usize> = counts[..size].iter().map(|&(_, j)| j).collect();
                b_side.sort_unstable();
                let (a, b) = if transposed { (b_side, a_side) } else { (a_side, b_side) };
                witness = Some(LamanWitness { a, b, edges, bound });
                break 'outer;
            }
        }
    }
    let count_ok = g.n_edges() as i64 == target;
    let hereditary_ok = witness.is_none();
    Ok(LamanReport {
        k,
        l,
        holds: count_ok && hereditary_ok,
        count_ok,
        hereditary_ok,
        edges: g.n_edges(),
        target,
        witness,
        subsets_checked: checked,
    })
}

fn max_count(a: usize, b: usize, k: usize, l: usize) -> i64 {
    (l * a + k * b) as i64 - (k * l) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Vertex;
    use proptest::prelude::*;

    fn example_5_5() -> BipartiteGraph {
        let mut k = BipartiteGraph::complete(3, 3);
        k.remove_edge(2, 2);
        k.glue(&k, &[(Vertex::a(2), Vertex::a(2)), (Vertex::b(2), Vertex::b(2))]).unwrap().0
    }

    fn k44() -> BipartiteGraph {
        BipartiteGraph::complete(4, 4)
    }

    #[test]
    fn doubled_k33_minus_is_22_laman() {
        let r = laman_check(&example_5_5(), 2, 2).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!((r.edges, r.target), (16, 16));
    }

    #[test]
    fn k33_fails_the_global_count_only() {
        let r = laman_check(&BipartiteGraph::complete(3, 3), 2, 2).unwrap();
        assert!(!r.holds && !r.count_ok);
        // K_{3,3} itself exceeds the bound, so the hereditary check also
        // flags the whole graph.
        assert_eq!(r.witness.as_ref().map(|w| (w.a.len(), w.b.len())), Some((3, 3)));
    }

    #[test]
    fn k44_is_14_laman() {
        assert!(laman_check(&k44(), 1, 4).unwrap().holds);
        assert!(laman_check(&k44(), 4, 1).unwrap().holds);
    }

    #[test]
    fn witness_sides_survive_transposition() {
        // Dense K_{3,3} block inside a sparse, wide graph.
        let mut g = BipartiteGraph::empty(6, 3);
        for i in 0..3 {
            for j in 0..3 {
                g.add_edge(i, j);
            }
        }
        let w = laman_check(&g, 2, 2).unwrap().witness.unwrap();
        assert!(w.a.iter().all(|&i| i < 3) && w.b.iter().all(|&j| j < 3));
        assert!(w.edges as i64 > w.bound);
    }

    #[test]
    fn rejects_small_sides_and_oversized_inputs() {
        assert!(matches!(laman_check(&BipartiteGraph::complete(1, 3), 2, 1), Err(Error::Invalid(_))));
        assert!(matches!(
            laman_check(&BipartiteGraph::empty(23, 23), 1, 1),
            Err(Error::SizeCap(_))
        ));
    }

    /// Direct definition: every pair of subsets.
    fn brute(g: &BipartiteGraph, k: usize, l: usize) -> bool {
        let (n, m) = (g.a_size(), g.b_size());
        for am in 0u32..1 << n {
            for bm in 0u32..1 << m {
                let (ac, bc) = (am.count_ones() as usize, bm.count_ones() as usize);
                if ac < k || bc < l {
                    continue;
                }
                let e = g.edges().iter().filter(|&&(i, j)| am >> i & 1 == 1 && bm >> j & 1 == 1).count();
                if e as i64 > max_count(ac, bc, k, l) {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn hereditary_check_matches_brute_force(
            n in 1usize..6, m in 1usize..6,
            bits in any::<u64>(), k in 1usize..3, l in 1usize..3,
        ) {
            prop_assume!(k <= n && l <= m);
            let edges = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|&(i, j)| bits >> (i * 6 + j) & 1 == 1);
            let g = BipartiteGraph::new(n, m, edges).unwrap();
            let r = laman_check(&g, k, l).unwrap();
            prop_assert_eq!(r.hereditary_ok, brute(&g, k, l));
        }
    }
}
