//! Balanced shifting of bipartite graphs and balanced complexes.
//!
//! For a colorset `T`, the faces of `K` with colorset `T` form a basis of the
//! corresponding multigraded piece of the face ring. A colorful candidate
//! `{v_c : c in T}` stands for the product of the generic linear forms
//! `θ_{v_c}`; its coordinate on a face `F` is `∏_c Θ_c[v_c][F_c]`. Candidates
//! are scanned in lexicographic order of their sorted vertex positions and
//! kept greedily while independent. The shifted complex is the union of the
//! kept candidates over all colorsets.
//!
//! For a graph only `T = {A, B}` matters, and candidate order reduces to
//! comparing the earlier endpoint first, then the later one.

use std::collections::BTreeSet;

use crate::combinat::{BalancedComplex, BipartiteGraph, CVertex, Face, VertexOrder};
use crate::exactla::{run_trials, EchelonBasis, Theta, TrialMeta, TrialPolicy};
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct ShiftResult<T> {
    pub shifted: T,
    pub order: VertexOrder,
    pub meta: TrialMeta,
}

fn check_order(order: &VertexOrder, sizes: &[usize]) -> Result<(), Error> {
    if order.sizes() != sizes {
        return Err(Error::Invalid(format!(
            "order covers color classes {:?}, input has {:?}",
            order.sizes(),
            sizes
        )));
    }
    Ok(())
}

/// Colorful candidates with colorset `mask`, sorted by the lexicographic
/// order of their vertex positions.
fn candidates(sizes: &[usize], mask: u64, order: &VertexOrder) -> Vec<Face> {
    let colors: Vec<usize> = (0..sizes.len()).filter(|&c| mask >> c & 1 == 1).collect();
    let mut out: Vec<(Vec<usize>, Face)> = Vec::new();
    let mut idx = vec![0usize; colors.len()];
    if colors.iter().any(|&c| sizes[c] == 0) {
        return Vec::new();
    }
    loop {
        let verts: Vec<CVertex> = colors.iter().zip(&idx).map(|(&c, &i)| (c, i)).collect();
        let mut key: Vec<usize> = verts.iter().map(|&v| order.position(v)).collect();
        key.sort_unstable();
        out.push((key, Face::new(verts).expect("one vertex per color")));
        // odometer
        let mut k = 0;
        loop {
            if k == colors.len() {
                out.sort();
                return out.into_iter().map(|(_, f)| f).collect();
            }
            idx[k] += 1;
            if idx[k] < sizes[colors[k]] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Greedy lexicographic basis of one multigraded piece.
fn greedy_piece(basis: &[Face], cands: &[Face], theta: &Theta) -> Vec<Face> {
    let f = &theta.field;
    let mut ech = EchelonBasis::new(*f, basis.len());
    let mut picked = Vec::with_capacity(basis.len());
    for cand in cands {
        if picked.len() == basis.len() {
            break;
        }
        let row: Vec<u64> = basis
            .iter()
            .map(|face| {
                cand.vertices()
                    .iter()
                    .zip(face.vertices())
                    .fold(1, |acc, (&(c, v), &(_, w))| f.mul(acc, theta.get(c, v, w)))
            })
            .collect();
        if ech.insert(&row) {
            picked.push(cand.clone());
        }
    }
    picked
}

/// Shifts `k` with the given generic parameters. `theta` needs a square
/// block per color.
pub fn shift_complex_with(k: &BalancedComplex, order: &VertexOrder, theta: &Theta) -> BalancedComplex {
    let sizes = k.color_sizes();
    let mut faces: BTreeSet<Face> = BTreeSet::new();
    let mut any_face = false;
    for mask in 0..=k.full_colorset() {
        let basis = k.faces_with_colorset(mask);
        if basis.is_empty() {
            continue;
        }
        any_face = true;
        let picked = greedy_piece(&basis, &candidates(sizes, mask, order), theta);
        assert_eq!(picked.len(), basis.len(), "greedy basis must have full size");
        faces.extend(picked);
    }
    let shifted = if any_face {
        BalancedComplex::new(sizes.to_vec(), faces.iter().cloned()).expect("candidates lie in range")
    } else {
        BalancedComplex::void(sizes.to_vec())
    };
    debug_assert!(
        faces.iter().all(|f| f.boundary().all(|g| faces.contains(&g))),
        "shifted faces are closed under subsets"
    );
    debug_assert_eq!(shifted.f_vector(), k.f_vector());
    debug_assert!(is_shifted_complex(&shifted));
    shifted
}

/// Shifts `g` with the given generic parameters.
pub fn shift_graph_with(g: &BipartiteGraph, order: &VertexOrder, theta: &Theta) -> BipartiteGraph {
    let edges: Vec<Face> = g
        .edges()
        .iter()
        .map(|&(i, j)| Face::new([(0, i), (1, j)]).unwrap())
        .collect();
    let cands = candidates(&[g.a_size(), g.b_size()], 0b11, order);
    let picked = greedy_piece(&edges, &cands, theta);
    let shifted = BipartiteGraph::new(
        g.a_size(),
        g.b_size(),
        picked.iter().map(|f| (f.vertices()[0].1, f.vertices()[1].1)),
    )
    .expect("candidates lie in range");
    assert_eq!(shifted.n_edges(), g.n_edges(), "shifting preserves the edge count");
    debug_assert!(is_shifted_graph(&shifted));
    shifted
}

/// Candidate count times piece size bounds the degree of all minors the
/// greedy scan depends on.
fn complex_degree(k: &BalancedComplex) -> u64 {
    let cands: u64 = k.color_sizes().iter().map(|&n| n as u64 + 1).product();
    let faces = k.faces().len() as u64;
    cands.saturating_mul(faces).saturating_mul(k.n_colors() as u64 + 1)
}

pub fn shift_graph(
    g: &BipartiteGraph,
    order: &VertexOrder,
    policy: &TrialPolicy,
) -> Result<ShiftResult<BipartiteGraph>, Error> {
    let sizes = [g.a_size(), g.b_size()];
    check_order(order, &sizes)?;
    let degree = (sizes[0] * sizes[1]) as u64 * 2 * g.n_edges().max(1) as u64;
    let (shifted, meta) = run_trials(policy, degree, |field, seed| {
        shift_graph_with(g, order, &Theta::sample(field, seed, &sizes, &[]))
    })?;
    Ok(ShiftResult { shifted, order: order.clone(), meta })
}

pub fn shift_complex(
    k: &BalancedComplex,
    order: &VertexOrder,
    policy: &TrialPolicy,
) -> Result<ShiftResult<BalancedComplex>, Error> {
    check_order(order, k.color_sizes())?;
    let (shifted, meta) = run_trials(policy, complex_degree(k), |field, seed| {
        shift_complex_with(k, order, &Theta::sample(field, seed, k.color_sizes(), &[]))
    })?;
    Ok(ShiftResult { shifted, order: order.clone(), meta })
}

/// Every edge `ij'` forces all `pq'` with `p <= i`, `q <= j`.
pub fn is_shifted_graph(g: &BipartiteGraph) -> bool {
    g.edges()
        .iter()
        .all(|&(i, j)| (i == 0 || g.has_edge(i - 1, j)) && (j == 0 || g.has_edge(i, j - 1)))
}

/// Replacing a vertex of a face by a smaller vertex of the same color
/// always gives a face. Checking facets and single steps suffices.
pub fn is_shifted_complex(k: &BalancedComplex) -> bool {
    k.facets().iter().all(|f| {
        f.vertices().iter().all(|&(c, i)| {
            i == 0 || k.contains_face(&Face::new(f.without((c, i)).vertices().iter().copied().chain([(c, i - 1)])).unwrap())
        })
    })
}

/// Whether `g` contains `K_{r,s}` with the `r` vertices in A.
///
/// For a shifted graph this is the single test `rs' ∈ E`; otherwise every
/// `r`-subset of A is tried.
pub fn contains_complete_bipartite(g: &BipartiteGraph, r: usize, s: usize) -> bool {
    if r == 0 || s == 0 {
        return r <= g.a_size() && s <= g.b_size();
    }
    if r > g.a_size() || s > g.b_size() {
        return false;
    }
    if is_shifted_graph(g) {
        return g.has_edge(r - 1, s - 1);
    }
    subsets(g.a_size(), r).any(|rows| {
        (0..g.b_size()).filter(|&j| rows.iter().all(|&i| g.has_edge(i, j))).count() >= s
    })
}

/// Whether `k` contains the join of `m`-point sets on all its colors.
///
/// For a shifted complex this is the single facet made of the `m`-th vertex
/// of every color; otherwise all choices of `m` vertices per color are tried.
pub fn contains_join(k: &BalancedComplex, m: usize) -> bool {
    let sizes = k.color_sizes();
    if m == 0 {
        return !k.is_void();
    }
    if sizes.iter().any(|&n| n < m) {
        return false;
    }
    if is_shifted_complex(k) {
        return k.contains_face(&Face::new((0..sizes.len()).map(|c| (c, m - 1))).unwrap());
    }
    let choices: Vec<Vec<Vec<usize>>> = sizes.iter().map(|&n| subsets(n, m).collect()).collect();
    let mut idx = vec![0usize; sizes.len()];
    loop {
        let sets: Vec<&Vec<usize>> = idx.iter().enumerate().map(|(c, &i)| &choices[c][i]).collect();
        if all_colorful(&sets, k) {
            return true;
        }
        let mut c = 0;
        loop {
            if c == sizes.len() {
                return false;
            }
            idx[c] += 1;
            if idx[c] < choices[c].len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

fn all_colorful(sets: &[&Vec<usize>], k: &BalancedComplex) -> bool {
    let m = sets[0].len();
    let n = sets.len();
    (0..m.pow(n as u32)).all(|mut code| {
        let face = Face::new((0..n).map(|c| {
            let v = sets[c][code % m];
            code /= m;
            (c, v)
        }))
        .unwrap();
        k.contains_face(&face)
    })
}

/// All `r`-subsets of `0..n` in colex order of bitmasks.
fn subsets(n: usize, r: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |s| s.count_ones() as usize == r)
        .map(move |s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, TrialPolicy};
    use proptest::prelude::*;

    fn k33_minus() -> BipartiteGraph {
        let mut g = BipartiteGraph::complete(3, 3);
        g.remove_edge(2, 2);
        g
    }

    fn points(n: usize) -> BalancedComplex {
        BalancedComplex::from_vertex_lists(vec![n], (0..n).map(|i| [(0, i)])).unwrap()
    }

    #[test]
    fn complete_bipartite_is_fixed_for_any_order() {
        let p = TrialPolicy::with_seed(1);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(2);
        for (n, m) in [(1, 1), (2, 3), (4, 4), (5, 2)] {
            let g = BipartiteGraph::complete(n, m);
            let o = VertexOrder::random(&[n, m], &mut rng);
            assert_eq!(shift_graph(&g, &o, &p).unwrap().shifted, g);
        }
    }

    #[test]
    fn k33_minus_an_edge_is_fixed() {
        let g = k33_minus();
        let o = VertexOrder::for_graph(3, 3, 2, 2);
        let r = shift_graph(&g, &o, &TrialPolicy::with_seed(4)).unwrap();
        assert_eq!(r.shifted, g);
        assert_eq!(r.meta.trials, 3);
    }

    #[test]
    fn path_shifts_to_a_star() {
        // 1 - 1' - 2 has two A-vertices sharing the single B-vertex, so the
        // only graph on these sides with two edges is the path itself.
        let g = BipartiteGraph::new(2, 1, [(0, 0), (1, 0)]).unwrap();
        let o = VertexOrder::parse_graph("1 1' 2", 2, 1).unwrap();
        assert_eq!(shift_graph(&g, &o, &TrialPolicy::default()).unwrap().shifted, g);

        // On sides (2,2) a 2-edge matching shifts to the star at 1.
        let m = BipartiteGraph::new(2, 2, [(0, 1), (1, 0)]).unwrap();
        let o = VertexOrder::parse_graph("1 1' 2 2'", 2, 2).unwrap();
        let s = shift_graph(&m, &o, &TrialPolicy::default()).unwrap().shifted;
        assert_eq!(s, BipartiteGraph::new(2, 2, [(0, 0), (0, 1)]).unwrap());
        // With B first, the star at 1' wins instead.
        let o = VertexOrder::parse_graph("1' 1 2' 2", 2, 2).unwrap();
        let s = shift_graph(&m, &o, &TrialPolicy::default()).unwrap().shifted;
        assert_eq!(s, BipartiteGraph::new(2, 2, [(0, 0), (1, 0)]).unwrap());
    }

    #[test]
    fn order_must_match_sides() {
        let g = k33_minus();
        let o = VertexOrder::for_graph(3, 2, 1, 1);
        assert!(matches!(shift_graph(&g, &o, &TrialPolicy::default()), Err(Error::Invalid(_))));
    }

    #[test]
    fn cross_polytope_and_single_facet_are_fixed() {
        let oct = points(2).join(&points(2)).join(&points(2));
        let o = VertexOrder::default_admissible(oct.color_sizes(), &[2, 2, 2]);
        assert_eq!(shift_complex(&oct, &o, &TrialPolicy::default()).unwrap().shifted, oct);
        let facet = BalancedComplex::from_vertex_lists(vec![1, 1, 1], [[(0, 0), (1, 0), (2, 0)]]).unwrap();
        let o = VertexOrder::default_admissible(&[1, 1, 1], &[1, 1, 1]);
        assert_eq!(shift_complex(&facet, &o, &TrialPolicy::default()).unwrap().shifted, facet);
    }

    #[test]
    fn graph_and_complex_shifting_agree() {
        let g = BipartiteGraph::new(3, 3, [(0, 2), (1, 1), (2, 0), (2, 2)]).unwrap();
        let o = VertexOrder::for_graph(3, 3, 1, 1);
        let theta = Theta::sample(PrimeField::default(), 5, &[3, 3], &[]);
        let as_graph = shift_graph_with(&g, &o, &theta);
        let as_complex = shift_complex_with(&BalancedComplex::from_graph(&g), &o, &theta);
        assert_eq!(as_complex.to_graph().unwrap(), as_graph);
    }

    #[test]
    fn shiftedness_checks() {
        assert!(is_shifted_graph(&k33_minus()));
        assert!(!is_shifted_graph(&BipartiteGraph::new(2, 2, [(1, 1)]).unwrap()));
        assert!(contains_complete_bipartite(&k33_minus(), 2, 2));
        assert!(!contains_complete_bipartite(&k33_minus(), 3, 3));
        // Not shifted: brute force path.
        let g = BipartiteGraph::new(3, 3, [(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(!is_shifted_graph(&g));
        assert!(contains_complete_bipartite(&g, 2, 2));
        assert!(!contains_complete_bipartite(&g, 1, 3));
    }

    #[test]
    fn contains_join_brute_force_matches_shifted_shortcut() {
        let k33 = points(3).join(&points(3));
        assert!(contains_join(&k33, 3));
        // Remove 1 1' so the brute-force branch runs.
        let holed = BalancedComplex::new(
            vec![3, 3],
            k33.facets().iter().filter(|f| f.vertices() != [(0, 0), (1, 0)]).cloned(),
        )
        .unwrap();
        assert!(!is_shifted_complex(&holed));
        assert!(!contains_join(&holed, 3));
        assert!(contains_join(&holed, 2));
    }

    fn graph() -> impl Strategy<Value = BipartiteGraph> {
        (1usize..5, 1usize..5).prop_flat_map(|(n, m)| {
            prop::collection::btree_set((0..n, 0..m), 0..=n * m)
                .prop_map(move |e| BipartiteGraph::new(n, m, e).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn shifting_preserves_count_and_is_shifted(g in graph(), seed in any::<u64>()) {
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
            let o = VertexOrder::random(&[g.a_size(), g.b_size()], &mut rng);
            let s = shift_graph(&g, &o, &TrialPolicy::with_seed(seed)).unwrap().shifted;
            prop_assert_eq!(s.n_edges(), g.n_edges());
            prop_assert!(is_shifted_graph(&s));
        }

        #[test]
        fn shifting_is_monotone_under_subgraphs(g in graph(), drop in any::<u64>(), seed in any::<u64>()) {
            let kept = g.edges().iter().enumerate().filter(|(i, _)| drop >> (i % 64) & 1 == 0).map(|(_, &e)| e);
            let h = BipartiteGraph::new(g.a_size(), g.b_size(), kept).unwrap();
            let o = VertexOrder::for_graph(g.a_size(), g.b_size(), 1, 1);
            let theta = Theta::sample(PrimeField::default(), seed, &[g.a_size(), g.b_size()], &[]);
            let hs = shift_graph_with(&h, &o, &theta);
            let gs = shift_graph_with(&g, &o, &theta);
            prop_assert!(hs.is_subgraph_of(&gs));
        }

        #[test]
        fn complex_shifting_preserves_f_vector(
            facets in prop::collection::vec((0usize..3, 0usize..3, 0usize..2), 1..6),
            seed in any::<u64>(),
        ) {
            let k = BalancedComplex::from_vertex_lists(
                vec![3, 3, 2],
                facets.iter().map(|&(a, b, c)| [(0, a), (1, b), (2, c)]),
            ).unwrap();
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
            let o = VertexOrder::random(k.color_sizes(), &mut rng);
            let s = shift_complex(&k, &o, &TrialPolicy::with_seed(seed)).unwrap().shifted;
            prop_assert_eq!(s.f_vector(), k.f_vector());
            prop_assert!(is_shifted_complex(&s));
        }
    }
}
