//! The acceptance criteria as runnable checks.
//!
//! Each check draws its corpus from the policy seed, so a run is reproducible
//! byte for byte. Any inter-trial disagreement counts as a failure.

use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinat::{BalancedComplex, BipartiteGraph, Face, Side, Vertex, VertexOrder};
use crate::exactla::{PrimeField, TrialPolicy};
use crate::families::{self, Augment};
use crate::rigidity::{analyze, laman_check, rigidity_rank_with, rigidity_theta, rows_independent_m, max_rank};
use crate::rigidity::verdicts_from_shifted;
use crate::shifting::{contains_join, is_shifted_complex, is_shifted_graph, shift_complex, shift_graph, shift_graph_with};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {}: {}", self.id, self.title, self.detail)
    }
}

/// A failed check with its explanation.
#[derive(Debug)]
pub struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Check = Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($fmt)+)));
        }
    };
}

pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    check: fn(&TrialPolicy) -> Check,
}

impl Criterion {
    pub fn run(&self, policy: &TrialPolicy) -> Outcome {
        let (passed, detail) = match (self.check)(policy) {
            Ok(d) => (true, d),
            Err(Failure(d)) => (false, d),
        };
        Outcome { id: self.id, title: self.title, passed, detail }
    }
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "rank of complete bipartite graphs", check: rank_law },
    Criterion { id: 2, title: "shifting keeps edge count and is shifted", check: shifting_conservation },
    Criterion { id: 3, title: "shifted membership equals rank verdicts", check: shifting_rigidity_equivalence },
    Criterion { id: 4, title: "quadrangulations are (2,2)-rigid and stress free", check: planar },
    Criterion { id: 5, title: "trees (1,1) and outerplanar (2,1) stress free", check: trees_outerplanar },
    Criterion { id: 6, title: "coning commutes with shifting", check: cone_lemma },
    Criterion { id: 7, title: "deletion, contraction and gluing", check: deletion_contraction_gluing },
    Criterion { id: 8, title: "doubled K33 minus an edge: Laman with a stress", check: doubled_k33 },
    Criterion { id: 9, title: "3-cube plus long diagonals is (1,4)-Laman", check: k44_laman },
    Criterion { id: 10, title: "augmented stacked cubes", check: stacked_cubes },
    Criterion { id: 11, title: "glued cross-polytopes are not (1,2)-rigid", check: glued_cross },
    Criterion { id: 12, title: "octahedron facet-ridge graph is (1,2)-rigid", check: octahedron_dual },
    Criterion { id: 13, title: "M(K,2) rows independent iff no [3]*[3]*[3]", check: m_matrix_oracle },
    Criterion { id: 14, title: "shifting commutes with joins", check: join_lemma },
    Criterion { id: 15, title: "gamma complex is shifted and maximal", check: gamma_maximal },
    Criterion { id: 16, title: "sparse degenerate graphs are (7,7)-stress free", check: degenerate_77 },
];

pub fn run_all(policy: &TrialPolicy) -> Vec<Outcome> {
    CRITERIA.iter().map(|c| c.run(policy)).collect()
}

pub fn run_one(id: usize, policy: &TrialPolicy) -> Option<Outcome> {
    CRITERIA.iter().find(|c| c.id == id).map(|c| c.run(policy))
}

/// Field axioms on sampled residues. Reported as criterion 0 so that a
/// corrupted modulus stops the suite before any rank is trusted.
pub fn field_self_check(field: &PrimeField, seed: u64) -> Outcome {
    let passed = field.self_check(&mut families::rng(seed), 256);
    let p = field.modulus();
    let detail = if passed {
        format!("p = {p}: inverses, distributivity, Fermat and Euler hold on 256 samples")
    } else {
        format!("p = {p}: field axioms fail, modulus is not prime")
    };
    Outcome { id: 0, title: "prime field arithmetic", passed, detail }
}

fn corpus_rng(policy: &TrialPolicy, id: usize) -> ChaCha8Rng {
    families::rng(policy.seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Sides in `lo..=hi`, each edge present with probability `p`.
fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize, p: f64) -> BipartiteGraph {
    let (n, m) = (rng.random_range(lo..=hi), rng.random_range(lo..=hi));
    let edges: Vec<_> =
        (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|_| rng.random_bool(p)).collect();
    BipartiteGraph::new(n, m, edges).expect("edges in range")
}

fn graph_corpus(policy: &TrialPolicy, id: usize) -> Vec<BipartiteGraph> {
    let mut rng = corpus_rng(policy, id);
    (0..200)
        .map(|_| {
            let p = rng.random_range(0.0..=1.0);
            random_graph(&mut rng, 1, 6, p)
        })
        .collect()
}

fn rank_law(policy: &TrialPolicy) -> Check {
    let mut cases = 0;
    for k in 1..=3 {
        for l in 1..=3 {
            for n in k..=6 {
                for m in l..=6 {
                    let r = analyze(&BipartiteGraph::complete(n, m), k, l, policy)?;
                    let want = l * n + k * m - k * l;
                    ensure!(r.rank == want, "K_{{{n},{m}}} ({k},{l}): rank {} != {want}", r.rank);
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (k,l,n,m) cases exact"))
}

fn shifting_conservation(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 2);
    let corpus = graph_corpus(policy, 23);
    for g in &corpus {
        let order = VertexOrder::random(&[g.a_size(), g.b_size()], &mut rng);
        let s = shift_graph(g, &order, policy)?.shifted;
        ensure!(s.n_edges() == g.n_edges(), "edge count {} -> {} for {g}", g.n_edges(), s.n_edges());
        ensure!(is_shifted_graph(&s), "result is not shifted for {g}");
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn shifting_rigidity_equivalence(policy: &TrialPolicy) -> Check {
    let corpus = graph_corpus(policy, 23);
    let mut cases = 0;
    for g in &corpus {
        for k in 1..=3.min(g.a_size()) {
            for l in 1..=3.min(g.b_size()) {
                let order = VertexOrder::for_graph(g.a_size(), g.b_size(), k, l);
                for t in 0..policy.trials {
                    let theta = rigidity_theta(g, k, l, policy.field, policy.trial_seed(t));
                    let (rigid, free) = verdicts_from_shifted(&shift_graph_with(g, &order, &theta), k, l);
                    let rank = rigidity_rank_with(g, k, l, &theta);
                    ensure!(
                        rigid == (rank as i64 == max_rank(g, k, l)) && free == (rank == g.n_edges()),
                        "({k},{l}) verdicts differ on {g}"
                    );
                }
                let report = analyze(g, k, l, policy)?;
                let shifted = shift_graph(g, &order, policy)?.shifted;
                ensure!(
                    verdicts_from_shifted(&shifted, k, l) == (report.is_rigid, report.is_stress_free),
                    "({k},{l}) trial-agreed verdicts differ on {g}"
                );
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (graph,k,l) cases, shared parameters per trial"))
}

fn delete_random_edges(g: &BipartiteGraph, count: usize, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut h = g.clone();
    let mut edges: Vec<_> = g.edges().iter().copied().collect();
    edges.shuffle(rng);
    for &(i, j) in edges.iter().take(count) {
        h.remove_edge(i, j);
    }
    h
}

fn planar(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 4);
    let mut subgraphs = 0;
    for _ in 0..50 {
        let splits = rng.random_range(0..=16);
        let g = families::random_quadrangulation(splits, rng.random())?.graph();
        let r = analyze(&g, 2, 2, policy)?;
        ensure!(r.is_rigid && r.is_stress_free, "quadrangulation not rigid and stress free: {g}");
        for count in 1..=3 {
            let h = delete_random_edges(&g, count, &mut rng);
            ensure!(analyze(&h, 2, 2, policy)?.is_stress_free, "subgraph has a stress: {h}");
            subgraphs += 1;
        }
    }
    Ok(format!("50 quadrangulations with N <= 20, {subgraphs} edge-deleted subgraphs"))
}

fn trees_outerplanar(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 5);
    for _ in 0..100 {
        let (n, m) = (rng.random_range(1..=8), rng.random_range(1..=8));
        let t = families::random_tree(n, m, rng.random())?;
        ensure!(analyze(&t, 1, 1, policy)?.is_stress_free, "tree has a (1,1)-stress: {t}");
    }
    for _ in 0..100 {
        let (ears, pendants) = (rng.random_range(0..=6), rng.random_range(0..=4));
        let g = families::random_outerplanar(ears, pendants, rng.random())?;
        for (k, l) in [(2, 1), (1, 2)] {
            ensure!(analyze(&g, k, l, policy)?.is_stress_free, "outerplanar graph has a ({k},{l})-stress: {g}");
        }
    }
    Ok("100 trees, 100 outerplanar graphs in both orientations".into())
}

fn cone_lemma(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 6);
    let mut equivalences = 0;
    for _ in 0..100 {
        let p = rng.random_range(0.0..=1.0);
        let g = random_graph(&mut rng, 1, 5, p);
        let order = VertexOrder::random(&[g.a_size(), g.b_size()], &mut rng);
        let s = shift_graph(&g, &order, policy)?.shifted;
        for side in [Side::A, Side::B] {
            let cone = |h: &BipartiteGraph| if side == Side::A { h.cone_left().0 } else { h.cone_right().0 };
            let lhs = shift_graph(&cone(&g), &order.cone_graph(side), policy)?.shifted;
            ensure!(lhs == cone(&s), "cone over {side:?} and shifting do not commute on {g}");
        }
        for k in 1..=2.min(g.a_size()) {
            for l in 1..=2.min(g.b_size()) {
                let base = analyze(&g, k, l, policy)?;
                let left = analyze(&g.cone_left().0, k + 1, l, policy)?;
                let right = analyze(&g.cone_right().0, k, l + 1, policy)?;
                for (name, c) in [("left", &left), ("right", &right)] {
                    ensure!(base.is_rigid == c.is_rigid, "({k},{l}) rigidity differs from {name} cone on {g}");
                    ensure!(
                        base.is_stress_free == c.is_stress_free,
                        "({k},{l}) stress freeness differs from {name} cone on {g}"
                    );
                    equivalences += 2;
                }
            }
        }
    }
    Ok(format!("100 graphs, both cones commute, {equivalences} predicate equivalences"))
}

fn add_vertex_with_neighbors(g: &BipartiteGraph, side: Side, nbrs: &[usize]) -> BipartiteGraph {
    let mut h = g.clone();
    let v = h.add_vertex(side);
    for &u in nbrs {
        match side {
            Side::A => h.add_edge(v.index, u),
            Side::B => h.add_edge(u, v.index),
        };
    }
    h
}

fn slot_bound(side: Side, k: usize, l: usize) -> usize {
    match side {
        Side::A => l,
        Side::B => k,
    }
}

fn random_side(rng: &mut ChaCha8Rng) -> Side {
    if rng.random_bool(0.5) {
        Side::A
    } else {
        Side::B
    }
}

const INSTANCES: usize = 200;
const ATTEMPTS: usize = 50_000;

fn deletion_instances(policy: &TrialPolicy, rng: &mut ChaCha8Rng) -> Result<usize, Failure> {
    let mut hits = 0;
    for attempt in 0..ATTEMPTS {
        if hits == INSTANCES {
            break;
        }
        let (k, l) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let side = random_side(rng);
        let bound = slot_bound(side, k, l);
        let stress_part = attempt % 2 == 0;
        let g0 = random_graph(rng, if stress_part { 1 } else { 3 }, 5, if stress_part { 0.3 } else { 0.85 });
        let other = g0.side_size(side.other());
        let mut pool: Vec<usize> = (0..other).collect();
        pool.shuffle(rng);
        if stress_part {
            let d = rng.random_range(0..=bound.min(other));
            if !analyze(&g0, k, l, policy)?.is_stress_free {
                continue;
            }
            let g = add_vertex_with_neighbors(&g0, side, &pool[..d]);
            ensure!(analyze(&g, k, l, policy)?.is_stress_free, "deletion part 1 fails: {g} ({k},{l})");
        } else {
            if g0.a_size() < k || g0.b_size() < l || other < bound {
                continue;
            }
            let d = rng.random_range(bound..=other);
            if !analyze(&g0, k, l, policy)?.is_rigid {
                continue;
            }
            let g = add_vertex_with_neighbors(&g0, side, &pool[..d]);
            ensure!(analyze(&g, k, l, policy)?.is_rigid, "deletion part 2 fails: {g} ({k},{l})");
        }
        hits += 1;
    }
    ensure!(hits == INSTANCES, "only {hits} deletion instances met the hypotheses");
    Ok(hits)
}

fn contraction_instances(policy: &TrialPolicy, rng: &mut ChaCha8Rng) -> Result<usize, Failure> {
    let mut hits = 0;
    for attempt in 0..ATTEMPTS {
        if hits == INSTANCES {
            break;
        }
        let (k, l) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let stress_part = attempt % 2 == 0;
        let g = random_graph(rng, 2, 6, if stress_part { 0.35 } else { 0.8 });
        let side = random_side(rng);
        let n = g.side_size(side);
        let (v, w) = (rng.random_range(0..n), rng.random_range(0..n));
        if v == w {
            continue;
        }
        let (v, w) = (Vertex { side, index: v }, Vertex { side, index: w });
        let (gc, common, _) = g.contract(v, w).map_err(Error::from)?;
        let bound = slot_bound(side, k, l);
        if stress_part {
            if common > bound || !analyze(&gc, k, l, policy)?.is_stress_free {
                continue;
            }
            ensure!(analyze(&g, k, l, policy)?.is_stress_free, "contraction part 1 fails: {g} ({k},{l}) {v}->{w}");
        } else {
            if common < bound || gc.a_size() < k || gc.b_size() < l || !analyze(&gc, k, l, policy)?.is_rigid {
                continue;
            }
            ensure!(analyze(&g, k, l, policy)?.is_rigid, "contraction part 2 fails: {g} ({k},{l}) {v}->{w}");
        }
        hits += 1;
    }
    ensure!(hits == INSTANCES, "only {hits} contraction instances met the hypotheses");
    Ok(hits)
}

/// `g1 ∪ g2` with the first `p` A-vertices and `q` B-vertices shared, and
/// the common part `g1 ∩ g2` on those vertices.
fn glue_prefix(g1: &BipartiteGraph, g2: &BipartiteGraph, p: usize, q: usize) -> (BipartiteGraph, BipartiteGraph) {
    let ident: Vec<(Vertex, Vertex)> = (0..p)
        .map(|i| (Vertex::a(i), Vertex::a(i)))
        .chain((0..q).map(|j| (Vertex::b(j), Vertex::b(j))))
        .collect();
    let union = g1.glue(g2, &ident).expect("prefix identification is valid").0;
    let common = g1.edges().iter().copied().filter(|&(i, j)| i < p && j < q && g2.has_edge(i, j));
    (union, BipartiteGraph::new(p, q, common).expect("edges in range"))
}

/// `core` plus up to three new vertices per side, each joined to at most
/// `bound` older vertices, so that `core` stays the common part.
fn grow(core: &BipartiteGraph, k: usize, l: usize, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut g = core.clone();
    for _ in 0..rng.random_range(0..=5) {
        let side = random_side(rng);
        let other = g.side_size(side.other());
        let mut pool: Vec<usize> = (0..other).collect();
        pool.shuffle(rng);
        let d = rng.random_range(0..=slot_bound(side, k, l).min(other));
        g = add_vertex_with_neighbors(&g, side, &pool[..d]);
    }
    g
}

fn gluing_instances(policy: &TrialPolicy, rng: &mut ChaCha8Rng) -> Result<usize, Failure> {
    let mut hits = 0;
    for attempt in 0..ATTEMPTS {
        if hits == INSTANCES {
            break;
        }
        let (k, l) = (rng.random_range(1..=3), rng.random_range(1..=3));
        match attempt % 3 {
            0 => {
                let g1 = random_graph(rng, 3, 6, 0.85);
                let g2 = random_graph(rng, 3, 6, 0.85);
                let (pmax, qmax) = (g1.a_size().min(g2.a_size()), g1.b_size().min(g2.b_size()));
                if pmax < k || qmax < l || g1.a_size() < k || g1.b_size() < l {
                    continue;
                }
                let (p, q) = (rng.random_range(k..=pmax), rng.random_range(l..=qmax));
                if !analyze(&g1, k, l, policy)?.is_rigid || !analyze(&g2, k, l, policy)?.is_rigid {
                    continue;
                }
                let (g, _) = glue_prefix(&g1, &g2, p, q);
                ensure!(analyze(&g, k, l, policy)?.is_rigid, "gluing part 1 fails: {g1} + {g2} on ({p},{q})");
            }
            1 => {
                let (p, q) = (rng.random_range(k..=k + 2), rng.random_range(l..=l + 2));
                let target = l * p + k * q - k * l;
                let mut all: Vec<(usize, usize)> = (0..p).flat_map(|i| (0..q).map(move |j| (i, j))).collect();
                all.shuffle(rng);
                all.truncate(target);
                let core = BipartiteGraph::new(p, q, all).expect("edges in range");
                let (g1, g2) = (grow(&core, k, l, rng), grow(&core, k, l, rng));
                let (g, common) = glue_prefix(&g1, &g2, p, q);
                debug_assert_eq!(common, core);
                if !analyze(&common, k, l, policy)?.is_rigid
                    || !analyze(&g1, k, l, policy)?.is_stress_free
                    || !analyze(&g2, k, l, policy)?.is_stress_free
                {
                    continue;
                }
                ensure!(analyze(&g, k, l, policy)?.is_stress_free, "gluing part 2 fails: {g1} + {g2} on ({p},{q})");
            }
            _ => {
                let g1 = random_graph(rng, 1, 5, 0.35);
                let g2 = random_graph(rng, 1, 5, 0.35);
                let (pmax, qmax) = (g1.a_size().min(g2.a_size()), g1.b_size().min(g2.b_size()));
                let (p, q) = if rng.random_bool(0.5) {
                    (rng.random_range(0..=k.min(pmax)), 0)
                } else {
                    (0, rng.random_range(0..=l.min(qmax)))
                };
                if !analyze(&g1, k, l, policy)?.is_stress_free || !analyze(&g2, k, l, policy)?.is_stress_free {
                    continue;
                }
                let (g, _) = glue_prefix(&g1, &g2, p, q);
                ensure!(analyze(&g, k, l, policy)?.is_stress_free, "gluing part 3 fails: {g1} + {g2} on ({p},{q})");
            }
        }
        hits += 1;
    }
    ensure!(hits == INSTANCES, "only {hits} gluing instances met the hypotheses");
    Ok(hits)
}

fn deletion_contraction_gluing(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 7);
    let d = deletion_instances(policy, &mut rng)?;
    let c = contraction_instances(policy, &mut rng)?;
    let g = gluing_instances(policy, &mut rng)?;
    Ok(format!("{d} deletion, {c} contraction, {g} gluing instances, no counterexample"))
}

/// Two copies of `K_{3,3}` minus an edge, glued at the endpoints of the
/// missing edge.
pub fn doubled_k33_minus() -> BipartiteGraph {
    let mut k = BipartiteGraph::complete(3, 3);
    k.remove_edge(2, 2);
    k.glue(&k, &[(Vertex::a(2), Vertex::a(2)), (Vertex::b(2), Vertex::b(2))]).expect("valid identification").0
}

fn doubled_k33(policy: &TrialPolicy) -> Check {
    let g = doubled_k33_minus();
    let lam = laman_check(&g, 2, 2)?;
    let r = analyze(&g, 2, 2, policy)?;
    ensure!(lam.holds, "not (2,2)-Laman: {lam:?}");
    ensure!(r.stress_dim >= 1, "stress free, rank {}", r.rank);
    Ok(format!(
        "sides {}+{}, {} edges, Laman, stress dimension {}",
        g.a_size(),
        g.b_size(),
        g.n_edges(),
        r.stress_dim
    ))
}

fn k44_laman(policy: &TrialPolicy) -> Check {
    let mut g = families::cube_graph(3)?;
    for (x, y) in families::laman_subcube_edges(3)? {
        g.add_edge(families::cubical::word_vertex(x).index, families::cubical::word_vertex(y).index);
    }
    ensure!(g == BipartiteGraph::complete(4, 4), "result is not K_{{4,4}}");
    let lam = laman_check(&g, 1, 4)?;
    let r = analyze(&g, 1, 4, policy)?;
    ensure!(lam.holds && r.is_rigid && r.is_stress_free, "laman {} rigid {} free {}", lam.holds, r.is_rigid, r.is_stress_free);
    Ok(format!("K_{{4,4}} rank {} = 4*4 + 4 - 4", r.rank))
}

fn stacked_cubes(policy: &TrialPolicy) -> Check {
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for (d, tmax) in [(3usize, 5usize), (4, 3)] {
        for t in 1..=tmax {
            let c = families::stacked_cubical_graph(d, t, policy.seed.wrapping_add(t as u64))?;
            let g = c.augment_default(Augment::TwoVertex)?;
            let r = analyze(&g, 2, d - 1, policy)?;
            ensure!(r.is_rigid && r.is_stress_free, "d={d} t={t}: rigid {} free {}", r.is_rigid, r.is_stress_free);
            let literal = (d + 1) * t * (1 << (d - 1)) - 2 * (d - 1);
            let count = (d - 1) * g.a_size() + 2 * g.b_size() - 2 * (d - 1);
            ensure!(g.n_edges() == count, "d={d} t={t}: {} edges but (d-1)|A|+2|B|-2(d-1) = {count}", g.n_edges());
            if g.n_edges() != literal {
                mismatches.push(format!("d={d} t={t}: {} edges vs (d+1)t2^(d-1)-2(d-1) = {literal}", g.n_edges()));
            }
            cases += 1;
        }
    }
    ensure!(
        mismatches.is_empty(),
        "all {cases} graphs are rigid and stress free with |E| = (d-1)|A|+2|B|-2(d-1), but the quoted count (d+1)t2^(d-1)-2(d-1) fails: {}",
        mismatches.join("; ")
    );
    Ok(format!("{cases} stacked graphs rigid, stress free, counts match"))
}

fn glued_cross(policy: &TrialPolicy) -> Check {
    let k = families::glued_cross_polytopes(3, &families::default_gluing_pattern(3)?)?;
    let fr = k.facet_ridge_graph().map_err(Error::from)?;
    let r = analyze(&fr.graph, 1, 2, policy)?;
    ensure!(!r.is_rigid, "facet-ridge graph is (1,2)-rigid, rank {}", r.rank);
    Ok(format!(
        "{} facets, rank {} < {} = 2|A| + |B| - 2",
        k.facets().len(),
        r.rank,
        r.max_rank
    ))
}

fn octahedron_dual(policy: &TrialPolicy) -> Check {
    let fr = families::cross_polytope_boundary(3)?.facet_ridge_graph().map_err(Error::from)?;
    let r = analyze(&fr.graph, 1, 2, policy)?;
    ensure!(r.is_rigid, "rank {} < {}", r.rank, r.max_rank);
    Ok(format!("cube graph rank {} = 2*4 + 4 - 2", r.rank))
}

/// Random pure complex: sizes in `min_size..=max_size`, each colorful facet
/// kept with a probability drawn from `density`.
fn random_complex(
    rng: &mut ChaCha8Rng,
    colors: usize,
    (min_size, max_size): (usize, usize),
    density: std::ops::RangeInclusive<f64>,
) -> BalancedComplex {
    let sizes: Vec<usize> = (0..colors).map(|_| rng.random_range(min_size..=max_size)).collect();
    let all = families::all_colorful_facets(&sizes);
    let p = rng.random_range(density);
    let mut chosen: Vec<Face> = all.iter().filter(|_| rng.random_bool(p)).cloned().collect();
    if chosen.is_empty() {
        chosen.push(all.choose(rng).expect("at least one facet").clone());
    }
    BalancedComplex::new(sizes, chosen).expect("faces in range")
}

fn m_matrix_oracle(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 13);
    let mut independent = 0;
    for i in 0..30 {
        // Every other complex is dense enough to contain the join.
        let k = if i % 2 == 0 {
            random_complex(&mut rng, 3, (3, 4), 0.95..=1.0)
        } else {
            random_complex(&mut rng, 3, (1, 4), 0.1..=1.0)
        };
        let m = rows_independent_m(&k, 2, policy)?;
        let order = VertexOrder::default_admissible(k.color_sizes(), &[2, 2, 2]);
        let shifted = shift_complex(&k, &order, policy)?.shifted;
        let avoids = !contains_join(&shifted, 3);
        ensure!(m.rows_independent == avoids, "M rows independent {} but shifted avoids join {avoids}: {k}", m.rows_independent);
        independent += m.rows_independent as usize;
    }
    Ok(format!("30 complexes agree, {independent} with independent rows"))
}

fn join_lemma(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 14);
    for _ in 0..20 {
        let (ck, cl) = (rng.random_range(1..=2), rng.random_range(1..=2));
        let k = random_complex(&mut rng, ck, (1, 3), 0.1..=1.0);
        let l = random_complex(&mut rng, cl, (1, 3), 0.1..=1.0);
        let (ok, ol) = (VertexOrder::random(k.color_sizes(), &mut rng), VertexOrder::random(l.color_sizes(), &mut rng));
        let lhs = shift_complex(&k.join(&l), &ok.concat(&ol), policy)?.shifted;
        let rhs = shift_complex(&k, &ok, policy)?.shifted.join(&shift_complex(&l, &ol, policy)?.shifted);
        ensure!(lhs == rhs, "shift(K*L) != shift(K)*shift(L) for K = {k}, L = {l}");
    }
    Ok("20 random pairs with concatenated orders".into())
}

fn gamma_maximal(_policy: &TrialPolicy) -> Check {
    let mut cases = 0;
    for d in 0..=3usize {
        for code in 0..1usize << (d + 1) {
            let sizes: Vec<usize> = (0..=d).map(|c| 3 + (code >> c & 1)).collect();
            let g = families::gamma_complex(d, &sizes)?;
            ensure!(is_shifted_complex(&g), "gamma({d}, {sizes:?}) is not shifted");
            ensure!(!contains_join(&g, 3), "gamma({d}, {sizes:?}) contains the join");
            for f in families::all_colorful_facets(&sizes) {
                if g.contains_face(&f) {
                    continue;
                }
                let bigger = BalancedComplex::new(sizes.clone(), g.facets().iter().cloned().chain([f.clone()]))
                    .map_err(Error::from)?;
                ensure!(contains_join(&bigger, 3), "adding {f} to gamma({d}, {sizes:?}) avoids the join");
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} size patterns with d <= 3"))
}

fn degenerate_77(policy: &TrialPolicy) -> Check {
    let mut rng = corpus_rng(policy, 16);
    let mut done = 0;
    let mut densest = 0;
    while done < 50 {
        let total = rng.random_range(2..=20);
        let n = rng.random_range(1..total);
        let g = families::random_degenerate(n, total - n, 7, rng.random())?;
        if g.n_edges() >= 4 * total {
            continue;
        }
        ensure!(analyze(&g, 7, 7, policy)?.is_stress_free, "(7,7)-stress on {g}");
        densest = densest.max(g.n_edges());
        done += 1;
    }
    Ok(format!("50 graphs with N <= 20 and |E| < 4N, up to {densest} edges"))
}
