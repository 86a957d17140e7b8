//! Generators for the example families: complete graphs and cycles, random
//! trees and sparse graphs, cube graphs and stacked cubes, quadrangulations,
//! cross-polytopes, and the complexes `Γ(d)` and `[l+1]^{*(d+1)}`.
//!
//! Every randomized generator is a pure function of its seed.

pub mod cross;
pub mod cubical;
pub mod planar;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{BalancedComplex, BipartiteGraph, CVertex, Face};
use crate::Error;

pub use cross::{cross_polytope_boundary, default_gluing_pattern, glued_cross_polytopes, Gluing};
pub use cubical::{cube, cube_graph, laman_subcube_edges, stacked_cubical_graph, Augment, CubeFacet, CubicalGraph};
pub use planar::{random_outerplanar, random_quadrangulation, Quadrangulation};

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete_bipartite(n: usize, m: usize) -> Result<BipartiteGraph, Error> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid(format!("K_{{{n},{m}}} needs both sides nonempty")));
    }
    Ok(BipartiteGraph::complete(n, m))
}

/// The cycle of length `2n`: `i` is joined to `i'` and to `(i-1)'`.
pub fn cycle(n: usize) -> Result<BipartiteGraph, Error> {
    if n < 2 {
        return Err(Error::Invalid(format!("a bipartite cycle needs n >= 2, got {n}")));
    }
    let edges = (0..n).flat_map(|i| [(i, i), ((i + 1) % n, i)]);
    Ok(BipartiteGraph::new(n, n, edges)?)
}

/// Uniform spanning tree of `K_{n,m}` by the Aldous-Broder walk.
pub fn random_tree(n: usize, m: usize, seed: u64) -> Result<BipartiteGraph, Error> {
    let mut g = complete_bipartite(n, m)?;
    for e in g.edges().clone() {
        g.remove_edge(e.0, e.1);
    }
    let mut rng = rng(seed);
    // Vertices 0..n are A, n..n+m are B.
    let total = n + m;
    let mut seen = vec![false; total];
    let mut at = rng.random_range(0..total);
    seen[at] = true;
    let mut left = total - 1;
    while left > 0 {
        let next = if at < n { n + rng.random_range(0..m) } else { rng.random_range(0..n) };
        if !seen[next] {
            seen[next] = true;
            left -= 1;
            let (a, b) = if at < n { (at, next - n) } else { (next, at - n) };
            g.add_edge(a, b);
        }
        at = next;
    }
    debug_assert!(g.is_forest() && g.n_edges() == total - 1);
    Ok(g)
}

/// Uniformly random graph with exactly `edges` edges.
pub fn random_bipartite(n: usize, m: usize, edges: usize, seed: u64) -> Result<BipartiteGraph, Error> {
    if edges > n * m {
        return Err(Error::Invalid(format!("{edges} edges do not fit in K_{{{n},{m}}}")));
    }
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    all.shuffle(&mut rng(seed));
    all.truncate(edges);
    Ok(BipartiteGraph::new(n, m, all)?)
}

/// Random graph built by adding vertices one at a time, each joined to at
/// most `max_degree` earlier vertices of the other side. Every subgraph then
/// has a vertex of degree at most `max_degree`.
pub fn random_degenerate(n: usize, m: usize, max_degree: usize, seed: u64) -> Result<BipartiteGraph, Error> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid("both sides must be nonempty".into()));
    }
    let mut rng = rng(seed);
    let mut arrivals: Vec<bool> = std::iter::repeat_n(true, n).chain(std::iter::repeat_n(false, m)).collect();
    arrivals.shuffle(&mut rng);
    let mut g = BipartiteGraph::empty(n, m);
    let (mut na, mut nb) = (0, 0);
    for is_a in arrivals {
        let (earlier, me) = if is_a { (nb, na) } else { (na, nb) };
        let mut pool: Vec<usize> = (0..earlier).collect();
        pool.shuffle(&mut rng);
        let deg = rng.random_range(0..=max_degree.min(earlier));
        for &o in &pool[..deg] {
            if is_a {
                g.add_edge(me, o);
            } else {
                g.add_edge(o, me);
            }
        }
        if is_a {
            na += 1;
        } else {
            nb += 1;
        }
    }
    Ok(g)
}

fn colorful_facets(sizes: &[usize]) -> impl Iterator<Item = Vec<CVertex>> + '_ {
    let total: usize = sizes.iter().product();
    (0..total).map(move |mut code| {
        sizes
            .iter()
            .enumerate()
            .map(|(c, &s)| {
                let i = code % s;
                code /= s;
                (c, i)
            })
            .collect()
    })
}

/// Colorful facets containing one of the two least vertices of some color.
pub fn gamma_complex(d: usize, sizes: &[usize]) -> Result<BalancedComplex, Error> {
    if sizes.len() != d + 1 || sizes.iter().any(|&s| s < 2) {
        return Err(Error::Invalid(format!(
            "gamma complex of dimension {d} needs {} colors of size at least 2, got {sizes:?}",
            d + 1
        )));
    }
    let facets = colorful_facets(sizes).filter(|f| f.iter().any(|&(_, i)| i < 2));
    Ok(BalancedComplex::from_vertex_lists(sizes.to_vec(), facets)?)
}

/// The join of `d + 1` sets of `l + 1` points.
pub fn van_kampen_complex(l: usize, d: usize) -> Result<BalancedComplex, Error> {
    if l == 0 {
        return Err(Error::Invalid("l must be at least 1".into()));
    }
    let sizes = vec![l + 1; d + 1];
    Ok(BalancedComplex::from_vertex_lists(sizes.clone(), colorful_facets(&sizes))?)
}

/// Every colorful facet over the given color classes, as a face list.
pub fn all_colorful_facets(sizes: &[usize]) -> Vec<Face> {
    colorful_facets(sizes).map(|f| Face::new(f).expect("one vertex per color")).collect()
}

/// A named family with integer parameters, as accepted by `generate`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, usize>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generated {
    Graph(BipartiteGraph),
    Complex(BalancedComplex),
}

pub const FAMILIES: &[(&str, &str)] = &[
    ("complete-bipartite", "n m"),
    ("cycle", "n (length 2n)"),
    ("random-tree", "n m"),
    ("random-bipartite", "n m edges"),
    ("degenerate", "n m max_degree"),
    ("cube", "d"),
    ("stacked-cubical", "d t"),
    ("stacked-cubical-rigid", "d t (two-vertex augmentation, (2,d-1)-rigid)"),
    ("stacked-cubical-laman", "d t (facet augmentation, (1,d)-Laman)"),
    ("quadrangulation", "splits"),
    ("outerplanar", "ears pendants"),
    ("cross-polytope", "d"),
    ("glued-cross-polytopes", "d"),
    ("gamma", "d size"),
    ("van-kampen", "l d"),
];

impl FamilySpec {
    pub fn new(family: &str, params: &[(&str, usize)], seed: u64) -> Self {
        Self {
            family: family.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            seed,
        }
    }

    fn get(&self, key: &str) -> Result<usize, Error> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("family {} needs parameter {key}", self.family)))
    }

    fn get_or(&self, key: &str, default: usize) -> usize {
        self.params.get(key).copied().unwrap_or(default)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Generated, Error> {
    use Generated::{Complex, Graph};
    let s = spec.seed;
    Ok(match spec.family.as_str() {
        "complete-bipartite" => Graph(complete_bipartite(spec.get("n")?, spec.get("m")?)?),
        "cycle" => Graph(cycle(spec.get("n")?)?),
        "random-tree" => Graph(random_tree(spec.get("n")?, spec.get("m")?, s)?),
        "random-bipartite" => Graph(random_bipartite(spec.get("n")?, spec.get("m")?, spec.get("edges")?, s)?),
        "degenerate" => Graph(random_degenerate(spec.get("n")?, spec.get("m")?, spec.get_or("max_degree", 7), s)?),
        "cube" => Graph(cube_graph(spec.get("d")?)?),
        "stacked-cubical" => Graph(stacked_cubical_graph(spec.get("d")?, spec.get("t")?, s)?.graph),
        "stacked-cubical-rigid" => {
            let c = stacked_cubical_graph(spec.get("d")?, spec.get("t")?, s)?;
            Graph(c.augment_default(Augment::TwoVertex)?)
        }
        "stacked-cubical-laman" => {
            let c = stacked_cubical_graph(spec.get("d")?, spec.get("t")?, s)?;
            Graph(c.augment_default(Augment::LamanOneD)?)
        }
        "quadrangulation" => Graph(random_quadrangulation(spec.get("splits")?, s)?.graph()),
        "outerplanar" => Graph(random_outerplanar(spec.get("ears")?, spec.get_or("pendants", 0), s)?),
        "cross-polytope" => Complex(cross_polytope_boundary(spec.get("d")?)?),
        "glued-cross-polytopes" => {
            let d = spec.get("d")?;
            Complex(glued_cross_polytopes(d, &default_gluing_pattern(d)?)?)
        }
        "gamma" => {
            let d = spec.get("d")?;
            Complex(gamma_complex(d, &vec![spec.get_or("size", 3); d + 1])?)
        }
        "van-kampen" => Complex(van_kampen_complex(spec.get("l")?, spec.get("d")?)?),
        other => {
            let names: Vec<&str> = FAMILIES.iter().map(|f| f.0).collect();
            return Err(Error::Invalid(format!("unknown family {other}; known: {}", names.join(", "))));
        }
    })
}
