//! Cube graphs and stacked cubical graphs, tracked purely combinatorially.
//!
//! A cube vertex is a `d`-bit word. Its side is the parity of the word, and
//! inside a single cube its index on that side is `word >> 1`, which ranks
//! the words of one parity in increasing order. Stacked graphs keep, per
//! cube, the map from words to graph vertices plus a registry of boundary
//! facets `(cube, bit, value)`.

use std::collections::BTreeSet;

use rand::Rng;
use serde::Serialize;

use crate::combinat::{BipartiteGraph, Side, Vertex};
use crate::Error;

fn parity_side(word: usize) -> Side {
    if word.count_ones() % 2 == 0 {
        Side::A
    } else {
        Side::B
    }
}

/// Vertex of a standalone cube graph carrying the given word.
pub fn word_vertex(word: usize) -> Vertex {
    Vertex { side: parity_side(word), index: word >> 1 }
}

/// The facet of `cube` where coordinate `bit` equals `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CubeFacet {
    pub cube: usize,
    pub bit: usize,
    pub value: bool,
}

impl CubeFacet {
    pub fn opposite(self) -> Self {
        Self { value: !self.value, ..self }
    }

    fn contains_word(self, word: usize) -> bool {
        (word >> self.bit & 1 == 1) == self.value
    }
}

/// Which edges to add inside a boundary facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Augment {
    /// Join two A-vertices of `F` to all of `F ∩ B`.
    TwoVertex,
    /// Join `v ∈ F` to `F ∩ B` and `v* ∈ F*` to `F* ∩ B`, where `F*` is the
    /// opposite facet and `v, v*` span a 2-face.
    OppositeFacets,
    /// The recursive `2^{d-1} - d` edges that make the cube `(1,d)`-Laman.
    LamanOneD,
}

/// An augmentation with its vertex choices spelled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentMode {
    TwoVertex { u: Vertex, w: Vertex },
    OppositeFacets { v: Vertex, v_star: Vertex },
    LamanOneD,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicalGraph {
    pub d: usize,
    pub graph: BipartiteGraph,
    cubes: Vec<Vec<Vertex>>,
    registry: BTreeSet<CubeFacet>,
}

pub fn cube(d: usize) -> Result<CubicalGraph, Error> {
    if d == 0 || d > 20 {
        return Err(Error::Invalid(format!("cube dimension must be in 1..=20, got {d}")));
    }
    let half = 1 << (d - 1);
    let mut graph = BipartiteGraph::empty(half, half);
    for x in (0..1usize << d).filter(|&x| parity_side(x) == Side::A) {
        for i in 0..d {
            graph.add_edge(x >> 1, (x ^ 1 << i) >> 1);
        }
    }
    let registry = (0..d)
        .flat_map(|bit| [false, true].map(|value| CubeFacet { cube: 0, bit, value }))
        .collect();
    Ok(CubicalGraph { d, graph, cubes: vec![(0..1 << d).map(word_vertex).collect()], registry })
}

pub fn cube_graph(d: usize) -> Result<BipartiteGraph, Error> {
    Ok(cube(d)?.graph)
}

/// Starts from one cube and glues `t - 1` further cubes, each onto a
/// boundary facet drawn uniformly from the registry.
pub fn stacked_cubical_graph(d: usize, t: usize, seed: u64) -> Result<CubicalGraph, Error> {
    if d < 3 || t == 0 {
        return Err(Error::Invalid(format!("stacked cubes need d >= 3 and t >= 1, got d={d} t={t}")));
    }
    let mut g = cube(d)?;
    let mut rng = super::rng(seed);
    for _ in 1..t {
        let k = rng.random_range(0..g.registry.len());
        let f = *g.registry.iter().nth(k).expect("registry is never empty");
        g.glue_cube(f);
    }
    let (half, quarter) = (1usize << (d - 1), 1usize << (d - 2));
    assert_eq!(g.graph.n_vertices(), 2 * half + (t - 1) * half);
    assert_eq!(g.graph.a_size(), g.graph.b_size());
    // Each new cube brings d 2^{d-1} edges and shares the (d-1) 2^{d-2}
    // edges of the glued facet.
    assert_eq!(g.graph.n_edges(), d * half + (t - 1) * (d + 1) * quarter);
    Ok(g)
}

impl CubicalGraph {
    pub fn n_cubes(&self) -> usize {
        self.cubes.len()
    }

    pub fn boundary_facets(&self) -> &BTreeSet<CubeFacet> {
        &self.registry
    }

    pub fn cube_vertex(&self, cube: usize, word: usize) -> Vertex {
        self.cubes[cube][word]
    }

    /// Vertices of `f` on `side`, in increasing word order.
    pub fn facet_vertices(&self, f: CubeFacet, side: Side) -> Vec<Vertex> {
        (0..1usize << self.d)
            .filter(|&x| f.contains_word(x) && parity_side(x) == side)
            .map(|x| self.cubes[f.cube][x])
            .collect()
    }

    fn word_of(&self, cube: usize, v: Vertex) -> Option<usize> {
        self.cubes.get(cube)?.iter().position(|&u| u == v)
    }

    fn glue_cube(&mut self, f: CubeFacet) {
        self.registry.remove(&f);
        let map: Vec<Vertex> = (0..1usize << self.d)
            .map(|x| {
                if f.contains_word(x) {
                    self.cubes[f.cube][x]
                } else {
                    self.graph.add_vertex(parity_side(x))
                }
            })
            .collect();
        for x in (0..1usize << self.d).filter(|&x| parity_side(x) == Side::A) {
            for i in 0..self.d {
                self.graph.add_edge(map[x].index, map[x ^ 1 << i].index);
            }
        }
        let c = self.cubes.len();
        self.cubes.push(map);
        self.registry.insert(CubeFacet { cube: c, bit: f.bit, value: !f.value });
        for bit in (0..self.d).filter(|&b| b != f.bit) {
            for value in [false, true] {
                self.registry.insert(CubeFacet { cube: c, bit, value });
            }
        }
    }

    fn check_facet(&self, f: CubeFacet) -> Result<(), Error> {
        if self.registry.contains(&f) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{f:?} is not a boundary facet")))
        }
    }

    /// The default vertex choices for `kind` on facet `f`: the least
    /// A-words of `f`, or for opposite facets the least A-word `v` of `f`
    /// and `v` with its facet bit and the least other bit flipped.
    pub fn default_mode(&self, f: CubeFacet, kind: Augment) -> Result<AugmentMode, Error> {
        if self.d < 3 {
            return Err(Error::Invalid("facet augmentation needs d >= 3".into()));
        }
        let a = self.facet_vertices(f, Side::A);
        Ok(match kind {
            Augment::TwoVertex => AugmentMode::TwoVertex { u: a[0], w: a[1] },
            Augment::OppositeFacets => {
                let x = self.word_of(f.cube, a[0]).expect("vertex of its cube");
                let j = (0..self.d).find(|&j| j != f.bit).expect("d >= 2");
                let v_star = self.cubes[f.cube][x ^ 1 << f.bit ^ 1 << j];
                AugmentMode::OppositeFacets { v: a[0], v_star }
            }
            Augment::LamanOneD => AugmentMode::LamanOneD,
        })
    }

    /// Augments the first boundary facet in registry order, which lies in the
    /// first cube whenever that cube still has one.
    pub fn augment_default(&self, kind: Augment) -> Result<BipartiteGraph, Error> {
        let f = *self.registry.iter().next().expect("registry is never empty");
        self.augment_facet(f, self.default_mode(f, kind)?)
    }

    pub fn augment_facet(&self, f: CubeFacet, mode: AugmentMode) -> Result<BipartiteGraph, Error> {
        self.check_facet(f)?;
        let mut g = self.graph.clone();
        let in_facet = |f: CubeFacet, v: Vertex| {
            v.side == Side::A && self.word_of(f.cube, v).is_some_and(|x| f.contains_word(x))
        };
        match mode {
            AugmentMode::TwoVertex { u, w } => {
                if u == w || !in_facet(f, u) || !in_facet(f, w) {
                    return Err(Error::Invalid(format!("{u} and {w} must be distinct A-vertices of the facet")));
                }
                for b in self.facet_vertices(f, Side::B) {
                    g.add_edge(u.index, b.index);
                    g.add_edge(w.index, b.index);
                }
            }
            AugmentMode::OppositeFacets { v, v_star } => {
                let fs = f.opposite();
                self.check_facet(fs)?;
                let span_2_face = match (self.word_of(f.cube, v), self.word_of(f.cube, v_star)) {
                    (Some(x), Some(y)) => (x ^ y).count_ones() == 2,
                    _ => false,
                };
                if !in_facet(f, v) || !in_facet(fs, v_star) || !span_2_face {
                    return Err(Error::Invalid(format!(
                        "{v} and {v_star} must be A-vertices of opposite facets spanning a 2-face"
                    )));
                }
                for b in self.facet_vertices(f, Side::B) {
                    g.add_edge(v.index, b.index);
                }
                for b in self.facet_vertices(fs, Side::B) {
                    g.add_edge(v_star.index, b.index);
                }
            }
            AugmentMode::LamanOneD => {
                if self.d < 4 {
                    return Err(Error::Invalid("the (1,d) facet augmentation needs d >= 4".into()));
                }
                let free: Vec<usize> = (0..self.d).filter(|&b| b != f.bit).collect();
                let base = if f.value { 1 << f.bit } else { 0 };
                for (x, y) in subcube_laman(&free, base) {
                    let (u, v) = (self.cubes[f.cube][x], self.cubes[f.cube][y]);
                    g.add_edge(u.index, v.index);
                }
            }
        }
        Ok(g)
    }
}

fn subcube_words(free: &[usize], base: usize) -> Vec<usize> {
    let mut words: Vec<usize> = (0..1usize << free.len())
        .map(|code| free.iter().enumerate().fold(base, |w, (k, &b)| w | (code >> k & 1) << b))
        .collect();
    words.sort_unstable();
    words
}

/// Edges `(A-word, B-word)` added to the subcube spanned by `free` over
/// `base`. Three free bits get the long diagonals; more bits split off the
/// last free bit, recurse into both halves and add the first `m - 1` cross
/// non-edges in word order.
fn subcube_laman(free: &[usize], base: usize) -> Vec<(usize, usize)> {
    let m = free.len();
    let orient = |x: usize, y: usize| if parity_side(x) == Side::A { (x, y) } else { (y, x) };
    if m == 3 {
        let mask = free.iter().fold(0, |w, &b| w | 1 << b);
        return subcube_words(free, base)
            .into_iter()
            .filter(|&x| x & 1 << free[0] == 0)
            .map(|x| orient(x, x ^ mask))
            .collect();
    }
    let (rest, last) = (&free[..m - 1], free[m - 1]);
    let mut out = subcube_laman(rest, base);
    out.extend(subcube_laman(rest, base | 1 << last));
    let low = subcube_words(rest, base);
    let high = subcube_words(rest, base | 1 << last);
    let cross = low
        .iter()
        .flat_map(|&x| high.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| parity_side(x) != parity_side(y) && (x ^ y).count_ones() > 1)
        .take(m - 1);
    out.extend(cross.map(|(x, y)| orient(x, y)));
    out
}

/// The `2^m - m - 1` edges making the graph of an `m`-cube `(1, m+1)`-Laman,
/// as `(A-word, B-word)` pairs of a standalone cube (see [`word_vertex`]).
pub fn laman_subcube_edges(m: usize) -> Result<Vec<(usize, usize)>, Error> {
    if !(3..=20).contains(&m) {
        return Err(Error::Invalid(format!("subcube dimension must be in 3..=20, got {m}")));
    }
    let free: Vec<usize> = (0..m).collect();
    Ok(subcube_laman(&free, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::TrialPolicy;
    use crate::rigidity::{analyze, laman_check};

    #[test]
    fn small_cubes() {
        let q3 = cube_graph(3).unwrap();
        assert_eq!((q3.a_size(), q3.b_size(), q3.n_edges()), (4, 4, 12));
        assert!((0..4).all(|i| q3.degree(Vertex::a(i)) == 3 && q3.degree(Vertex::b(i)) == 3));
        assert_eq!(cube_graph(2).unwrap(), crate::families::cycle(2).unwrap());
        let q4 = cube_graph(4).unwrap();
        assert_eq!((q4.a_size(), q4.b_size(), q4.n_edges()), (8, 8, 32));
        assert_eq!(cube_graph(1).unwrap(), BipartiteGraph::complete(1, 1));
    }

    #[test]
    fn one_stacked_cube_is_the_cube() {
        assert_eq!(stacked_cubical_graph(3, 1, 7).unwrap().graph, cube_graph(3).unwrap());
    }

    #[test]
    fn two_stacked_3_cubes() {
        let g = stacked_cubical_graph(3, 2, 0).unwrap();
        assert_eq!((g.graph.n_vertices(), g.graph.n_edges()), (12, 20));
        assert_eq!(g.boundary_facets().len(), 10);
        assert_eq!(g.n_cubes(), 2);
    }

    #[test]
    fn two_vertex_mode_adds_nothing_in_dimension_3() {
        let c = cube(3).unwrap();
        assert_eq!(c.augment_default(Augment::TwoVertex).unwrap(), c.graph);
    }

    #[test]
    fn two_vertex_mode_in_dimension_4() {
        let c = cube(4).unwrap();
        let g = c.augment_default(Augment::TwoVertex).unwrap();
        // Each of u, w already meets 3 of the 4 B-vertices of its facet.
        assert_eq!(g.n_edges(), 32 + 2);
        let r = analyze(&g, 2, 3, &TrialPolicy::with_seed(4)).unwrap();
        assert!(r.is_rigid && r.is_stress_free);
    }

    #[test]
    fn opposite_facets_mode() {
        for d in 3..=5 {
            let c = cube(d).unwrap();
            let g = c.augment_default(Augment::OppositeFacets).unwrap();
            assert_eq!(g.n_edges() - c.graph.n_edges(), 2 * ((1 << (d - 2)) - (d - 1)));
            let r = analyze(&g, 2, d - 1, &TrialPolicy::with_seed(d as u64)).unwrap();
            assert!(r.is_rigid && r.is_stress_free, "d={d}");
        }
    }

    #[test]
    fn laman_subcube_on_the_3_cube_is_k44() {
        let mut g = cube_graph(3).unwrap();
        for (x, y) in laman_subcube_edges(3).unwrap() {
            assert!(g.add_edge(word_vertex(x).index, word_vertex(y).index));
        }
        assert_eq!(g, BipartiteGraph::complete(4, 4));
    }

    #[test]
    fn laman_subcubes_are_laman() {
        for m in 3..=5 {
            let mut g = cube_graph(m).unwrap();
            let added = laman_subcube_edges(m).unwrap();
            assert_eq!(added.len(), (1 << m) - m - 1);
            for (x, y) in added {
                assert!(g.add_edge(word_vertex(x).index, word_vertex(y).index));
            }
            assert!(laman_check(&g, 1, m + 1).unwrap().holds, "m={m}");
        }
    }

    #[test]
    fn laman_facet_mode_on_cubes() {
        for d in 4..=5 {
            let c = cube(d).unwrap();
            let g = c.augment_default(Augment::LamanOneD).unwrap();
            assert_eq!(g.n_edges() - c.graph.n_edges(), (1 << (d - 1)) - d);
            assert!(laman_check(&g, 1, d).unwrap().holds, "d={d}");
        }
        assert!(cube(3).unwrap().augment_default(Augment::LamanOneD).is_err());
    }

    #[test]
    fn stacked_laman_augmentation_is_rigid() {
        for t in 1..=3 {
            let c = stacked_cubical_graph(4, t, t as u64).unwrap();
            let g = c.augment_default(Augment::LamanOneD).unwrap();
            let r = analyze(&g, 1, 4, &TrialPolicy::with_seed(11)).unwrap();
            assert!(r.is_rigid && r.is_stress_free, "t={t}");
        }
    }

    #[test]
    fn bad_choices_are_rejected() {
        let c = stacked_cubical_graph(3, 2, 0).unwrap();
        let glued = *(0..3)
            .flat_map(|bit| [false, true].map(|value| CubeFacet { cube: 0, bit, value }))
            .collect::<Vec<_>>()
            .iter()
            .find(|f| !c.boundary_facets().contains(f))
            .unwrap();
        assert!(c.augment_facet(glued, AugmentMode::LamanOneD).is_err());
        let f = *c.boundary_facets().iter().next().unwrap();
        let a = c.facet_vertices(f, Side::A);
        let mode = AugmentMode::TwoVertex { u: a[0], w: a[0] };
        assert!(c.augment_facet(f, mode).is_err());
        let b = c.facet_vertices(f, Side::B)[0];
        assert!(c.augment_facet(f, AugmentMode::TwoVertex { u: a[0], w: b }).is_err());
    }
}
