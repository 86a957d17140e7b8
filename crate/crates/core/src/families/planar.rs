//! Planar bipartite generators: quadrangulations of the sphere grown by
//! vertex splitting, and outerplanar graphs grown by 4-gon ears.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::combinat::{BipartiteGraph, Side, Vertex};
use crate::Error;

/// A quadrangulation of the sphere as a list of consistently oriented
/// 4-gons. Every edge lies in exactly two faces, once in each direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadrangulation {
    a_size: usize,
    b_size: usize,
    faces: Vec<[Vertex; 4]>,
}

impl Quadrangulation {
    /// The 4-cycle drawn on the sphere: two faces, opposite orientations.
    pub fn square() -> Self {
        let (a0, a1, b0, b1) = (Vertex::a(0), Vertex::a(1), Vertex::b(0), Vertex::b(1));
        Self { a_size: 2, b_size: 2, faces: vec![[a0, b0, a1, b1], [a0, b1, a1, b0]] }
    }

    pub fn faces(&self) -> &[[Vertex; 4]] {
        &self.faces
    }

    pub fn n_vertices(&self) -> usize {
        self.a_size + self.b_size
    }

    pub fn graph(&self) -> BipartiteGraph {
        let mut g = BipartiteGraph::empty(self.a_size, self.b_size);
        for f in &self.faces {
            for k in 0..4 {
                let (x, y) = (f[k], f[(k + 1) % 4]);
                let (a, b) = if x.side == Side::A { (x, y) } else { (y, x) };
                g.add_edge(a.index, b.index);
            }
        }
        g
    }

    /// Neighbours of `w` in rotation order, each with the face that follows
    /// it. The face `(w, a, x, b)` sends `a` to `b`.
    fn rotation(&self, w: Vertex) -> Vec<(Vertex, usize)> {
        let mut succ: BTreeMap<Vertex, (Vertex, usize)> = BTreeMap::new();
        for (fi, f) in self.faces.iter().enumerate() {
            if let Some(p) = f.iter().position(|&u| u == w) {
                succ.insert(f[(p + 1) % 4], (f[(p + 3) % 4], fi));
            }
        }
        let start = *succ.keys().next().expect("every vertex lies on a face");
        let mut out = Vec::with_capacity(succ.len());
        let mut at = start;
        loop {
            let (next, fi) = succ[&at];
            out.push((at, fi));
            at = next;
            if at == start {
                break;
            }
        }
        assert_eq!(out.len(), succ.len(), "rotation at {w} is not a single cycle");
        out
    }

    /// Splits `w`: a new vertex `v` takes over the `len` faces following
    /// rotation slot `start`, and the new face `(w, n_start, v, n_end)` fills
    /// the gap. This undoes the contraction of `v` into `w`.
    pub fn split(&mut self, w: Vertex, start: usize, len: usize) -> Result<Vertex, Error> {
        let rot = self.rotation(w);
        let r = rot.len();
        if len == 0 || len >= r {
            return Err(Error::Invalid(format!("split length must be in 1..{r}, got {len}")));
        }
        let v = match w.side {
            Side::A => {
                self.a_size += 1;
                Vertex::a(self.a_size - 1)
            }
            Side::B => {
                self.b_size += 1;
                Vertex::b(self.b_size - 1)
            }
        };
        for k in 0..len {
            let fi = rot[(start + k) % r].1;
            for u in self.faces[fi].iter_mut().filter(|u| **u == w) {
                *u = v;
            }
        }
        let (ni, nj) = (rot[start % r].0, rot[(start + len) % r].0);
        self.faces.push([w, ni, v, nj]);
        Ok(v)
    }

    /// Each directed edge in exactly one face, and Euler's count.
    pub fn check(&self) -> bool {
        let mut directed = BTreeSet::new();
        for f in &self.faces {
            for k in 0..4 {
                if f[k].side == f[(k + 1) % 4].side || !directed.insert((f[k], f[(k + 1) % 4])) {
                    return false;
                }
            }
        }
        let paired = directed.iter().all(|&(x, y)| directed.contains(&(y, x)));
        let n = self.n_vertices();
        paired && directed.len() == 2 * (2 * n - 4) && self.faces.len() == n - 2
    }
}

/// Grows the square by `splits` random vertex splits. Each split picks a
/// random face and one of its corners, then moves a random run of the
/// corner's faces, starting at the chosen one, to the new vertex.
pub fn random_quadrangulation(splits: usize, seed: u64) -> Result<Quadrangulation, Error> {
    let mut q = Quadrangulation::square();
    let mut rng = super::rng(seed);
    for _ in 0..splits {
        let fi = rng.random_range(0..q.faces.len());
        let w = q.faces[fi][rng.random_range(0..4)];
        let rot = q.rotation(w);
        let start = rot.iter().position(|&(_, f)| f == fi).expect("face lies at its corner");
        let len = rng.random_range(1..rot.len());
        q.split(w, start, len)?;
    }
    let g = q.graph();
    assert_eq!(g.n_edges(), 2 * g.n_vertices() - 4);
    debug_assert!(q.check());
    Ok(q)
}

/// An outerplanar graph: the 4-cycle with `ears` random 4-gons glued on
/// outer edges, then `pendants` leaves hung on random vertices.
pub fn random_outerplanar(ears: usize, pendants: usize, seed: u64) -> Result<BipartiteGraph, Error> {
    let mut g = super::cycle(2)?;
    let mut rng = super::rng(seed);
    let mut outer = vec![Vertex::a(0), Vertex::b(0), Vertex::a(1), Vertex::b(1)];
    let join = |g: &mut BipartiteGraph, x: Vertex, y: Vertex| {
        let (a, b) = if x.side == Side::A { (x, y) } else { (y, x) };
        g.add_edge(a.index, b.index);
    };
    for _ in 0..ears {
        let p = rng.random_range(0..outer.len());
        let (u, w) = (outer[p], outer[(p + 1) % outer.len()]);
        let x = g.add_vertex(u.side.other());
        let y = g.add_vertex(u.side);
        join(&mut g, u, x);
        join(&mut g, x, y);
        join(&mut g, y, w);
        outer.splice(p + 1..p + 1, [x, y]);
    }
    for _ in 0..pendants {
        let n = g.n_vertices();
        let k = rng.random_range(0..n);
        let u = if k < g.a_size() { Vertex::a(k) } else { Vertex::b(k - g.a_size()) };
        let z = g.add_vertex(u.side.other());
        join(&mut g, u, z);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cube_graph;
    use proptest::prelude::*;

    fn isomorphic(g: &BipartiteGraph, h: &BipartiteGraph) -> bool {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            perms(n - 1)
                .into_iter()
                .flat_map(|p| (0..n).map(move |k| {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    q
                }))
                .collect()
        }
        let try_sides = |h: &BipartiteGraph| {
            g.a_size() == h.a_size()
                && g.b_size() == h.b_size()
                && g.n_edges() == h.n_edges()
                && perms(g.a_size()).iter().any(|pa| {
                    perms(g.b_size())
                        .iter()
                        .any(|pb| g.edges().iter().all(|&(i, j)| h.has_edge(pa[i], pb[j])))
                })
        };
        try_sides(h) || try_sides(&h.transpose())
    }

    #[test]
    fn no_splits_is_the_square() {
        let q = random_quadrangulation(0, 3).unwrap();
        assert_eq!(q.graph(), BipartiteGraph::complete(2, 2));
        assert!(q.check());
    }

    #[test]
    fn first_split_gives_k23() {
        let q = random_quadrangulation(1, 0).unwrap();
        let g = q.graph();
        assert!(isomorphic(&g, &BipartiteGraph::complete(3, 2)));
        assert_eq!(q.faces().len(), 3);
    }

    #[test]
    fn the_cube_is_reachable() {
        let q3 = cube_graph(3).unwrap();
        assert_eq!(q3.n_edges(), 2 * 8 - 4);
        let hit = (0..400).any(|s| isomorphic(&random_quadrangulation(4, s).unwrap().graph(), &q3));
        assert!(hit);
    }

    #[test]
    fn bad_split_lengths() {
        let mut q = Quadrangulation::square();
        assert!(q.split(Vertex::a(0), 0, 2).is_err());
        assert!(q.split(Vertex::a(0), 0, 0).is_err());
        assert!(q.split(Vertex::a(0), 1, 1).is_ok());
    }

    #[test]
    fn outerplanar_counts() {
        let g = random_outerplanar(0, 0, 1).unwrap();
        assert_eq!(g, BipartiteGraph::complete(2, 2));
        let g = random_outerplanar(5, 3, 1).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (4 + 10 + 3, 4 + 15 + 3));
    }

    proptest! {
        #[test]
        fn quadrangulations_are_consistent(splits in 0usize..25, seed in any::<u64>()) {
            let q = random_quadrangulation(splits, seed).unwrap();
            prop_assert!(q.check());
            let g = q.graph();
            prop_assert_eq!(g.n_vertices(), 4 + splits);
            prop_assert_eq!(g.n_edges(), 2 * g.n_vertices() - 4);
            prop_assert!(g.a_size() >= 2 && g.b_size() >= 2);
        }
    }
}
