//! Bipartite graphs with fixed, ordered sides.
//!
//! Vertices are 0-based per side internally; the JSON form is 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CombinatError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    /// Color of the side when a graph is read as a balanced 1-complex.
    pub fn color(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn a(index: usize) -> Self {
        Self { side: Side::A, index }
    }

    pub fn b(index: usize) -> Self {
        Self { side: Side::B, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::A => write!(f, "{}", self.index + 1),
            Side::B => write!(f, "{}'", self.index + 1),
        }
    }
}

/// An edge `(i, j)` joins A-vertex `i` to B-vertex `j`.
pub type Edge = (usize, usize);

/// Old-to-new index map returned by every transform.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexMap {
    pub a: Vec<Option<usize>>,
    pub b: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        let m = match v.side {
            Side::A => &self.a,
            Side::B => &self.b,
        };
        m.get(v.index).copied().flatten().map(|index| Vertex { side: v.side, index })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    a_size: usize,
    b_size: usize,
    edges: BTreeSet<Edge>,
}

impl BipartiteGraph {
    pub fn new(
        a_size: usize,
        b_size: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, CombinatError> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        for &(i, j) in &edges {
            if i >= a_size {
                return Err(CombinatError::UnknownVertex(Vertex::a(i).to_string()));
            }
            if j >= b_size {
                return Err(CombinatError::UnknownVertex(Vertex::b(j).to_string()));
            }
        }
        Ok(Self { a_size, b_size, edges })
    }

    pub fn empty(a_size: usize, b_size: usize) -> Self {
        Self { a_size, b_size, edges: BTreeSet::new() }
    }

    pub fn complete(a_size: usize, b_size: usize) -> Self {
        let edges = (0..a_size).flat_map(|i| (0..b_size).map(move |j| (i, j))).collect();
        Self { a_size, b_size, edges }
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn b_size(&self) -> usize {
        self.b_size
    }

    pub fn side_size(&self, side: Side) -> usize {
        match side {
            Side::A => self.a_size,
            Side::B => self.b_size,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.a_size + self.b_size
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.index < self.side_size(v.side)
    }

    /// Neighbors of `v`, as indices on the other side, ascending.
    pub fn neighbors(&self, v: Vertex) -> Vec<usize> {
        match v.side {
            Side::A => self.edges.range((v.index, 0)..(v.index + 1, 0)).map(|&(_, j)| j).collect(),
            Side::B => self.edges.iter().filter(|&&(_, j)| j == v.index).map(|&(i, _)| i).collect(),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Adds an edge, returning whether it was new.
    pub fn add_edge(&mut self, i: usize, j: usize) -> bool {
        assert!(i < self.a_size && j < self.b_size, "edge ({i},{j}) out of range");
        self.edges.insert((i, j))
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> bool {
        self.edges.remove(&(i, j))
    }

    pub fn add_vertex(&mut self, side: Side) -> Vertex {
        let index = match side {
            Side::A => {
                self.a_size += 1;
                self.a_size - 1
            }
            Side::B => {
                self.b_size += 1;
                self.b_size - 1
            }
        };
        Vertex { side, index }
    }

    pub fn is_subgraph_of(&self, other: &BipartiteGraph) -> bool {
        self.a_size == other.a_size && self.b_size == other.b_size && self.edges.is_subset(&other.edges)
    }

    /// The graph with sides swapped.
    pub fn transpose(&self) -> BipartiteGraph {
        Self {
            a_size: self.b_size,
            b_size: self.a_size,
            edges: self.edges.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), CombinatError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(CombinatError::UnknownVertex(v.to_string()))
        }
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<(BipartiteGraph, VertexMap), CombinatError> {
        self.check_vertex(v)?;
        let keep = |side: Side, n: usize| -> Vec<usize> {
            (0..n).filter(|&x| !(side == v.side && x == v.index)).collect()
        };
        self.induced_subgraph(&keep(Side::A, self.a_size), &keep(Side::B, self.b_size))
    }

    /// Induced subgraph on the given vertices, renumbered densely in
    /// increasing order.
    pub fn induced_subgraph(
        &self,
        a_subset: &[usize],
        b_subset: &[usize],
    ) -> Result<(BipartiteGraph, VertexMap), CombinatError> {
        let mut map = VertexMap { a: vec![None; self.a_size], b: vec![None; self.b_size] };
        let sorted = |s: &[usize]| s.iter().copied().collect::<BTreeSet<_>>();
        for (k, i) in sorted(a_subset).into_iter().enumerate() {
            self.check_vertex(Vertex::a(i))?;
            map.a[i] = Some(k);
        }
        for (k, j) in sorted(b_subset).into_iter().enumerate() {
            self.check_vertex(Vertex::b(j))?;
            map.b[j] = Some(k);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(i, j)| Some((map.a[i]?, map.b[j]?)))
            .collect();
        let g = Self {
            a_size: map.a.iter().flatten().count(),
            b_size: map.b.iter().flatten().count(),
            edges,
        };
        Ok((g, map))
    }

    /// Contracts `u` into `v`: `u`'s edges move to `v` and `u` disappears.
    /// Also returns the number of common neighbors of `u` and `v`.
    pub fn contract(
        &self,
        u: Vertex,
        v: Vertex,
    ) -> Result<(BipartiteGraph, usize, VertexMap), CombinatError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u.side != v.side {
            return Err(CombinatError::SideMismatch(u.to_string(), v.to_string()));
        }
        if u == v {
            return Err(CombinatError::SameVertex(u.to_string()));
        }
        let nu: BTreeSet<usize> = self.neighbors(u).into_iter().collect();
        let nv: BTreeSet<usize> = self.neighbors(v).into_iter().collect();
        let common = nu.intersection(&nv).count();
        let mut h = self.clone();
        for &w in &nu {
            match u.side {
                Side::A => h.add_edge(v.index, w),
                Side::B => h.add_edge(w, v.index),
            };
        }
        let (g, map) = h.delete_vertex(u)?;
        Ok((g, common, map))
    }

    /// Adds a new smallest A-vertex joined to all of B.
    pub fn cone_left(&self) -> (BipartiteGraph, VertexMap) {
        let mut edges: BTreeSet<Edge> = self.edges.iter().map(|&(i, j)| (i + 1, j)).collect();
        edges.extend((0..self.b_size).map(|j| (0, j)));
        let map = VertexMap {
            a: (1..=self.a_size).map(Some).collect(),
            b: (0..self.b_size).map(Some).collect(),
        };
        (Self { a_size: self.a_size + 1, b_size: self.b_size, edges }, map)
    }

    /// Adds a new smallest B-vertex joined to all of A.
    pub fn cone_right(&self) -> (BipartiteGraph, VertexMap) {
        let (t, m) = self.transpose().cone_left();
        (t.transpose(), VertexMap { a: m.b, b: m.a })
    }

    /// Union of `self` and `other`, where `ident` lists pairs
    /// `(vertex of other, vertex of self)` to be merged. Unmerged vertices
    /// of `other` are appended after `self`'s vertices on each side. The
    /// returned map sends `other`'s vertices into the result; `self`'s
    /// vertices keep their indices.
    pub fn glue(
        &self,
        other: &BipartiteGraph,
        ident: &[(Vertex, Vertex)],
    ) -> Result<(BipartiteGraph, VertexMap), CombinatError> {
        let mut map = VertexMap { a: vec![None; other.a_size], b: vec![None; other.b_size] };
        let mut targets = BTreeSet::new();
        for &(x, y) in ident {
            other.check_vertex(x)?;
            self.check_vertex(y)?;
            if x.side != y.side {
                return Err(CombinatError::SideMismatch(x.to_string(), y.to_string()));
            }
            let slot = match x.side {
                Side::A => &mut map.a[x.index],
                Side::B => &mut map.b[x.index],
            };
            if slot.is_some() || !targets.insert(y) {
                return Err(CombinatError::NonInjective(format!("{x} -> {y}")));
            }
            *slot = Some(y.index);
        }
        let mut g = self.clone();
        for (side, slots) in [(Side::A, &mut map.a), (Side::B, &mut map.b)] {
            for slot in slots.iter_mut().filter(|s| s.is_none()) {
                *slot = Some(g.add_vertex(side).index);
            }
        }
        for &(i, j) in &other.edges {
            g.add_edge(map.a[i].unwrap(), map.b[j].unwrap());
        }
        Ok((g, map))
    }

    /// Whether the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        // Union-find over A then B.
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(i, j) in &self.edges {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, self.a_size + j));
            if ri == rj {
                return false;
            }
            parent[ri] = rj;
        }
        true
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            a_size: self.a_size,
            b_size: self.b_size,
            edges: self.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self, CombinatError> {
        let mut edges = Vec::with_capacity(j.edges.len());
        for &[a, b] in &j.edges {
            if a == 0 || b == 0 {
                return Err(CombinatError::Json(format!("edge [{a}, {b}]: indices are 1-based")));
            }
            edges.push((a - 1, b - 1));
        }
        let n = edges.len();
        let g = Self::new(j.a_size, j.b_size, edges)?;
        if g.n_edges() != n {
            return Err(CombinatError::Json("duplicate edge".into()));
        }
        Ok(g)
    }
}

impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}) {{", self.a_size, self.b_size)?;
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            let sep = if k == 0 { "" } else { " " };
            write!(f, "{sep}{}{}", Vertex::a(i), Vertex::b(j))?;
        }
        f.write_str("}")
    }
}

/// Wire format: 1-based indices, edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub a_size: usize,
    pub b_size: usize,
    pub edges: Vec<[usize; 2]>,
}
