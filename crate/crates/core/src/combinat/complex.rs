//! Balanced simplicial complexes stored by their maximal faces.
//!
//! A vertex is a pair `(color, index)` with both parts 0-based. A face holds
//! at most one vertex per color and is kept sorted by color, so faces
//! compare lexicographically by their `(color, index)` lists.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::graph::BipartiteGraph;
use super::CombinatError;

pub type CVertex = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<CVertex>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = CVertex>) -> Result<Self, CombinatError> {
        let mut v: Vec<CVertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(CombinatError::NotColorful(format!("{v:?}")));
        }
        Ok(Self(v))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn vertices(&self) -> &[CVertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Colors used, as a bitmask.
    pub fn colorset(&self) -> u64 {
        self.0.iter().fold(0, |m, &(c, _)| m | 1 << c)
    }

    pub fn vertex_of_color(&self, color: usize) -> Option<usize> {
        self.0.iter().find(|&&(c, _)| c == color).map(|&(_, i)| i)
    }

    pub fn contains(&self, v: CVertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn without(&self, v: CVertex) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Restriction to the colors in `mask`.
    pub fn restrict(&self, mask: u64) -> Face {
        Face(self.0.iter().copied().filter(|&(c, _)| mask >> c & 1 == 1).collect())
    }

    /// Union with a face on disjoint colors.
    pub fn union(&self, other: &Face) -> Face {
        debug_assert_eq!(self.colorset() & other.colorset(), 0);
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        Face(v)
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (0u64..1 << n).map(move |s| Face((0..n).filter(|&i| s >> i & 1 == 1).map(|i| self.0[i]).collect()))
    }

    /// Codimension-one subfaces.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().map(move |&v| self.without(v))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, &(c, i)) in self.0.iter().enumerate() {
            let sep = if k == 0 { "" } else { " " };
            write!(f, "{sep}{}:{}", c + 1, i + 1)?;
        }
        f.write_str("}")
    }
}

/// A balanced complex on `color_sizes.len()` colors. `facets` holds the
/// maximal faces only. The complex with no faces at all and the complex
/// `{∅}` are distinct: the latter has the empty face as its single facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BalancedComplex {
    color_sizes: Vec<usize>,
    facets: BTreeSet<Face>,
}

/// Graph of facets adjacent along ridges, with the facet behind each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetRidgeGraph {
    pub graph: BipartiteGraph,
    pub a_facets: Vec<Face>,
    pub b_facets: Vec<Face>,
}

impl BalancedComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(
        color_sizes: Vec<usize>,
        faces: impl IntoIterator<Item = Face>,
    ) -> Result<Self, CombinatError> {
        if color_sizes.len() > 63 {
            return Err(CombinatError::Invalid("at most 63 colors are supported".into()));
        }
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for f in &faces {
            for &(c, i) in f.vertices() {
                if c >= color_sizes.len() || i >= color_sizes[c] {
                    return Err(CombinatError::UnknownVertex(format!("{}:{}", c + 1, i + 1)));
                }
            }
        }
        Ok(Self { color_sizes, facets: maximal(faces) })
    }

    pub fn from_vertex_lists<I, F>(color_sizes: Vec<usize>, faces: I) -> Result<Self, CombinatError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = CVertex>,
    {
        let faces = faces.into_iter().map(Face::new).collect::<Result<Vec<_>, _>>()?;
        Self::new(color_sizes, faces)
    }

    /// The complex with no faces.
    pub fn void(color_sizes: Vec<usize>) -> Self {
        Self { color_sizes, facets: BTreeSet::new() }
    }

    /// The complex whose only face is the empty face.
    pub fn empty_face(color_sizes: Vec<usize>) -> Self {
        Self { color_sizes, facets: [Face::empty()].into() }
    }

    /// A bipartite graph as a 1-complex: A is color 0, B is color 1.
    /// Isolated vertices become 0-dimensional facets.
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        let mut faces: BTreeSet<Face> =
            g.edges().iter().map(|&(i, j)| Face(vec![(0, i), (1, j)])).collect();
        faces.extend((0..g.a_size()).map(|i| Face(vec![(0, i)])));
        faces.extend((0..g.b_size()).map(|j| Face(vec![(1, j)])));
        Self { color_sizes: vec![g.a_size(), g.b_size()], facets: maximal(faces) }
    }

    /// The edges of a 2-colored complex as a bipartite graph.
    pub fn to_graph(&self) -> Result<BipartiteGraph, CombinatError> {
        if self.n_colors() != 2 {
            return Err(CombinatError::DimensionMismatch(format!(
                "a graph needs 2 colors, complex has {}",
                self.n_colors()
            )));
        }
        let edges = self
            .facets
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f.0[0].1, f.0[1].1));
        BipartiteGraph::new(self.color_sizes[0], self.color_sizes[1], edges)
    }

    pub fn color_sizes(&self) -> &[usize] {
        &self.color_sizes
    }

    pub fn n_colors(&self) -> usize {
        self.color_sizes.len()
    }

    /// `d`, where facets of a pure complex have `d + 1` vertices.
    pub fn dim(&self) -> isize {
        self.n_colors() as isize - 1
    }

    pub fn facets(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Every facet uses every color.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.n_colors())
    }

    pub fn full_colorset(&self) -> u64 {
        (1u64 << self.n_colors()) - 1
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }

    pub fn faces(&self) -> BTreeSet<Face> {
        self.facets.iter().flat_map(|f| f.subfaces().collect::<Vec<_>>()).collect()
    }

    /// Faces whose colorset is exactly `mask`, sorted.
    pub fn faces_with_colorset(&self, mask: u64) -> Vec<Face> {
        self.facets
            .iter()
            .filter(|f| f.colorset() & mask == mask)
            .map(|f| f.restrict(mask))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `(f_{-1}, f_0, ..., f_d)`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.n_colors() + 1];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// Faces with one vertex fewer than a full colorset.
    pub fn ridges(&self) -> BTreeSet<Face> {
        let n = self.n_colors();
        self.facets
            .iter()
            .filter(|f| f.len() == n)
            .flat_map(|f| f.boundary().collect::<Vec<_>>())
            .collect()
    }

    fn check_face(&self, sigma: &Face) -> Result<(), CombinatError> {
        if self.contains_face(sigma) {
            Ok(())
        } else {
            Err(CombinatError::NotAFace(sigma.to_string()))
        }
    }

    /// `x` is not a face but every proper subset of it is.
    pub fn is_missing_face(&self, x: &Face) -> bool {
        !self.contains_face(x) && x.boundary().all(|g| self.contains_face(&g))
    }

    /// The link of `sigma`, on the colors not used by `sigma`, renumbered in
    /// increasing order. The second value lists the original color of each
    /// new color.
    pub fn link(&self, sigma: &Face) -> Result<(BalancedComplex, Vec<usize>), CombinatError> {
        self.check_face(sigma)?;
        let colors: Vec<usize> = (0..self.n_colors()).filter(|&c| sigma.colorset() >> c & 1 == 0).collect();
        let mut renumber = vec![usize::MAX; self.n_colors()];
        for (new, &old) in colors.iter().enumerate() {
            renumber[old] = new;
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .map(|f| Face(f.minus(sigma).0.into_iter().map(|(c, i)| (renumber[c], i)).collect()));
        let sizes = colors.iter().map(|&c| self.color_sizes[c]).collect();
        Ok((Self::new(sizes, faces)?, colors))
    }

    /// Faces not containing `sigma`.
    pub fn antistar(&self, sigma: &Face) -> Result<BalancedComplex, CombinatError> {
        self.check_face(sigma)?;
        if sigma.is_empty() {
            return Ok(Self::void(self.color_sizes.clone()));
        }
        let mut faces = BTreeSet::new();
        for f in &self.facets {
            if sigma.is_subset(f) {
                faces.extend(sigma.vertices().iter().map(|&v| f.without(v)));
            } else {
                faces.insert(f.clone());
            }
        }
        Self::new(self.color_sizes.clone(), faces)
    }

    /// Join with `other`, whose colors are placed after this complex's.
    pub fn join(&self, other: &BalancedComplex) -> BalancedComplex {
        let shift = self.n_colors();
        let mut sizes = self.color_sizes.clone();
        sizes.extend_from_slice(&other.color_sizes);
        let facets = self
            .facets
            .iter()
            .flat_map(|f| {
                other.facets.iter().map(move |g| {
                    let mut v = f.0.clone();
                    v.extend(g.0.iter().map(|&(c, i)| (c + shift, i)));
                    Face(v)
                })
            })
            .collect();
        Self { color_sizes: sizes, facets }
    }

    /// Replaces the star of `sigma` by `s * lk(sigma)`.
    ///
    /// `s` is colored by the colors of `sigma` in increasing order, and its
    /// missing facet `x` is identified with `sigma` color by color. The other
    /// vertices of `s` become new vertices appended to their color class.
    /// Returns the new complex and, per color of `s`, the index each vertex
    /// of `s` received.
    pub fn subdivide_star(
        &self,
        sigma: &Face,
        s: &BalancedComplex,
        x: &Face,
    ) -> Result<(BalancedComplex, Vec<Vec<usize>>), CombinatError> {
        self.check_face(sigma)?;
        if sigma.len() < 2 {
            return Err(CombinatError::Invalid("sigma must not be a vertex".into()));
        }
        if s.n_colors() != sigma.len() || !s.is_pure() {
            return Err(CombinatError::DimensionMismatch(format!(
                "replacement must be pure with {} colors",
                sigma.len()
            )));
        }
        if x.len() != s.n_colors() || !s.is_missing_face(x) {
            return Err(CombinatError::Invalid(format!("{x} is not a missing facet")));
        }
        let colors: Vec<usize> = sigma.vertices().iter().map(|&(c, _)| c).collect();
        let mut sizes = self.color_sizes.clone();
        let mut placement: Vec<Vec<usize>> = Vec::with_capacity(colors.len());
        for (sc, &kc) in colors.iter().enumerate() {
            let glued = x.vertex_of_color(sc).unwrap();
            let target = sigma.vertex_of_color(kc).unwrap();
            let slots = (0..s.color_sizes[sc])
                .map(|i| {
                    if i == glued {
                        target
                    } else {
                        sizes[kc] += 1;
                        sizes[kc] - 1
                    }
                })
                .collect();
            placement.push(slots);
        }
        let (link, link_colors) = self.link(sigma)?;
        let mut faces: BTreeSet<Face> = self.antistar(sigma)?.facets;
        for h in &s.facets {
            let mapped: Vec<CVertex> = h.0.iter().map(|&(c, i)| (colors[c], placement[c][i])).collect();
            for g in &link.facets {
                let mut v = mapped.clone();
                v.extend(g.0.iter().map(|&(c, i)| (link_colors[c], i)));
                faces.insert(Face::new(v)?);
            }
        }
        Ok((Self::new(sizes, faces)?, placement))
    }

    /// Facets adjacent when they share a ridge, 2-colored breadth first. In
    /// every component the least facet lands on side A.
    pub fn facet_ridge_graph(&self) -> Result<FacetRidgeGraph, CombinatError> {
        if !self.is_pure() {
            return Err(CombinatError::NotPure);
        }
        let facets: Vec<&Face> = self.facets.iter().collect();
        let mut by_ridge: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
        for (k, f) in facets.iter().enumerate() {
            for r in f.boundary() {
                by_ridge.entry(r).or_default().push(k);
            }
        }
        let mut adj = vec![Vec::new(); facets.len()];
        for (r, fs) in &by_ridge {
            match fs.as_slice() {
                [_] => {}
                &[x, y] => {
                    adj[x].push(y);
                    adj[y].push(x);
                }
                _ => return Err(CombinatError::NotPseudomanifold(r.to_string())),
            }
        }
        let mut side: Vec<Option<bool>> = vec![None; facets.len()];
        for start in 0..facets.len() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &y in &adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return Err(CombinatError::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        let mut index = vec![0; facets.len()];
        let (mut a_facets, mut b_facets) = (Vec::new(), Vec::new());
        for (k, f) in facets.iter().enumerate() {
            let list = if side[k] == Some(false) { &mut a_facets } else { &mut b_facets };
            index[k] = list.len();
            list.push((*f).clone());
        }
        let mut edges = BTreeSet::new();
        for (x, ys) in adj.iter().enumerate() {
            for &y in ys {
                if side[x] == Some(false) {
                    edges.insert((index[x], index[y]));
                }
            }
        }
        let graph = BipartiteGraph::new(a_facets.len(), b_facets.len(), edges)?;
        Ok(FacetRidgeGraph { graph, a_facets, b_facets })
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            dim: self.dim(),
            color_sizes: self.color_sizes.clone(),
            facets: self
                .facets
                .iter()
                .map(|f| f.0.iter().map(|&(c, i)| [c + 1, i + 1]).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self, CombinatError> {
        if j.dim != j.color_sizes.len() as isize - 1 {
            return Err(CombinatError::Json(format!(
                "dim {} does not match {} colors",
                j.dim,
                j.color_sizes.len()
            )));
        }
        let mut faces = Vec::with_capacity(j.facets.len());
        for f in &j.facets {
            let mut v = Vec::with_capacity(f.len());
            for &[c, i] in f {
                if c == 0 || i == 0 {
                    return Err(CombinatError::Json(format!("vertex [{c}, {i}]: indices are 1-based")));
                }
                v.push((c - 1, i - 1));
            }
            faces.push(Face::new(v)?);
        }
        Self::new(j.color_sizes.clone(), faces)
    }
}

fn maximal(faces: BTreeSet<Face>) -> BTreeSet<Face> {
    let mut by_size: Vec<&Face> = faces.iter().collect();
    by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let mut kept: Vec<&Face> = Vec::new();
    for f in by_size {
        if !kept.iter().any(|g| f.is_subset(g)) {
            kept.push(f);
        }
    }
    kept.into_iter().cloned().collect()
}

impl fmt::Display for BalancedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} [", self.color_sizes)?;
        for (k, face) in self.facets.iter().enumerate() {
            let sep = if k == 0 { "" } else { " " };
            write!(f, "{sep}{face}")?;
        }
        f.write_str("]")
    }
}

/// Wire format: `[color, index]` pairs, both 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dim: isize,
    pub color_sizes: Vec<usize>,
    pub facets: Vec<Vec<[usize; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn points(n: usize) -> BalancedComplex {
        BalancedComplex::from_vertex_lists(vec![n], (0..n).map(|i| [(0, i)])).unwrap()
    }

    fn octahedron() -> BalancedComplex {
        points(2).join(&points(2)).join(&points(2))
    }

    #[test]
    fn joins_of_point_sets() {
        let g = points(2).join(&points(2)).to_graph().unwrap();
        assert_eq!(g, BipartiteGraph::complete(2, 2));
        let g = points(3).join(&points(3)).to_graph().unwrap();
        assert_eq!(g, BipartiteGraph::complete(3, 3));
        assert_eq!(octahedron().f_vector(), vec![1, 6, 12, 8]);
    }

    #[test]
    fn link_and_antistar_of_octahedron() {
        let oct = octahedron();
        let (lk, colors) = oct.link(&Face::new([(0, 0)]).unwrap()).unwrap();
        assert_eq!(colors, vec![1, 2]);
        assert_eq!(lk.to_graph().unwrap(), BipartiteGraph::complete(2, 2));

        let sigma = oct.facets().iter().next().unwrap().clone();
        let ast = oct.antistar(&sigma).unwrap();
        assert_eq!(ast.f_vector(), vec![1, 6, 12, 7]);
        assert!(!ast.contains_face(&sigma));
        assert!(ast.is_missing_face(&sigma));

        assert!(Face::new([(0, 0), (0, 1)]).is_err());
        let absent = Face::new([(0, 5)]).unwrap();
        assert!(matches!(oct.link(&absent), Err(CombinatError::NotAFace(_))));
    }

    #[test]
    fn empty_face_complex() {
        let e = BalancedComplex::empty_face(vec![]);
        assert_eq!(e.f_vector(), vec![1]);
        assert_eq!(octahedron().join(&e), octahedron());
        let (lk, _) = octahedron().link(octahedron().facets().iter().next().unwrap()).unwrap();
        assert_eq!(lk, e);
    }

    #[test]
    fn facet_ridge_graph_of_octahedron_is_the_cube() {
        let fr = octahedron().facet_ridge_graph().unwrap();
        let g = &fr.graph;
        assert_eq!((g.a_size(), g.b_size(), g.n_edges()), (4, 4, 12));
        // Brute-force isomorphism with Q_3 over all 4!·4! side bijections.
        let even = [0u32, 3, 5, 6];
        let odd = [1u32, 2, 4, 7];
        let cube: BTreeSet<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| (even[i] ^ odd[j]).count_ones() == 1)
            .collect();
        let perms = permutations(4);
        let iso = perms.iter().any(|p| {
            perms.iter().any(|q| g.edges().iter().all(|&(i, j)| cube.contains(&(p[i], q[j]))))
        });
        assert!(iso);
        assert!(fr.a_facets.contains(octahedron().facets().iter().next().unwrap()));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        permutations(n - 1)
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |k| {
                    let mut q = p.clone();
                    q.insert(k, n - 1);
                    q
                })
            })
            .collect()
    }

    #[test]
    fn facet_ridge_errors_and_small_cases() {
        let two = BalancedComplex::from_vertex_lists(vec![2, 1], [[(0, 0), (1, 0)], [(0, 1), (1, 0)]]).unwrap();
        let g = two.facet_ridge_graph().unwrap().graph;
        assert_eq!((g.a_size(), g.b_size(), g.n_edges()), (1, 1, 1));
        let three = BalancedComplex::from_vertex_lists(
            vec![3, 1],
            [[(0, 0), (1, 0)], [(0, 1), (1, 0)], [(0, 2), (1, 0)]],
        )
        .unwrap();
        assert!(matches!(three.facet_ridge_graph(), Err(CombinatError::NotPseudomanifold(_))));
        let nonpure = BalancedComplex::from_vertex_lists(vec![1, 1], [vec![(0, 0)], vec![(1, 0)]]).unwrap();
        assert!(matches!(nonpure.facet_ridge_graph(), Err(CombinatError::NotPure)));
    }

    #[test]
    fn star_subdivision_of_an_edge_gives_a_hexagon() {
        let c4 = BalancedComplex::from_graph(&BipartiteGraph::complete(2, 2));
        let sigma = Face::new([(0, 0), (1, 0)]).unwrap();
        // Path a0 - b0 - a1 - b1 whose endpoints span the missing edge.
        let path = BalancedComplex::from_vertex_lists(
            vec![2, 2],
            [[(0, 0), (1, 0)], [(0, 1), (1, 0)], [(0, 1), (1, 1)]],
        )
        .unwrap();
        let x = Face::new([(0, 0), (1, 1)]).unwrap();
        let (k, placement) = c4.subdivide_star(&sigma, &path, &x).unwrap();
        assert_eq!(k.f_vector()[2], 6);
        assert_eq!(placement, vec![vec![0, 2], vec![2, 0]]);
        let g = k.to_graph().unwrap();
        assert!((0..3).all(|i| g.degree(super::super::graph::Vertex::a(i)) == 2));
    }

    #[test]
    fn star_subdivision_facet_counts() {
        let oct = octahedron();
        let sigma = oct.facets().iter().next().unwrap().clone();
        let s = oct.antistar(&sigma).unwrap();
        let (k, _) = oct.subdivide_star(&sigma, &s, &sigma).unwrap();
        // f_d(antistar) + f(S)·f(lk) with a single-face link.
        assert_eq!(k.f_vector()[3], 7 + 7);
        assert!(k.is_pure());

        let edge = Face::new([(0, 0), (1, 0)]).unwrap();
        let path = BalancedComplex::from_vertex_lists(
            vec![2, 2],
            [[(0, 0), (1, 0)], [(0, 1), (1, 0)], [(0, 1), (1, 1)]],
        )
        .unwrap();
        let x = Face::new([(0, 0), (1, 1)]).unwrap();
        let (k, _) = oct.subdivide_star(&edge, &path, &x).unwrap();
        let (lk, _) = oct.link(&edge).unwrap();
        let ast = oct.antistar(&edge).unwrap();
        assert_eq!(k.f_vector()[3], ast.f_vector()[3] + 3 * lk.f_vector()[1]);
        assert_eq!(k.f_vector()[3], 12);
    }

    #[test]
    fn star_subdivision_rejects_bad_input() {
        let oct = octahedron();
        let edge = Face::new([(0, 0), (1, 0)]).unwrap();
        let vertex = Face::new([(0, 0)]).unwrap();
        let k22 = BalancedComplex::from_graph(&BipartiteGraph::complete(2, 2));
        let x = Face::new([(0, 0), (1, 0)]).unwrap();
        assert!(oct.subdivide_star(&vertex, &k22, &x).is_err());
        // x is a face of K_{2,2}, not a missing one.
        assert!(oct.subdivide_star(&edge, &k22, &x).is_err());
        assert!(oct.subdivide_star(&edge, &oct, &x).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let oct = octahedron();
        let j = oct.to_json();
        assert_eq!(j.dim, 2);
        assert_eq!(j.facets[0], vec![[1, 1], [2, 1], [3, 1]]);
        assert_eq!(BalancedComplex::from_json(&j).unwrap(), oct);
        let bad = ComplexJson { dim: 1, color_sizes: vec![2, 2], facets: vec![vec![[1, 1], [1, 2]]] };
        assert!(matches!(BalancedComplex::from_json(&bad), Err(CombinatError::NotColorful(_))));
    }

    fn complex() -> impl Strategy<Value = BalancedComplex> {
        (1usize..4).prop_flat_map(|n| {
            let sizes = prop::collection::vec(1usize..4, n);
            sizes.prop_flat_map(|sizes| {
                let s2 = sizes.clone();
                let facet = sizes.iter().map(|&m| 0..m).collect::<Vec<_>>();
                prop::collection::vec(facet, 1..6).prop_map(move |fs| {
                    BalancedComplex::from_vertex_lists(
                        s2.clone(),
                        fs.into_iter().map(|f| f.into_iter().enumerate().collect::<Vec<_>>()),
                    )
                    .unwrap()
                })
            })
        })
    }

    fn even_cycle(n: usize) -> BalancedComplex {
        let edges = (0..n).flat_map(|i| [(i, i), ((i + 1) % n, i)]);
        BalancedComplex::from_graph(&BipartiteGraph::new(n, n, edges).unwrap())
    }

    fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    proptest! {
        #[test]
        fn join_f_vector_is_a_convolution(k in complex(), l in complex()) {
            prop_assert_eq!(k.join(&l).f_vector(), convolve(&k.f_vector(), &l.f_vector()));
        }

        #[test]
        fn facet_ridge_graph_is_regular_on_closed_pseudomanifolds(factors in prop::collection::vec(1usize..5, 1..4)) {
            // Joins of 0-spheres and even cycles: every ridge lies in exactly
            // two facets, so each facet meets one neighbour per ridge.
            let k = factors.iter().fold(BalancedComplex::empty_face(vec![]), |acc, &n| {
                let factor = if n == 1 { points(2) } else { even_cycle(n) };
                acc.join(&factor)
            });
            let fr = k.facet_ridge_graph().unwrap();
            let d1 = k.n_colors();
            for i in 0..fr.graph.a_size() {
                prop_assert_eq!(fr.graph.degree(super::super::graph::Vertex::a(i)), d1);
            }
            for j in 0..fr.graph.b_size() {
                prop_assert_eq!(fr.graph.degree(super::super::graph::Vertex::b(j)), d1);
            }
        }

        #[test]
        fn antistar_removes_exactly_the_star(k in complex(), pick in 0usize..100) {
            let faces: Vec<Face> = k.faces().into_iter().filter(|f| !f.is_empty()).collect();
            let sigma = &faces[pick % faces.len()];
            let ast = k.antistar(sigma).unwrap();
            let expected: BTreeSet<Face> = k.faces().into_iter().filter(|f| !sigma.is_subset(f)).collect();
            prop_assert_eq!(ast.faces(), expected);
        }
    }
}
