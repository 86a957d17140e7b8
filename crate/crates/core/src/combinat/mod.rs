//! Bipartite graphs, balanced complexes, vertex orders and the structural
//! transforms between them.

pub mod complex;
pub mod graph;
pub mod order;

use thiserror::Error;

pub use complex::{BalancedComplex, CVertex, ComplexJson, Face, FacetRidgeGraph};
pub use graph::{BipartiteGraph, Edge, GraphJson, Side, Vertex, VertexMap};
pub use order::VertexOrder;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertices {0} and {1} are on different sides")]
    SideMismatch(String, String),
    #[error("cannot contract vertex {0} with itself")]
    SameVertex(String),
    #[error("identification is not injective at {0}")]
    NonInjective(String),
    #[error("{0} is not a face")]
    NotAFace(String),
    #[error("face {0} repeats a color")]
    NotColorful(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("ridge {0} lies in more than two facets")]
    NotPseudomanifold(String),
    #[error("facet adjacency graph has an odd cycle")]
    NotBipartite,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid vertex order: {0}")]
    BadOrder(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("malformed json: {0}")]
    Json(String),
}
