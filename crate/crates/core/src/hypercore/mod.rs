//! Uniform hypergraphs, path and cycle patterns, edge colorings, and the
//! structural transforms the constructions are built from.

mod coloring;
mod graph;
mod pattern;
mod transform;

pub use coloring::{Color, EdgeColoring};
pub use graph::{complete_hypergraph, k_subsets, subsets_of, Hypergraph, Vertex};
pub(crate) use graph::sorted_intersection_len;
pub use pattern::{generate_path, generate_tight_cycle, CycleSpec, PathSpec, Target, TargetRepr};
pub use transform::{
    blowup_divide, blowup_overlap, cone, core_extend, link_graph, strong_independent_partition,
    EXACT_INDEPENDENT_LIMIT,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("0-uniform hypergraphs only exist as trivial objects")]
    ZeroUniform,
    #[error("edge has {found} vertices, expected {expected}")]
    EdgeSize { expected: usize, found: usize },
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex(Vec<Vertex>),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<Vertex>),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("need at least {k} vertices, got {n}")]
    TooFewVertices { n: usize, k: usize },
    #[error("overlap ell={ell} invalid for uniformity k={k}")]
    Overlap { k: usize, ell: usize },
    #[error("malformed path: (n - ell) = {} is not divisible by (k - ell) = {}", .n - .ell, .k - .ell)]
    Divisibility { k: usize, ell: usize, n: usize },
    #[error("tight {k}-cycles need at least {} vertices, got minimum {min_length}", .k + 1)]
    CycleTooShort { k: usize, min_length: usize },
    #[error("expected a {expected}-graph, got a {found}-graph")]
    UniformityMismatch { expected: usize, found: usize },
    #[error("common core is empty: m={m} must satisfy m(k-ell) < k for k={k}, ell={ell}")]
    CoreEmpty { k: usize, ell: usize, m: usize },
    #[error("coloring has {colors} entries for {edges} edges")]
    ColoringLength { edges: usize, colors: usize },
    #[error("color {color} out of range for {r} colors")]
    ColorOutOfRange { color: u32, r: usize },
    #[error("bad target descriptor {0:?}; expected path:k,l,n or cycle_geq:k,min")]
    TargetSyntax(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}
