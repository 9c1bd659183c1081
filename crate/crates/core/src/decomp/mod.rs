//! Decomposition engines: forests, star forests, bounded monochromatic
//! components, digraph colorings and matchings.

mod arboricity;
mod component;
mod digraph;
mod matching;
mod star;

pub use arboricity::{arboricity_decompose, is_forest, ForestDecomposition};
pub use component::{
    bounded_component_coloring, component_cap, component_color_count, monochromatic_components, ComponentColoring,
    DEFAULT_REPAIR_BUDGET,
};
pub use digraph::{digraph_square_coloring, is_proper, Digraph};
pub use matching::{check_codegree, greedy_matching_decomposition};
pub use star::{is_star_forest, star_forest_split};

use thiserror::Error;

use crate::hypercore::{Hypergraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("expected a graph (2-uniform), got a {0}-graph")]
    NotAGraph(usize),
    #[error("edge set contains a cycle")]
    NotAForest,
    #[error("largest monochromatic component has {max_component} vertices, cap is {cap}")]
    ComponentBudget { max_component: usize, cap: usize },
    #[error("vertices {0} and {1} share more than one edge")]
    Codegree(Vertex, Vertex),
    #[error("bad resolution hint: {0}")]
    BadHint(String),
    #[error("bad arc ({0}, {1})")]
    BadArc(usize, usize),
}

pub(crate) fn require_graph(g: &Hypergraph) -> Result<(), DecompError> {
    if g.uniformity() != 2 {
        return Err(DecompError::NotAGraph(g.uniformity()));
    }
    Ok(())
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
