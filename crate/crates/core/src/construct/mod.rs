//! Avoiding colorings built by the constructions of the lower-bound proofs.
//!
//! Each construction implements [`Construction`] and is looked up by name in
//! [`registry`]. Constructions that color sub-instances recursively take
//! [`ColoringOracle`]s, which are registered the same way.

mod afl;
mod composite;
mod design;
mod fixtures;
mod hierarchy;
mod loose;
mod oracle;
mod star_arb;

pub use afl::{afl_coloring, afl_part_of, AflConstruction};
pub use composite::{composite_coloring, composite_guaranteed_n, link_violation, CompositeConstruction, CompositeTrace};
pub use design::{design_coloring, DesignConstruction, DesignInput, DesignTrace};
pub use fixtures::{fixture, fixture_names};
pub use hierarchy::{hierarchy_coloring, HierarchyConstruction, HierarchyTrace};
pub use loose::{loose_guaranteed_n, loose_path_coloring, LooseConstruction, LooseTrace};
pub use oracle::{oracle, oracle_names, AflOracle, ColoringOracle, ExhaustiveOracle, OracleError};
pub use star_arb::{star_arboricity_coloring, StarArbConstruction, StarArbTrace};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::BoundsError;
use crate::decomp::DecompError;
use crate::hypercore::{EdgeColoring, Hypergraph, HypergraphError, Target};
use crate::monosearch::{SearchError, SearchLimits};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("missing parameter --{0}")]
    Missing(&'static str),
    #[error("{stage} oracle failed: {source}")]
    Oracle {
        stage: &'static str,
        #[source]
        source: OracleError,
    },
    #[error("arboricity {arboricity} needs {} star forests, more than r = {r}", 2 * .arboricity)]
    StarArboricity {
        arboricity: usize,
        r: usize,
        /// Edge indices of a subgraph forcing the arboricity.
        witness: Vec<usize>,
    },
    #[error("invalid design: {0}")]
    Design(String),
    #[error("unknown construction {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// Inputs shared by all constructions; each reads the fields it needs.
#[derive(Clone, Debug)]
pub struct ConstructParams {
    pub host: Option<Hypergraph>,
    pub r: usize,
    pub k: Option<usize>,
    pub ell: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub n_prime: Option<usize>,
    pub d_hat: Option<usize>,
    pub design: Option<DesignInput>,
    pub base_oracle: String,
    pub link_oracle: String,
    pub seed: u64,
    pub limits: SearchLimits,
}

impl Default for ConstructParams {
    fn default() -> Self {
        Self {
            host: None,
            r: 2,
            k: None,
            ell: None,
            n: None,
            m: None,
            n_prime: None,
            d_hat: None,
            design: None,
            base_oracle: "afl".into(),
            link_oracle: "exhaustive".into(),
            seed: 0,
            limits: SearchLimits::default(),
        }
    }
}

impl ConstructParams {
    fn host(&self) -> Result<&Hypergraph, ConstructError> {
        self.host.as_ref().ok_or(ConstructError::Missing("input"))
    }

    fn need(v: Option<usize>, name: &'static str) -> Result<usize, ConstructError> {
        v.ok_or(ConstructError::Missing(name))
    }

    fn oracle(&self, name: &str) -> Result<Box<dyn ColoringOracle>, ConstructError> {
        oracle(name, self.limits).ok_or_else(|| ConstructError::Precondition(format!("unknown oracle {name:?}")))
    }
}

/// A coloring together with the target it provably avoids.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructOutput {
    pub construction: &'static str,
    pub host: Hypergraph,
    pub coloring: EdgeColoring,
    pub target: Target,
    pub colors_used: usize,
    pub guarantee: String,
    pub trace: serde_json::Value,
}

pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn build(&self, params: &ConstructParams) -> Result<ConstructOutput, ConstructError>;
}

/// All constructions, in a fixed order.
pub fn registry() -> Vec<Box<dyn Construction>> {
    vec![
        Box::new(AflConstruction),
        Box::new(HierarchyConstruction),
        Box::new(CompositeConstruction),
        Box::new(StarArbConstruction),
        Box::new(LooseConstruction),
        Box::new(DesignConstruction),
    ]
}

pub fn construction(name: &str) -> Result<Box<dyn Construction>, ConstructError> {
    registry()
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| ConstructError::Unknown(name.to_string()))
}

pub fn construction_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

fn trace_json<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("trace serializes")
}

/// The hypergraph spanned by the edges `ids`, with vertices renumbered densely
/// in increasing order, and for each of its edges the original edge index.
pub(crate) fn sub_instance(h: &Hypergraph, ids: &[usize]) -> (Hypergraph, Vec<usize>) {
    let mut verts: Vec<u32> = ids.iter().flat_map(|&i| h.edge(i).iter().copied()).collect();
    verts.sort_unstable();
    verts.dedup();
    let rank = |v: u32| verts.binary_search(&v).expect("vertex present") as u32;
    let edges: Vec<Vec<u32>> = ids.iter().map(|&i| h.edge(i).iter().map(|&v| rank(v)).collect()).collect();
    let sub = Hypergraph::new(h.uniformity(), verts.len(), edges.clone()).expect("edges of a valid host");
    let mut orig = vec![0; ids.len()];
    for (e, &i) in edges.iter().zip(ids) {
        orig[sub.find_edge(e).expect("edge present")] = i;
    }
    (sub, orig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names() {
        assert_eq!(construction_names(), ["afl", "hierarchy", "composite", "star-arb", "loose", "design"]);
        assert!(construction("nope").is_err());
    }

    #[test]
    fn sub_instance_maps_back() {
        let h = Hypergraph::new(2, 6, vec![vec![0, 5], vec![1, 2], vec![2, 5]]).unwrap();
        let (sub, orig) = sub_instance(&h, &[0, 2]);
        assert_eq!(sub.vertex_count(), 3);
        for (j, &i) in orig.iter().enumerate() {
            assert_eq!(sub.edge(j).len(), h.edge(i).len());
        }
        assert_eq!(orig, vec![0, 2]);
    }
}
