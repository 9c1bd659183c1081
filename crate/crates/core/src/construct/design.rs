//! Colorings of complete hosts from clique decompositions.
//!
//! Given cliques of order `n - 1` covering every `k`-subset exactly once, the
//! cliques are grouped into classes whose members share at most `k - 2`
//! vertices. Each `k`-set takes the class of its clique, so every tight
//! component of a color lies inside one clique and has fewer than `n`
//! vertices.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::decomp::greedy_matching_decomposition;
use crate::hypercore::{complete_hypergraph, subsets_of, Color, EdgeColoring, Hypergraph, PathSpec, Target, Vertex};

use super::{trace_json, ConstructError, ConstructOutput, ConstructParams, Construction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignInput {
    #[serde(rename = "N")]
    pub n: usize,
    pub clique_order: usize,
    pub cliques: Vec<Vec<Vertex>>,
    /// Optional grouping of clique indices into classes, used first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<Vec<Vec<usize>>>,
}

impl DesignInput {
    /// Checks that the cliques cover every `k`-subset of `[N]` exactly once.
    pub fn validate(&self, k: usize) -> Result<(), ConstructError> {
        if k < 2 || self.clique_order < k {
            return Err(ConstructError::Design(format!(
                "need 2 <= k <= clique order, got k={k}, clique order {}",
                self.clique_order
            )));
        }
        let mut seen: HashMap<Vec<Vertex>, usize> = HashMap::new();
        for (i, c) in self.cliques.iter().enumerate() {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != self.clique_order {
                return Err(ConstructError::Design(format!("clique {i} does not have {} distinct vertices", self.clique_order)));
            }
            if let Some(&v) = c.iter().find(|&&v| v as usize >= self.n) {
                return Err(ConstructError::Design(format!("clique {i} has vertex {v} outside [0, {})", self.n)));
            }
            for s in subsets_of(&c, k) {
                if let Some(j) = seen.insert(s.clone(), i) {
                    return Err(ConstructError::Design(format!("{s:?} lies in cliques {j} and {i}")));
                }
            }
        }
        let total = crate::bounds::binomial(self.n, k);
        if num::BigInt::from(seen.len()) != total {
            return Err(ConstructError::Design(format!("cliques cover {} of the {total} {k}-subsets", seen.len())));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DesignTrace {
    /// Clique indices of each color.
    pub classes: Vec<Vec<usize>>,
}

/// `K_N^{(k)}` colored by the matching classes of the clique design; avoids
/// the tight path on `clique_order + 1` vertices.
pub fn design_coloring(input: &DesignInput, k: usize) -> Result<(Hypergraph, EdgeColoring, DesignTrace), ConstructError> {
    input.validate(k)?;
    // auxiliary hypergraph: vertices are (k-1)-subsets, one edge per clique
    let mut ids: BTreeMap<Vec<Vertex>, Vertex> = BTreeMap::new();
    let mut aux_edges = Vec::with_capacity(input.cliques.len());
    for c in &input.cliques {
        let mut c = c.clone();
        c.sort_unstable();
        let e: Vec<Vertex> = subsets_of(&c, k - 1)
            .into_iter()
            .map(|s| {
                let next = ids.len() as Vertex;
                *ids.entry(s).or_insert(next)
            })
            .collect();
        aux_edges.push(e);
    }
    let width = aux_edges.first().map_or(1, Vec::len);
    let aux = Hypergraph::new(width, ids.len(), aux_edges.clone())?;
    let clique_of_edge: Vec<usize> = {
        let mut v = vec![0; aux_edges.len()];
        for (i, e) in aux_edges.iter().enumerate() {
            let mut e = e.clone();
            e.sort_unstable();
            v[aux.find_edge(&e).expect("edge present")] = i;
        }
        v
    };
    let mut edge_of_clique = vec![0; clique_of_edge.len()];
    for (e, &c) in clique_of_edge.iter().enumerate() {
        edge_of_clique[c] = e;
    }
    let hint: Option<Vec<Vec<usize>>> = input
        .resolution
        .as_ref()
        .map(|res| {
            res.iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|&c| edge_of_clique.get(c).copied().ok_or_else(|| ConstructError::Design(format!("resolution names clique {c}"))))
                        .collect()
                })
                .collect::<Result<_, _>>()
        })
        .transpose()?;
    let matchings = greedy_matching_decomposition(&aux, hint.as_deref())?;
    let classes: Vec<Vec<usize>> = matchings
        .iter()
        .map(|m| {
            let mut cl: Vec<usize> = m.iter().map(|&e| clique_of_edge[e]).collect();
            cl.sort_unstable();
            cl
        })
        .collect();

    let mut color_of_clique = vec![0 as Color; input.cliques.len()];
    for (c, cl) in classes.iter().enumerate() {
        for &i in cl {
            color_of_clique[i] = c as Color;
        }
    }
    let mut clique_of_set: HashMap<Vec<Vertex>, usize> = HashMap::new();
    for (i, c) in input.cliques.iter().enumerate() {
        let mut c = c.clone();
        c.sort_unstable();
        for s in subsets_of(&c, k) {
            clique_of_set.insert(s, i);
        }
    }
    let host = complete_hypergraph(input.n, k)?;
    let colors = host.edges().iter().map(|e| color_of_clique[clique_of_set[e]]).collect();
    Ok((host, EdgeColoring::new(colors), DesignTrace { classes }))
}

pub struct DesignConstruction;

impl Construction for DesignConstruction {
    fn name(&self) -> &'static str {
        "design"
    }

    fn summary(&self) -> &'static str {
        "complete host colored by matching classes of a clique decomposition"
    }

    fn build(&self, p: &ConstructParams) -> Result<ConstructOutput, ConstructError> {
        let input = p.design.as_ref().ok_or(ConstructError::Missing("fixture or --design"))?;
        let k = p.k.unwrap_or(2);
        let (host, coloring, trace) = design_coloring(input, k)?;
        let spec = PathSpec::new(k, k - 1, input.clique_order + 1)?;
        Ok(ConstructOutput {
            construction: self.name(),
            colors_used: coloring.num_colors(),
            guarantee: format!("no monochromatic {spec}; {} classes", trace.classes.len()),
            trace: trace_json(&trace),
            host,
            coloring,
            target: Target::Path(spec),
        })
    }
}
