//! Layered-degree coloring for short paths.
//!
//! `B_1 = H` and `B_j` holds the `t_j`-sets lying in more than `r` members of
//! `B_{j-1}`. Two edges meeting in `ell` vertices conflict when some
//! `t_{j+1}`-subset `S` of their intersection is outside `B_{j+1}` while
//! `S` plus the new part of the second edge is in `B_j`. Every copy of the
//! `(m+1)`-edge path has a conflicting consecutive pair, so a proper coloring
//! of the conflict digraph avoids it.

use std::collections::{BTreeMap, BTreeSet};

use num::BigInt;
use serde::Serialize;

use crate::bounds::combinatorial_constants;
use crate::decomp::{digraph_square_coloring, Digraph};
use crate::hypercore::{sorted_intersection_len, subsets_of, EdgeColoring, Hypergraph, PathSpec, Target, Vertex};

use super::{trace_json, ConstructError, ConstructOutput, ConstructParams, Construction};

#[derive(Clone, Debug, Serialize)]
pub struct HierarchyTrace {
    /// `t_1..t_{m+1}`.
    pub t: Vec<usize>,
    /// `B_1..B_{m+1}`; a 0-uniform layer is a trivial hypergraph.
    pub layers: Vec<Hypergraph>,
    /// Arcs `(e, e')` of the conflict digraph, by edge index.
    pub arcs: Vec<(usize, usize)>,
    pub max_out_degree: usize,
    pub colors_used: usize,
    /// `f(k, ell, m)` and `g(k, ell, m)` in decimal.
    pub f: String,
    pub g: String,
}

impl HierarchyTrace {
    /// Whether the top layer is empty (for a 0-uniform layer: the empty set is
    /// not in it).
    pub fn top_layer_empty(&self) -> bool {
        let top = self.layers.last().expect("at least two layers");
        top.edge_count() == 0 && !top.has_null_edge()
    }
}

fn layer_graph(t: usize, n: usize, sets: &BTreeSet<Vec<Vertex>>) -> Hypergraph {
    if t == 0 {
        Hypergraph::trivial(n, !sets.is_empty())
    } else {
        Hypergraph::new(t, n, sets.iter().cloned()).expect("subsets of edges are valid")
    }
}

/// Colors `h` with at most `2 r f(k, ell, m) + 1` colors so that no
/// `P^{(k, ell)}` with `m + 1` edges is monochromatic. Requires
/// `|h| g(k, ell, m) <= r^m`.
pub fn hierarchy_coloring(h: &Hypergraph, r: usize, ell: usize, m: usize) -> Result<(EdgeColoring, HierarchyTrace), ConstructError> {
    let k = h.uniformity();
    let consts = combinatorial_constants(k, ell, m)?;
    if r == 0 {
        return Err(ConstructError::Precondition("r must be positive".into()));
    }
    let lhs = BigInt::from(h.edge_count()) * &consts.g;
    let rhs = num::pow(BigInt::from(r), m);
    if lhs > rhs {
        return Err(ConstructError::Precondition(format!(
            "|H| = {} exceeds r^m / g = {rhs}/{}",
            h.edge_count(),
            consts.g
        )));
    }
    let t = consts.t.clone();
    let n = h.vertex_count();

    let mut layers: Vec<BTreeSet<Vec<Vertex>>> = vec![h.edges().iter().cloned().collect()];
    for j in 1..=m {
        let mut deg: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
        for x in &layers[j - 1] {
            for s in subsets_of(x, t[j]) {
                *deg.entry(s).or_default() += 1;
            }
        }
        layers.push(deg.into_iter().filter(|&(_, d)| d > r).map(|(s, _)| s).collect());
    }

    let mut arcs = Vec::new();
    for (a, e) in h.edges().iter().enumerate() {
        for (b, f) in h.edges().iter().enumerate() {
            if a == b || sorted_intersection_len(e, f) != ell {
                continue;
            }
            let common: Vec<Vertex> = e.iter().copied().filter(|v| f.binary_search(v).is_ok()).collect();
            let fresh: Vec<Vertex> = f.iter().copied().filter(|v| e.binary_search(v).is_err()).collect();
            let conflict = (1..=m).any(|j| {
                subsets_of(&common, t[j]).into_iter().any(|s| {
                    if layers[j].contains(&s) {
                        return false;
                    }
                    let mut u = s;
                    u.extend_from_slice(&fresh);
                    u.sort_unstable();
                    layers[j - 1].contains(&u)
                })
            });
            if conflict {
                arcs.push((a, b));
            }
        }
    }

    let d = Digraph::new(h.edge_count(), arcs.iter().copied())?;
    let colors = digraph_square_coloring(&d);
    let coloring = EdgeColoring::new(colors);
    let trace = HierarchyTrace {
        layers: layers.iter().zip(&t).map(|(s, &tj)| layer_graph(tj, n, s)).collect(),
        t,
        max_out_degree: d.max_out_degree(),
        colors_used: coloring.distinct_colors(),
        arcs,
        f: consts.f.to_string(),
        g: consts.g.to_string(),
    };
    Ok((coloring, trace))
}

pub struct HierarchyConstruction;

impl Construction for HierarchyConstruction {
    fn name(&self) -> &'static str {
        "hierarchy"
    }

    fn summary(&self) -> &'static str {
        "layered-degree conflict digraph, properly colored; avoids the (m+1)-edge path"
    }

    fn build(&self, p: &ConstructParams) -> Result<ConstructOutput, ConstructError> {
        let host = p.host()?.clone();
        let k = host.uniformity();
        let ell = ConstructParams::need(p.ell, "l")?;
        let m = ConstructParams::need(p.m, "m")?;
        let (coloring, trace) = hierarchy_coloring(&host, p.r, ell, m)?;
        let spec = PathSpec::with_edges(k, ell, m + 1)?;
        Ok(ConstructOutput {
            construction: self.name(),
            colors_used: coloring.num_colors(),
            guarantee: format!(
                "no monochromatic {spec}; {} colors, bound 2 r f + 1 with r = {}, f = {}",
                coloring.num_colors(),
                p.r,
                trace.f
            ),
            trace: trace_json(&trace),
            host,
            coloring,
            target: Target::Path(spec),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monosearch::contains_mono_path;

    #[test]
    fn disjoint_edges() {
        let h = Hypergraph::new(2, 6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let (c, tr) = hierarchy_coloring(&h, 3, 1, 1).unwrap();
        assert!(c.num_colors() <= 13);
        assert!(tr.top_layer_empty());
        let spec = PathSpec::with_edges(2, 1, 2).unwrap();
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let (c, tr) = hierarchy_coloring(&h, 2, 2, 1).unwrap();
        assert_eq!(c.num_colors(), 1);
        assert!(tr.arcs.is_empty());
    }

    #[test]
    fn star_conflicts() {
        // three edges through vertex 0 with r = 3: {0} has degree 3, not above r
        let h = Hypergraph::new(2, 4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        let (c, tr) = hierarchy_coloring(&h, 3, 1, 1).unwrap();
        assert!(tr.top_layer_empty());
        assert_eq!(tr.arcs.len(), 6);
        assert_eq!(c.distinct_colors(), 3);
    }

    #[test]
    fn tight_two_layers() {
        let h = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]).unwrap();
        let (c, tr) = hierarchy_coloring(&h, 4, 2, 2).unwrap();
        assert!(tr.top_layer_empty());
        assert!(tr.max_out_degree <= 4 * 12);
        let spec = PathSpec::with_edges(3, 2, 3).unwrap();
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }

    #[test]
    fn too_many_edges() {
        let h = Hypergraph::new(2, 8, (1..8).map(|v| vec![0, v])).unwrap();
        assert!(matches!(hierarchy_coloring(&h, 2, 1, 1), Err(ConstructError::Precondition(_))));
    }
}
