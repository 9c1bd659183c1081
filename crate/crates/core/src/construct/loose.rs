//! Overlap at most half: base colors on the high-degree part and a bounded
//! monochromatic component coloring of the edges at low-degree vertices.

use serde::Serialize;

use crate::decomp::{bounded_component_coloring, DEFAULT_REPAIR_BUDGET};
use crate::hypercore::{sorted_intersection_len, Color, EdgeColoring, Hypergraph, PathSpec, Target, Vertex};

use super::{sub_instance, trace_json, ColoringOracle, ConstructError, ConstructOutput, ConstructParams, Construction};

#[derive(Clone, Debug, Serialize)]
pub struct LooseTrace {
    /// Vertices with `k * deg < r`.
    pub low: Vec<Vertex>,
    /// `floor((2r - 2) / 3)` colors for the edges avoiding `low`.
    pub base_colors: usize,
    pub base_budget: Option<usize>,
    /// Edges meeting `low`, in index order; the auxiliary graph's vertices.
    pub low_edges: Vec<usize>,
    pub aux_max_degree: usize,
    pub fresh_colors: usize,
    pub max_component: usize,
    /// `12 r^2`.
    pub component_bound: usize,
}

/// Smallest valid `n > 12 r^2 (k - ell) + ell`.
pub fn loose_guaranteed_n(r: usize, k: usize, ell: usize) -> usize {
    let s = k - ell;
    let floor = 12 * r * r * s + ell + 1;
    floor + (s - (floor - ell) % s) % s
}

/// Colors `h` with at most `r` colors avoiding a monochromatic `spec`, for
/// `1 <= ell <= k/2` and `n > 12 r^2 (k - ell) + ell`.
///
/// Requires `|E| k^2 < r R_b` where `R_b` is the base oracle's vertex budget
/// with `b = floor((2r-2)/3)` colors, and fails when the auxiliary graph has
/// maximum degree `r` or more.
pub fn loose_path_coloring(
    h: &Hypergraph,
    r: usize,
    spec: PathSpec,
    base: &dyn ColoringOracle,
    seed: u64,
) -> Result<(EdgeColoring, LooseTrace), ConstructError> {
    let (k, ell, n) = (spec.k(), spec.ell(), spec.n());
    if h.uniformity() != k {
        return Err(ConstructError::Precondition(format!("host is {}-uniform, path is {k}-uniform", h.uniformity())));
    }
    if ell == 0 || 2 * ell > k {
        return Err(ConstructError::Precondition(format!("need 1 <= ell <= k/2, got k={k}, ell={ell}")));
    }
    let threshold = 12 * r * r * (k - ell) + ell;
    if n <= threshold {
        return Err(ConstructError::Precondition(format!("need n > 12 r^2 (k-ell) + ell = {threshold}, got {n}")));
    }
    let b = (2 * r).saturating_sub(2) / 3;
    let target = Target::Path(spec);

    let deg = h.degrees();
    let low: Vec<Vertex> = (0..h.vertex_count() as Vertex).filter(|&v| deg[v as usize] > 0 && k * deg[v as usize] < r).collect();
    let mut in_low = vec![false; h.vertex_count()];
    for &v in &low {
        in_low[v as usize] = true;
    }
    let (low_edges, rest): (Vec<usize>, Vec<usize>) = (0..h.edge_count()).partition(|&i| h.edge(i).iter().any(|&v| in_low[v as usize]));

    let mut colors = vec![0 as Color; h.edge_count()];
    let mut base_budget = None;
    if b == 0 {
        if !rest.is_empty() {
            return Err(ConstructError::Precondition(format!(
                "r = {r} leaves no base colors but {} edges avoid the low-degree vertices",
                rest.len()
            )));
        }
    } else {
        let budget = base
            .vertex_budget(b, &target)
            .ok_or_else(|| ConstructError::Precondition(format!("base oracle {} has no vertex budget", base.name())))?;
        base_budget = Some(budget);
        if h.edge_count() * k * k >= r * budget {
            return Err(ConstructError::Precondition(format!(
                "|E| k^2 = {} is not below r R_b = {r} * {budget}",
                h.edge_count() * k * k
            )));
        }
        if !rest.is_empty() {
            let (sub, orig) = sub_instance(h, &rest);
            let c = base.color(&sub, b, &target, &[]).map_err(|source| ConstructError::Oracle { stage: "base", source })?;
            for (j, &i) in orig.iter().enumerate() {
                colors[i] = c.color(j);
            }
        }
    }

    let mut aux_edges = Vec::new();
    for (x, &a) in low_edges.iter().enumerate() {
        for (y, &c) in low_edges.iter().enumerate().skip(x + 1) {
            if sorted_intersection_len(h.edge(a), h.edge(c)) == ell {
                aux_edges.push(vec![x as Vertex, y as Vertex]);
            }
        }
    }
    let aux = Hypergraph::new(2, low_edges.len(), aux_edges)?;
    let aux_max_degree = aux.degrees().into_iter().max().unwrap_or(0);
    if aux_max_degree >= r {
        return Err(ConstructError::Precondition(format!(
            "auxiliary graph on the {} low edges has maximum degree {aux_max_degree} >= r = {r}",
            low_edges.len()
        )));
    }
    let (fresh_colors, max_component) = if low_edges.is_empty() {
        (0, 0)
    } else {
        let cc = bounded_component_coloring(&aux, seed, DEFAULT_REPAIR_BUDGET)?;
        for (x, &i) in low_edges.iter().enumerate() {
            colors[i] = (b + cc.colors[x] as usize) as Color;
        }
        (cc.num_colors, cc.max_component)
    };
    if b + fresh_colors > r {
        return Err(ConstructError::Precondition(format!("{b} base plus {fresh_colors} fresh colors exceed r = {r}")));
    }

    let trace = LooseTrace {
        low,
        base_colors: b,
        base_budget,
        low_edges,
        aux_max_degree,
        fresh_colors,
        max_component,
        component_bound: 12 * r * r,
    };
    Ok((EdgeColoring::new(colors), trace))
}

pub struct LooseConstruction;

impl Construction for LooseConstruction {
    fn name(&self) -> &'static str {
        "loose"
    }

    fn summary(&self) -> &'static str {
        "base colors away from low-degree vertices, bounded-component coloring at them"
    }

    fn build(&self, p: &ConstructParams) -> Result<ConstructOutput, ConstructError> {
        let host = p.host()?.clone();
        let k = host.uniformity();
        let ell = ConstructParams::need(p.ell, "l")?;
        if ell == 0 || ell >= k {
            return Err(ConstructError::Precondition(format!("need 1 <= ell < k, got k={k}, ell={ell}")));
        }
        let n = p.n.unwrap_or_else(|| loose_guaranteed_n(p.r, k, ell));
        let spec = PathSpec::new(k, ell, n)?;
        let base = p.oracle(&p.base_oracle)?;
        let (coloring, trace) = loose_path_coloring(&host, p.r, spec, base.as_ref(), p.seed)?;
        Ok(ConstructOutput {
            construction: self.name(),
            colors_used: coloring.num_colors(),
            guarantee: format!(
                "no monochromatic {spec}; {} base + {} fresh colors, largest component {}",
                trace.base_colors, trace.fresh_colors, trace.max_component
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
    use crate::construct::AflOracle;
    use crate::monosearch::contains_mono_path;

    #[test]
    fn guaranteed_orders() {
        assert_eq!(loose_guaranteed_n(5, 4, 2), 604);
        assert_eq!(loose_guaranteed_n(2, 4, 1), 12 * 4 * 3 + 1 + 3);
    }

    #[test]
    fn empty_host() {
        let h = Hypergraph::empty(4, 0);
        let spec = PathSpec::new(4, 2, 604).unwrap();
        let (c, tr) = loose_path_coloring(&h, 5, spec, &AflOracle, 0).unwrap();
        assert!(c.is_empty());
        assert_eq!(tr.base_colors, 2);
    }

    #[test]
    fn two_colors_routes_through_components() {
        // r = 2, k = 4: low means degree 0, so any edge makes the base part nonempty
        let h = Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let spec = PathSpec::new(4, 1, loose_guaranteed_n(2, 4, 1)).unwrap();
        assert!(matches!(loose_path_coloring(&h, 2, spec, &AflOracle, 0), Err(ConstructError::Precondition(_))));
        assert!(loose_path_coloring(&Hypergraph::empty(4, 4), 2, spec, &AflOracle, 0).is_ok());
    }

    #[test]
    fn sparse_host() {
        // disjoint pairs of edges sharing two vertices; every vertex has degree <= 2
        let edges: Vec<Vec<Vertex>> = (0..20u32)
            .flat_map(|i| [vec![6 * i, 6 * i + 1, 6 * i + 2, 6 * i + 3], vec![6 * i, 6 * i + 1, 6 * i + 4, 6 * i + 5]])
            .collect();
        let h = Hypergraph::new(4, 120, edges).unwrap();
        let spec = PathSpec::new(4, 2, 604).unwrap();
        let (c, tr) = loose_path_coloring(&h, 5, spec, &AflOracle, 0).unwrap();
        assert!(c.num_colors() <= 5);
        assert!(tr.aux_max_degree < 5);
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }
}
