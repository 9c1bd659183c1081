//! Low-degree vertices first: the high-degree part is colored by a base
//! oracle, and the edges at low-degree vertices are colored link by link so
//! that no low-degree vertex sits deep inside a monochromatic path.

use serde::Serialize;

use crate::bounds::link_size_ramsey_default;
use crate::hypercore::{strong_independent_partition, Color, EdgeColoring, Hypergraph, PathSpec, Target, Vertex};
use crate::monosearch::find_path_in;

use super::{sub_instance, trace_json, ColoringOracle, ConstructError, ConstructOutput, ConstructParams, Construction};

#[derive(Clone, Debug, Serialize)]
pub struct CompositeTrace {
    pub d_hat: usize,
    /// Vertex budget `R` of the base oracle.
    pub base_budget: usize,
    /// Non-isolated vertices of degree below `d_hat`.
    pub low: Vec<Vertex>,
    /// `S_1..S_c`, each meeting every edge at most once.
    pub parts: Vec<Vec<Vertex>>,
    /// `E_1..E_c`: edges meeting `S_i` but no earlier part.
    pub edge_classes: Vec<Vec<usize>>,
    /// Edges avoiding `S`, colored by the base oracle.
    pub base_edges: Vec<usize>,
    /// Link path `P_q^{(k-1, ell-1)}`.
    pub link_target: String,
    /// True when every low vertex's whole link avoids the link path; false
    /// when some vertex only got its `E_i` part of the link colored.
    pub full_link: bool,
    /// `pinned` (per vertex, earlier colors kept), `joint` (one search over
    /// all edges at low vertices) or `class-only` (per vertex, own class).
    pub link_strategy: &'static str,
    pub guaranteed_n: usize,
}

/// Smallest valid path order `p` such that the windows lying strictly
/// between the first and last `ell + c (k - 1)` positions span at least
/// `n_prime` vertices.
pub fn composite_guaranteed_n(k: usize, ell: usize, n_prime: usize, c: usize) -> usize {
    let s = k - ell;
    let margin = ell + c * (k - 1);
    let first = margin.div_ceil(s);
    let mut p = n_prime.max(k);
    p += (s - (p - ell) % s) % s;
    loop {
        if p >= margin + k {
            let last = (p - margin - k) / s;
            if last >= first && ell + (last - first + 1) * s >= n_prime {
                return p;
            }
        }
        p += s;
    }
}

/// Link path `P_q^{(k-1, ell-1)}` with `q = ell - 1 + floor(k/(k-ell)) (k-ell)`.
fn link_spec(k: usize, ell: usize) -> Result<PathSpec, ConstructError> {
    let s = k - ell;
    Ok(PathSpec::new(k - 1, ell - 1, ell - 1 + (k / s) * s)?)
}

/// Link of `v` over the edges `ids` (all containing `v`), with the map back to
/// edge indices of `h`.
fn link_of(h: &Hypergraph, v: Vertex, ids: &[usize]) -> (Hypergraph, Vec<usize>) {
    let residues: Vec<Vec<Vertex>> = ids.iter().map(|&i| h.edge(i).iter().copied().filter(|&u| u != v).collect()).collect();
    let link = Hypergraph::new(h.uniformity() - 1, h.vertex_count(), residues.clone()).expect("residues of distinct edges");
    let mut orig = vec![0; ids.len()];
    for (res, &i) in residues.iter().zip(ids) {
        orig[link.find_edge(res).expect("residue present")] = i;
    }
    (link, orig)
}

/// Colors `h` with `r` colors so that no monochromatic `P^{(k, ell)}` reaches
/// the guaranteed order reported in the trace.
///
/// `base` must color any host on fewer than `R` vertices avoiding
/// `P_{n_prime}` and `link` any `(k-1)`-graph with fewer than `d_hat` edges
/// avoiding the link path. Requires `|E| k < d_hat R`.
pub fn composite_coloring(
    h: &Hypergraph,
    r: usize,
    ell: usize,
    n_prime: usize,
    d_hat: usize,
    base: &dyn ColoringOracle,
    link: &dyn ColoringOracle,
) -> Result<(EdgeColoring, CompositeTrace), ConstructError> {
    let k = h.uniformity();
    if ell == 0 || ell >= k {
        return Err(ConstructError::Precondition(format!("need 1 <= ell < k, got k={k}, ell={ell}")));
    }
    let outer = Target::Path(PathSpec::new(k, ell, n_prime)?);
    let lspec = link_spec(k, ell)?;
    let ltarget = Target::Path(lspec);
    let budget = base
        .vertex_budget(r, &outer)
        .ok_or_else(|| ConstructError::Precondition(format!("base oracle {} has no vertex budget", base.name())))?;
    if h.edge_count() * k >= d_hat * budget {
        return Err(ConstructError::Precondition(format!(
            "|E| k = {} is not below d_hat R = {d_hat} * {budget}",
            h.edge_count() * k
        )));
    }

    let deg = h.degrees();
    let low: Vec<Vertex> = (0..h.vertex_count() as Vertex).filter(|&v| deg[v as usize] > 0 && deg[v as usize] < d_hat).collect();
    let mut in_low = vec![false; h.vertex_count()];
    for &v in &low {
        in_low[v as usize] = true;
    }
    let mut colors: Vec<Option<Color>> = vec![None; h.edge_count()];

    let base_edges: Vec<usize> = (0..h.edge_count()).filter(|&i| h.edge(i).iter().all(|&v| !in_low[v as usize])).collect();
    if !base_edges.is_empty() {
        let (sub, orig) = sub_instance(h, &base_edges);
        let c = base.color(&sub, r, &outer, &[]).map_err(|source| ConstructError::Oracle { stage: "base", source })?;
        for (j, &i) in orig.iter().enumerate() {
            colors[i] = Some(c.color(j));
        }
    }

    let parts = strong_independent_partition(h, &low);
    let mut part_of = vec![usize::MAX; h.vertex_count()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v as usize] = i;
        }
    }
    let mut edge_classes = vec![Vec::new(); parts.len()];
    for (i, e) in h.edges().iter().enumerate() {
        if let Some(c) = e.iter().map(|&v| part_of[v as usize]).min().filter(|&c| c != usize::MAX) {
            edge_classes[c].push(i);
        }
    }

    let incidence = h.incidence();
    let mut full_link = true;
    for part in &parts {
        for &v in part {
            let through = &incidence[v as usize];
            let (lh, orig) = link_of(h, v, through);
            let fixed: Vec<Option<Color>> = orig.iter().map(|&i| colors[i]).collect();
            let c = match link.color(&lh, r, &ltarget, &fixed) {
                Ok(c) => c,
                Err(_) => {
                    // only this vertex's own class, where nothing is pinned yet
                    full_link = false;
                    let own: Vec<usize> = through.iter().copied().filter(|&i| colors[i].is_none()).collect();
                    let (lh, orig_own) = link_of(h, v, &own);
                    let c = link.color(&lh, r, &ltarget, &[]).map_err(|source| ConstructError::Oracle { stage: "link", source })?;
                    for (j, &i) in orig_own.iter().enumerate() {
                        colors[i] = Some(c.color(j));
                    }
                    continue;
                }
            };
            for (j, &i) in orig.iter().enumerate() {
                colors[i] = Some(c.color(j));
            }
        }
    }

    let mut link_strategy = "pinned";
    if !full_link {
        let low_edges: Vec<usize> = edge_classes.iter().flatten().copied().collect();
        if let Some(joint) = joint_link_coloring(h, &low, &low_edges, r, lspec, JOINT_NODE_BUDGET) {
            for (&i, c) in low_edges.iter().zip(joint) {
                colors[i] = Some(c);
            }
            full_link = true;
            link_strategy = "joint";
        } else {
            link_strategy = "class-only";
        }
    }

    let coloring = EdgeColoring::new(colors.into_iter().map(|c| c.expect("every edge is base or meets S")).collect());
    let trace = CompositeTrace {
        link_strategy,
        d_hat,
        base_budget: budget,
        guaranteed_n: composite_guaranteed_n(k, ell, n_prime, parts.len()),
        low,
        parts,
        edge_classes,
        base_edges,
        link_target: lspec.to_string(),
        full_link,
    };
    Ok((coloring, trace))
}

/// Node budget of the joint link search.
pub const JOINT_NODE_BUDGET: u64 = 2_000_000;

/// Backtracking over `edges` (every edge through a low vertex) so that no low
/// vertex has a monochromatic link path. `None` if infeasible or over budget.
fn joint_link_coloring(h: &Hypergraph, low: &[Vertex], edges: &[usize], r: usize, lspec: PathSpec, budget: u64) -> Option<Vec<Color>> {
    let incidence = h.incidence();
    let mut slot = vec![usize::MAX; h.edge_count()];
    for (x, &i) in edges.iter().enumerate() {
        slot[i] = x;
    }
    // per low vertex: link graph and, per link edge, the slot of its edge
    let links: Vec<(Hypergraph, Vec<usize>)> = low
        .iter()
        .map(|&v| {
            let (lh, orig) = link_of(h, v, &incidence[v as usize]);
            (lh, orig.iter().map(|&i| slot[i]).collect())
        })
        .collect();
    let mut watch: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (li, (_, slots)) in links.iter().enumerate() {
        for &x in slots {
            watch[x].push(li);
        }
    }
    let mut assign: Vec<Option<Color>> = vec![None; edges.len()];
    let mut nodes = 0u64;

    fn ok(links: &[(Hypergraph, Vec<usize>)], watch: &[usize], assign: &[Option<Color>], c: Color, lspec: PathSpec) -> bool {
        watch.iter().all(|&li| {
            let (lh, slots) = &links[li];
            let ids: Vec<usize> = (0..slots.len()).filter(|&j| assign[slots[j]] == Some(c)).collect();
            find_path_in(lh, &ids, lspec).is_none()
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        x: usize,
        links: &[(Hypergraph, Vec<usize>)],
        watch: &[Vec<usize>],
        assign: &mut Vec<Option<Color>>,
        r: usize,
        lspec: PathSpec,
        nodes: &mut u64,
        budget: u64,
        used: usize,
    ) -> Option<bool> {
        if x == assign.len() {
            return Some(true);
        }
        // first-seen symmetry breaking: a new color is only opened in order
        for c in 0..r.min(used + 1) as Color {
            *nodes += 1;
            if *nodes > budget {
                return None;
            }
            assign[x] = Some(c);
            if ok(links, &watch[x], assign, c, lspec) && go(x + 1, links, watch, assign, r, lspec, nodes, budget, used.max(c as usize + 1))? {
                return Some(true);
            }
        }
        assign[x] = None;
        Some(false)
    }

    match go(0, &links, &watch, &mut assign, r, lspec, &mut nodes, budget, 0) {
        Some(true) => Some(assign.into_iter().map(|c| c.expect("assigned")).collect()),
        _ => None,
    }
}

/// Whether some low vertex has a monochromatic link path in some color.
pub fn link_violation(h: &Hypergraph, coloring: &EdgeColoring, trace: &CompositeTrace) -> Option<(Vertex, Color)> {
    let k = h.uniformity();
    let ltarget: Target = trace.link_target.parse().ok()?;
    let Target::Path(lspec) = ltarget else { return None };
    let incidence = h.incidence();
    for &v in &trace.low {
        let (lh, orig) = link_of(h, v, &incidence[v as usize]);
        debug_assert_eq!(lh.uniformity(), k - 1);
        for c in 0..coloring.num_colors() as Color {
            let ids: Vec<usize> = (0..orig.len()).filter(|&j| coloring.color(orig[j]) == c).collect();
            if find_path_in(&lh, &ids, lspec).is_some() {
                return Some((v, c));
            }
        }
    }
    None
}

pub struct CompositeConstruction;

impl Construction for CompositeConstruction {
    fn name(&self) -> &'static str {
        "composite"
    }

    fn summary(&self) -> &'static str {
        "base oracle on high-degree part, link oracle at low-degree vertices"
    }

    fn build(&self, p: &ConstructParams) -> Result<ConstructOutput, ConstructError> {
        let host = p.host()?.clone();
        let k = host.uniformity();
        let ell = ConstructParams::need(p.ell, "l")?;
        let n_prime = ConstructParams::need(p.n_prime, "n-prime")?;
        let d_hat = match p.d_hat {
            Some(d) => d,
            None => {
                let (d, _) = link_size_ramsey_default(p.r, k, ell)?;
                d.try_into().map_err(|_| ConstructError::Precondition("default d_hat too large".into()))?
            }
        };
        let base = p.oracle(&p.base_oracle)?;
        let link = p.oracle(&p.link_oracle)?;
        let (coloring, trace) = composite_coloring(&host, p.r, ell, n_prime, d_hat, base.as_ref(), link.as_ref())?;
        let spec = PathSpec::new(k, ell, trace.guaranteed_n)?;
        Ok(ConstructOutput {
            construction: self.name(),
            colors_used: coloring.num_colors(),
            guarantee: format!(
                "no monochromatic {spec}; {} parts, base avoids P_{n_prime}, full link property {}",
                trace.parts.len(),
                trace.full_link
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
    use crate::construct::{AflOracle, ExhaustiveOracle};
    use crate::monosearch::{contains_mono_path, SearchLimits};

    #[test]
    fn guaranteed_order() {
        // tight, c = 0: margin 2, windows from index 2; 8 more vertices need p = 12
        assert_eq!(composite_guaranteed_n(3, 2, 8, 0), 12);
        assert_eq!(composite_guaranteed_n(2, 1, 4, 1), 8);
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let link = ExhaustiveOracle { limits: SearchLimits::default() };
        let (c, tr) = composite_coloring(&h, 2, 2, 8, 7, &AflOracle, &link).unwrap();
        assert_eq!(c.num_colors(), 1);
        assert!(tr.full_link);
    }

    #[test]
    fn small_tight_instance() {
        let edges: Vec<Vec<Vertex>> = (0..8).map(|i| vec![i, i + 1, i + 2]).chain([vec![0, 4, 8], vec![1, 5, 9]]).collect();
        let h = Hypergraph::new(3, 10, edges).unwrap();
        let link = ExhaustiveOracle { limits: SearchLimits::default() };
        let (c, tr) = composite_coloring(&h, 2, 2, 8, 7, &AflOracle, &link).unwrap();
        assert!(tr.full_link);
        assert!(link_violation(&h, &c, &tr).is_none());
        let spec = PathSpec::new(3, 2, tr.guaranteed_n).unwrap();
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }

    #[test]
    fn edge_bound_enforced() {
        let h = crate::hypercore::complete_hypergraph(7, 3).unwrap();
        let link = ExhaustiveOracle { limits: SearchLimits::default() };
        assert!(matches!(composite_coloring(&h, 2, 2, 8, 7, &AflOracle, &link), Err(ConstructError::Precondition(_))));
    }
}
