//! Vertex colorings with few colors and small monochromatic components.
//!
//! Local search, not a proof: Lovász-style moves first (recolor a vertex to
//! the color with fewest same-colored neighbors) until stable, then repeated
//! repair of oversized components by recoloring one of their vertices to the
//! color that leaves it in the smallest component. The result is checked
//! before it is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypercore::Hypergraph;

use super::{require_graph, DecompError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentColoring {
    pub colors: Vec<u32>,
    pub num_colors: usize,
    /// Largest monochromatic component, in vertices (verified).
    pub max_component: usize,
}

/// Color count `ceil((max_deg + 2) / 3)`.
pub fn component_color_count(max_deg: usize) -> usize {
    (max_deg + 2).div_ceil(3)
}

/// Component size cap `12 max_deg^2` (at least 1, so isolated vertices pass).
pub fn component_cap(max_deg: usize) -> usize {
    (12 * max_deg * max_deg).max(1)
}

pub const DEFAULT_REPAIR_BUDGET: usize = 100_000;

fn adjacency(g: &Hypergraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        adj[e[0] as usize].push(e[1] as usize);
        adj[e[1] as usize].push(e[0] as usize);
    }
    adj
}

/// Size of `v`'s component in the subgraph induced by color `c`, treating `v`
/// as colored `c`.
fn component_size_as(adj: &[Vec<usize>], colors: &[u32], v: usize, c: u32) -> usize {
    let mut seen = vec![false; adj.len()];
    seen[v] = true;
    let mut stack = vec![v];
    let mut size = 0;
    while let Some(x) = stack.pop() {
        size += 1;
        for &y in &adj[x] {
            if !seen[y] && colors[y] == c {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    size
}

/// Monochromatic components as vertex lists.
pub fn monochromatic_components(g: &Hypergraph, colors: &[u32]) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for &y in &adj[x] {
                if !seen[y] && colors[y] == colors[s] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

/// Colors `g` with `component_color_count(max_deg)` colors so that every
/// monochromatic component has at most `component_cap(max_deg)` vertices.
pub fn bounded_component_coloring(g: &Hypergraph, seed: u64, repair_budget: usize) -> Result<ComponentColoring, DecompError> {
    require_graph(g)?;
    let adj = adjacency(g);
    let n = adj.len();
    let delta = adj.iter().map(Vec::len).max().unwrap_or(0);
    let q = component_color_count(delta) as u32;
    let cap = component_cap(delta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();

    let same = |colors: &[u32], v: usize, c: u32| adj[v].iter().filter(|&&u| colors[u] == c).count();
    loop {
        let mut moved = false;
        for v in 0..n {
            let cur = same(&colors, v, colors[v]);
            let best = (0..q).min_by_key(|&c| (same(&colors, v, c), c)).expect("q >= 1");
            if same(&colors, v, best) < cur {
                colors[v] = best;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }

    for _ in 0..repair_budget {
        let comps = monochromatic_components(g, &colors);
        let Some(big) = comps.iter().filter(|c| c.len() > cap).max_by_key(|c| c.len()) else {
            break;
        };
        let v = *big.choose(&mut rng).expect("non-empty component");
        colors[v] = (0..q)
            .min_by_key(|&c| (component_size_as(&adj, &colors, v, c), c))
            .expect("q >= 1");
    }

    let max_component = monochromatic_components(g, &colors)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0);
    if max_component > cap {
        return Err(DecompError::ComponentBudget { max_component, cap });
    }
    Ok(ComponentColoring {
        colors,
        num_colors: q as usize,
        max_component,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{generate_tight_cycle, Vertex};

    #[test]
    fn cycle_and_matching() {
        let c9 = generate_tight_cycle(2, 9).unwrap();
        let c = bounded_component_coloring(&c9, 0, DEFAULT_REPAIR_BUDGET).unwrap();
        assert_eq!(c.num_colors, 2);
        assert!(c.max_component <= 48);
        let m = Hypergraph::new(2, 6, [vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let c = bounded_component_coloring(&m, 0, DEFAULT_REPAIR_BUDGET).unwrap();
        assert_eq!((c.num_colors, c.max_component), (1, 2));
    }

    #[test]
    fn edgeless_graph() {
        let c = bounded_component_coloring(&Hypergraph::empty(2, 4), 3, 10).unwrap();
        assert_eq!((c.num_colors, c.max_component), (1, 1));
    }

    #[test]
    fn seeded_runs_repeat() {
        let g = Hypergraph::new(2, 8, (0..8 as Vertex).map(|v| vec![v, (v + 3) % 8])).unwrap();
        assert_eq!(
            bounded_component_coloring(&g, 9, 100).unwrap(),
            bounded_component_coloring(&g, 9, 100).unwrap()
        );
    }
}
