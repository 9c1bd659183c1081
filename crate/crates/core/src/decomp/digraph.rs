use serde::{Deserialize, Serialize};

use super::DecompError;

/// A simple digraph on `0..n`; antiparallel arc pairs are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, DecompError> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(a, b) in &arcs {
            if a == b || a >= n || b >= n {
                return Err(DecompError::BadArc(a, b));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self { n, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn max_out_degree(&self) -> usize {
        let mut out = vec![0usize; self.n];
        for &(a, _) in &self.arcs {
            out[a] += 1;
        }
        out.into_iter().max().unwrap_or(0)
    }

    /// Neighbor sets of the underlying simple graph.
    pub fn underlying(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.arcs {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nb in &mut adj {
            nb.sort_unstable();
            nb.dedup();
        }
        adj
    }
}

/// Proper coloring of the underlying graph, greedy along a reversed
/// smallest-last order. Every subgraph has a vertex of degree at most
/// `2 * max_out_degree`, so at most `2 * max_out_degree + 1` colors are used.
pub fn digraph_square_coloring(d: &Digraph) -> Vec<u32> {
    let adj = d.underlying();
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    let mut colors: Vec<Option<u32>> = vec![None; n];
    for &v in order.iter().rev() {
        let used: Vec<u32> = adj[v].iter().filter_map(|&u| colors[u]).collect();
        colors[v] = Some((0..).find(|c| !used.contains(c)).expect("a free color exists"));
    }
    colors.into_iter().map(|c| c.expect("all colored")).collect()
}

/// Whether `colors` is proper on the underlying graph of `d`.
pub fn is_proper(d: &Digraph, colors: &[u32]) -> bool {
    d.arcs().iter().all(|&(a, b)| colors[a] != colors[b])
}
