//! Exact arboricity by matroid-partition augmentation.
//!
//! Edges are inserted one at a time. An edge that fits no forest starts a
//! breadth-first search over exchange moves: putting an edge into forest `i`
//! closes a cycle, and every edge on that cycle may be displaced and searched
//! on in turn. A shortest chain ending in a forest where the last displaced
//! edge fits is applied. When no chain exists, the edges reached form a
//! subgraph spanned by every forest, which certifies that one more forest is
//! needed.

use std::collections::VecDeque;

use crate::hypercore::{Hypergraph, Vertex};

use super::{require_graph, DecompError, UnionFind};

/// A partition of the edges into forests, plus a densest-subgraph witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestDecomposition {
    /// Edge indices of each forest.
    pub forests: Vec<Vec<usize>>,
    /// Edge indices of a subgraph `W` with `|E(W)| > (a - 1)(|V(W)| - 1)`.
    pub witness: Vec<usize>,
}

impl ForestDecomposition {
    pub fn arboricity(&self) -> usize {
        self.forests.len()
    }
}

struct Forest {
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl Forest {
    fn new(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    fn add(&mut self, e: usize, [u, v]: [Vertex; 2]) {
        self.adj[u as usize].push((v, e));
        self.adj[v as usize].push((u, e));
    }

    fn remove(&mut self, e: usize, [u, v]: [Vertex; 2]) {
        self.adj[u as usize].retain(|&(_, x)| x != e);
        self.adj[v as usize].retain(|&(_, x)| x != e);
    }

    /// Edge indices on the tree path from `u` to `v`, if connected.
    fn path(&self, u: Vertex, v: Vertex) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut via: Vec<Option<(Vertex, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u as usize] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                let mut path = Vec::new();
                let mut cur = v;
                while let Some((prev, e)) = via[cur as usize] {
                    path.push(e);
                    cur = prev;
                }
                return Some(path);
            }
            for &(y, e) in &self.adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    via[y as usize] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// Minimum forest partition of a graph's edges.
pub fn arboricity_decompose(g: &Hypergraph) -> Result<ForestDecomposition, DecompError> {
    require_graph(g)?;
    let n = g.vertex_count();
    let ends: Vec<[Vertex; 2]> = g.edges().iter().map(|e| [e[0], e[1]]).collect();
    let mut forests: Vec<Forest> = Vec::new();
    let mut home: Vec<Option<usize>> = vec![None; ends.len()];
    let mut witness: Vec<usize> = Vec::new();

    for e in 0..ends.len() {
        match augment(&mut forests, &mut home, &ends, e) {
            Ok(()) => {}
            Err(reached) => {
                witness = component_of(n, &ends, &reached, e);
                let mut f = Forest::new(n);
                f.add(e, ends[e]);
                forests.push(f);
                home[e] = Some(forests.len() - 1);
            }
        }
    }
    if witness.is_empty() && !ends.is_empty() {
        witness = vec![0];
    }
    let mut parts = vec![Vec::new(); forests.len()];
    for (e, h) in home.iter().enumerate() {
        parts[h.expect("every edge placed")].push(e);
    }
    Ok(ForestDecomposition { forests: parts, witness })
}

/// Inserts `e`, or returns the edges reached when no exchange chain exists.
fn augment(forests: &mut [Forest], home: &mut [Option<usize>], ends: &[[Vertex; 2]], e: usize) -> Result<(), Vec<usize>> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; ends.len()];
    let mut reached = vec![false; ends.len()];
    reached[e] = true;
    let mut order = vec![e];
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        let [u, v] = ends[x];
        for i in 0..forests.len() {
            if home[x] == Some(i) {
                continue;
            }
            match forests[i].path(u, v) {
                None => {
                    apply(forests, home, ends, &parent, e, x, i);
                    return Ok(());
                }
                Some(path) => {
                    for y in path {
                        if !reached[y] {
                            reached[y] = true;
                            parent[y] = Some((x, i));
                            order.push(y);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
    }
    Err(order)
}

fn apply(
    forests: &mut [Forest],
    home: &mut [Option<usize>],
    ends: &[[Vertex; 2]],
    parent: &[Option<(usize, usize)>],
    e: usize,
    last: usize,
    into: usize,
) {
    let (mut cur, mut target) = (last, into);
    loop {
        if let Some(old) = home[cur] {
            forests[old].remove(cur, ends[cur]);
        }
        forests[target].add(cur, ends[cur]);
        home[cur] = Some(target);
        if cur == e {
            break;
        }
        let (p, j) = parent[cur].expect("chain leads back to the inserted edge");
        cur = p;
        target = j;
    }
}

/// The edges of `reached` in the connected component containing edge `e`.
fn component_of(n: usize, ends: &[[Vertex; 2]], reached: &[usize], e: usize) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for &x in reached {
        uf.union(ends[x][0] as usize, ends[x][1] as usize);
    }
    let root = uf.find(ends[e][0] as usize);
    let mut out: Vec<usize> = reached
        .iter()
        .copied()
        .filter(|&x| uf.find(ends[x][0] as usize) == root)
        .collect();
    out.sort_unstable();
    out
}

/// Whether the edge set is acyclic.
pub fn is_forest(g: &Hypergraph, edges: &[usize]) -> bool {
    let mut uf = UnionFind::new(g.vertex_count());
    edges.iter().all(|&i| {
        let e = g.edge(i);
        uf.union(e[0] as usize, e[1] as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{complete_hypergraph, generate_path, generate_tight_cycle, PathSpec};

    fn check(g: &Hypergraph) -> usize {
        let d = arboricity_decompose(g).unwrap();
        let mut all: Vec<usize> = d.forests.concat();
        all.sort_unstable();
        assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
        assert!(d.forests.iter().all(|f| is_forest(g, f)));
        d.arboricity()
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&complete_hypergraph(4, 2).unwrap()), 2);
        assert_eq!(check(&generate_path(PathSpec::new(2, 1, 6).unwrap())), 1);
        assert_eq!(check(&generate_tight_cycle(2, 4).unwrap()), 2);
        assert_eq!(check(&complete_hypergraph(8, 2).unwrap()), 4);
        assert_eq!(check(&Hypergraph::empty(2, 3)), 0);
    }

    #[test]
    fn witness_is_dense_enough() {
        let g = complete_hypergraph(7, 2).unwrap();
        let d = arboricity_decompose(&g).unwrap();
        let a = d.arboricity();
        let sub = g.edge_subgraph(d.witness.iter().copied()).compact();
        assert!(sub.edge_count() > (a - 1) * (sub.vertex_count() - 1));
    }
}
