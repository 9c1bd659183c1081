//! Structural transforms: link graphs, blow-ups, cones, common-core extensions
//! and strong independent set partitions.
//!
//! Blow-ups number vertices block-contiguously: old vertex `v` becomes the
//! block `[v * w, (v + 1) * w)` for block width `w`, and any per-edge private
//! vertices follow all blocks, in edge order.

use std::collections::BTreeSet;

use super::{Hypergraph, HypergraphError, Vertex};

/// The `(k-1)`-graph of residues `e \ {v}` over edges `e` through `v`.
pub fn link_graph(h: &Hypergraph, v: Vertex) -> Result<Hypergraph, HypergraphError> {
    if h.uniformity() <= 1 {
        return Err(HypergraphError::Unsupported("link of a 1-uniform hypergraph is 0-uniform"));
    }
    if v as usize >= h.vertex_count() {
        return Err(HypergraphError::VertexOutOfRange {
            vertex: v,
            vertex_count: h.vertex_count(),
        });
    }
    let edges = h
        .edges()
        .iter()
        .filter(|e| e.contains(&v))
        .map(|e| e.iter().copied().filter(|&u| u != v).collect());
    Hypergraph::new(h.uniformity() - 1, h.vertex_count(), edges)
}

/// Turns a graph arrowing `P_{m+1}` into a `k`-graph arrowing the `(k, ell)`-path
/// with `m` edges: each vertex becomes an `ell`-set and each edge gains
/// `k - 2 ell` private vertices.
pub fn blowup_overlap(g: &Hypergraph, k: usize, ell: usize) -> Result<Hypergraph, HypergraphError> {
    if g.uniformity() != 2 {
        return Err(HypergraphError::UniformityMismatch {
            expected: 2,
            found: g.uniformity(),
        });
    }
    if ell == 0 || 2 * ell > k {
        return Err(HypergraphError::Overlap { k, ell });
    }
    let private = k - 2 * ell;
    let base = g.vertex_count() * ell;
    let edges = g.edges().iter().enumerate().map(|(i, e)| {
        let mut out: Vec<Vertex> = e
            .iter()
            .flat_map(|&v| (v as usize * ell..(v as usize + 1) * ell).map(|x| x as Vertex))
            .collect();
        out.extend((base + i * private..base + (i + 1) * private).map(|x| x as Vertex));
        out
    });
    Hypergraph::new(k, base + g.edge_count() * private, edges)
}

/// Replaces every vertex by a block of `d` vertices, multiplying uniformity by `d`.
pub fn blowup_divide(g: &Hypergraph, d: usize) -> Result<Hypergraph, HypergraphError> {
    if d == 0 {
        return Err(HypergraphError::Unsupported("blow-up factor must be positive"));
    }
    let edges = g.edges().iter().map(|e| {
        e.iter()
            .flat_map(|&v| (v as usize * d..(v as usize + 1) * d).map(|x| x as Vertex))
            .collect()
    });
    Hypergraph::new(g.uniformity() * d, g.vertex_count() * d, edges)
}

/// Adds one new vertex (numbered `vertex_count`) to every edge.
pub fn cone(g: &Hypergraph) -> Hypergraph {
    let y = g.vertex_count() as Vertex;
    let edges = g.edges().iter().map(|e| {
        let mut e = e.clone();
        e.push(y);
        e
    });
    Hypergraph::new(g.uniformity() + 1, g.vertex_count() + 1, edges).expect("cone preserves distinctness")
}

/// Extends an `m(k-ell)`-graph to a `k`-graph by adding a common core of
/// `k - m(k-ell)` new vertices to every edge.
pub fn core_extend(g: &Hypergraph, k: usize, ell: usize, m: usize) -> Result<Hypergraph, HypergraphError> {
    if ell >= k {
        return Err(HypergraphError::Overlap { k, ell });
    }
    let inner = m * (k - ell);
    if m == 0 || inner >= k {
        return Err(HypergraphError::CoreEmpty { k, ell, m });
    }
    if g.uniformity() != inner {
        return Err(HypergraphError::UniformityMismatch {
            expected: inner,
            found: g.uniformity(),
        });
    }
    let core = k - inner;
    let base = g.vertex_count();
    let edges = g.edges().iter().map(|e| {
        let mut e = e.clone();
        e.extend((base..base + core).map(|x| x as Vertex));
        e
    });
    Hypergraph::new(k, base + core, edges)
}

/// Exhaustive maximum strong independent set search is used while this many
/// vertices remain; beyond it, greedy maximal by ascending id.
pub const EXACT_INDEPENDENT_LIMIT: usize = 20;

/// Partitions `s` into sets meeting every edge of `h` at most once.
///
/// Each round removes a maximum (or, for large remainders, maximal) strong
/// independent set of what is left, so the part count is at most
/// `(k-1) * max_deg + 1` where `max_deg` is the largest degree over `s`.
pub fn strong_independent_partition(h: &Hypergraph, s: &[Vertex]) -> Vec<Vec<Vertex>> {
    let set: BTreeSet<Vertex> = s.iter().copied().collect();
    let verts: Vec<Vertex> = set.iter().copied().collect();
    let pos = |v: Vertex| verts.binary_search(&v).ok();
    // conflict adjacency among the vertices of S
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); verts.len()];
    for e in h.edges() {
        let inside: Vec<usize> = e.iter().filter_map(|&v| pos(v)).collect();
        for (i, &a) in inside.iter().enumerate() {
            for &b in &inside[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    let mut remaining: Vec<usize> = (0..verts.len()).collect();
    let mut parts = Vec::new();
    while !remaining.is_empty() {
        let chosen = if remaining.len() <= EXACT_INDEPENDENT_LIMIT {
            maximum_independent(&remaining, &adj)
        } else {
            let mut picked: Vec<usize> = Vec::new();
            for &v in &remaining {
                if picked.iter().all(|p| !adj[v].contains(p)) {
                    picked.push(v);
                }
            }
            picked
        };
        remaining.retain(|v| !chosen.contains(v));
        parts.push(chosen.into_iter().map(|i| verts[i]).collect());
    }
    parts
}

fn maximum_independent(cands: &[usize], adj: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = cands.len();
    let conflict: Vec<u32> = cands
        .iter()
        .map(|&a| {
            cands
                .iter()
                .enumerate()
                .filter(|(_, b)| adj[a].contains(b))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();

    fn go(i: usize, n: usize, allowed: u32, cur: u32, best: &mut u32, conflict: &[u32]) {
        if i == n {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        let rest = (allowed >> i).count_ones();
        if cur.count_ones() + rest <= best.count_ones() {
            return;
        }
        if allowed & (1 << i) != 0 {
            go(i + 1, n, allowed & !conflict[i], cur | (1 << i), best, conflict);
        }
        go(i + 1, n, allowed & !(1 << i), cur, best, conflict);
    }

    let mut best = 0u32;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    go(0, n, all, 0, &mut best, &conflict);
    (0..n).filter(|&j| best & (1 << j) != 0).map(|j| cands[j]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{generate_path, PathSpec};

    fn hg(k: usize, n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::new(k, n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn link_examples() {
        let p5 = generate_path(PathSpec::new(3, 2, 5).unwrap());
        let l = link_graph(&p5, 2).unwrap();
        assert_eq!(l.edges(), &[vec![0, 1], vec![1, 3], vec![3, 4]]);
        let l0 = link_graph(&p5, 0).unwrap();
        assert_eq!(l0.edges(), &[vec![1, 2]]);
        let one = hg(1, 3, &[&[0], &[1]]);
        assert!(link_graph(&one, 0).is_err());
    }

    #[test]
    fn blowups() {
        let p = hg(2, 3, &[&[0, 1], &[1, 2]]);
        let b = blowup_overlap(&p, 4, 2).unwrap();
        assert_eq!(b.edge_count(), 2);
        assert_eq!(b.intersection_size(0, 1), 2);
        let tri = hg(2, 3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(blowup_overlap(&tri, 2, 1).unwrap(), tri);
        let k4 = crate::hypercore::complete_hypergraph(4, 2).unwrap();
        let b = blowup_overlap(&k4, 5, 2).unwrap();
        assert_eq!((b.edge_count(), b.vertex_count()), (6, 14));
        assert!(blowup_overlap(&k4, 5, 3).is_err());

        let p4 = generate_path(PathSpec::new(2, 1, 4).unwrap());
        assert_eq!(blowup_divide(&p4, 1).unwrap(), p4);
        let d = blowup_divide(&p, 2).unwrap();
        assert_eq!((d.uniformity(), d.edge_count(), d.intersection_size(0, 1)), (4, 2, 2));
        let d = blowup_divide(&hg(3, 3, &[&[0, 1, 2]]), 3).unwrap();
        assert_eq!((d.uniformity(), d.edge_count()), (9, 1));
    }

    #[test]
    fn cones() {
        let p4 = generate_path(PathSpec::new(2, 1, 4).unwrap());
        let c = cone(&p4);
        assert_eq!(c.edges(), &[vec![0, 1, 4], vec![1, 2, 4], vec![2, 3, 4]]);
        let singles = hg(1, 3, &[&[0], &[1], &[2]]);
        let star = cone(&singles);
        assert_eq!(star.edges(), &[vec![0, 3], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn core_extension() {
        let singles = hg(1, 4, &[&[0], &[1], &[2], &[3]]);
        let s = core_extend(&singles, 3, 2, 1).unwrap();
        assert_eq!(s.edge_count(), 4);
        assert!(s.edges().iter().all(|e| e.contains(&4) && e.contains(&5)));
        let p = hg(2, 3, &[&[0, 1], &[1, 2]]);
        let e = core_extend(&p, 4, 3, 2).unwrap();
        assert_eq!((e.uniformity(), e.edge_count()), (4, 2));
        assert!(core_extend(&p, 4, 2, 2).is_err());
    }

    #[test]
    fn strong_partitions() {
        let one = hg(3, 3, &[&[0, 1, 2]]);
        assert_eq!(strong_independent_partition(&one, &[0, 1, 2]).len(), 3);
        let matching = hg(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(strong_independent_partition(&matching, &[0, 3]).len(), 1);
    }
}
