use std::collections::VecDeque;

use crate::hypercore::Hypergraph;

use super::arboricity::is_forest;
use super::{require_graph, DecompError, UnionFind};

/// Splits a forest (given as edge indices of `g`) into two star forests.
///
/// Each tree is rooted at its smallest vertex; an edge goes to the part given
/// by the depth parity of its upper endpoint, so every part-0 star is centered
/// at an even-depth vertex and every part-1 star at an odd-depth one.
pub fn star_forest_split(g: &Hypergraph, forest: &[usize]) -> Result<[Vec<usize>; 2], DecompError> {
    require_graph(g)?;
    if !is_forest(g, forest) {
        return Err(DecompError::NotAForest);
    }
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &i in forest {
        let e = g.edge(i);
        adj[e[0] as usize].push((e[1] as usize, i));
        adj[e[1] as usize].push((e[0] as usize, i));
    }
    let mut depth: Vec<Option<usize>> = vec![None; n];
    let mut parts = [Vec::new(), Vec::new()];
    for root in 0..n {
        if depth[root].is_some() || adj[root].is_empty() {
            continue;
        }
        depth[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let d = depth[x].expect("queued vertices have a depth");
            for &(y, e) in &adj[x] {
                if depth[y].is_none() {
                    depth[y] = Some(d + 1);
                    parts[d % 2].push(e);
                    queue.push_back(y);
                }
            }
        }
    }
    parts[0].sort_unstable();
    parts[1].sort_unstable();
    Ok(parts)
}

/// Whether every component of the edge set is a star: acyclic, with at most
/// one vertex of degree above 1.
pub fn is_star_forest(g: &Hypergraph, edges: &[usize]) -> bool {
    if !is_forest(g, edges) {
        return false;
    }
    let n = g.vertex_count();
    let mut deg = vec![0usize; n];
    let mut uf = UnionFind::new(n);
    for &i in edges {
        let e = g.edge(i);
        deg[e[0] as usize] += 1;
        deg[e[1] as usize] += 1;
        uf.union(e[0] as usize, e[1] as usize);
    }
    let mut centers = vec![0usize; n];
    for (v, &d) in deg.iter().enumerate() {
        if d > 1 {
            let root = uf.find(v);
            centers[root] += 1;
            if centers[root] > 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{complete_hypergraph, generate_path, PathSpec, Vertex};

    #[test]
    fn path_alternates() {
        let p = generate_path(PathSpec::new(2, 1, 4).unwrap());
        let [a, b] = star_forest_split(&p, &[0, 1, 2]).unwrap();
        assert_eq!((a, b), (vec![0, 2], vec![1]));
    }

    #[test]
    fn star_is_kept_whole() {
        let star = Hypergraph::new(2, 5, (1..5 as Vertex).map(|v| vec![0, v])).unwrap();
        let [a, b] = star_forest_split(&star, &[0, 1, 2, 3]).unwrap();
        assert_eq!((a.len(), b.len()), (4, 0));
    }

    #[test]
    fn spanning_tree_of_k4() {
        let k4 = complete_hypergraph(4, 2).unwrap();
        // edges 01, 12, 13 in canonical order are indices 0, 3, 4
        let tree = [0, 3, 4];
        let [a, b] = star_forest_split(&k4, &tree).unwrap();
        assert!(is_star_forest(&k4, &a) && is_star_forest(&k4, &b));
        assert_eq!(a.len() + b.len(), 3);
        assert!(matches!(star_forest_split(&k4, &[0, 1, 3]), Err(DecompError::NotAForest)));
    }
}
