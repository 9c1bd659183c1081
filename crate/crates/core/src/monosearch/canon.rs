//! Canonical labeling of uniform hypergraphs.
//!
//! Individualization-refinement on the vertex/edge incidence graph: colors are
//! refined by sorted neighbor-color signatures until stable, then the first
//! non-singleton vertex cell is split by individualizing each of its members.
//! Each discrete leaf yields a relabeled sorted edge list; the least one is the
//! label. Two leaves with equal lists give an automorphism, used to skip
//! children lying in an already explored orbit.

use std::fmt;

use crate::hypercore::{Hypergraph, Vertex};

use super::SearchError;

/// Default vertex limit for [`canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 16;

/// Opaque isomorphism-class label: equal iff the hypergraphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&hex::encode(&self.0))
    }
}

/// Label with the default vertex limit.
pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalLabel, SearchError> {
    canonical_form_with_limit(h, DEFAULT_CANON_LIMIT).map(|(l, _)| l)
}

/// The label and a canonical relabeling `perm[v]` achieving it.
pub fn canonical_form_with_limit(h: &Hypergraph, limit: usize) -> Result<(CanonicalLabel, Vec<Vertex>), SearchError> {
    if h.vertex_count() > limit {
        return Err(SearchError::CanonicalLimit {
            vertices: h.vertex_count(),
            limit,
        });
    }
    if h.vertex_count() > u16::MAX as usize {
        return Err(SearchError::CanonicalLimit {
            vertices: h.vertex_count(),
            limit: u16::MAX as usize,
        });
    }
    let mut search = Search::new(h);
    let root = search.refine(search.initial());
    search.explore(root, &mut Vec::new());
    let (cert, perm) = search.best.expect("search reaches at least one leaf");
    let mut bytes = Vec::with_capacity(6 + 2 * cert.len() * h.uniformity());
    for x in [h.vertex_count(), h.uniformity(), h.edge_count()] {
        bytes.extend_from_slice(&(x as u16).to_be_bytes());
    }
    for e in &cert {
        for &v in e {
            bytes.extend_from_slice(&v.to_be_bytes());
        }
    }
    Ok((CanonicalLabel(bytes), perm))
}

/// The canonical representative: `h` relabeled by its canonical permutation.
pub fn canonical_host(h: &Hypergraph, limit: usize) -> Result<(CanonicalLabel, Hypergraph), SearchError> {
    let (label, perm) = canonical_form_with_limit(h, limit)?;
    Ok((label, h.relabel(&perm)))
}

type Cert = Vec<Vec<u16>>;

struct Search<'a> {
    h: &'a Hypergraph,
    n: usize,
    adj: Vec<Vec<usize>>,
    best: Option<(Cert, Vec<Vertex>)>,
    /// Automorphisms as vertex permutations.
    autos: Vec<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.vertex_count();
        let mut adj = vec![Vec::new(); n + h.edge_count()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                adj[v as usize].push(n + i);
                adj[n + i].push(v as usize);
            }
        }
        Self {
            h,
            n,
            adj,
            best: None,
            autos: Vec::new(),
        }
    }

    fn initial(&self) -> Vec<u32> {
        (0..self.adj.len()).map(|i| u32::from(i >= self.n)).collect()
    }

    fn cells(colors: &[u32]) -> usize {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Rank-compresses `keys` into dense colors preserving their order.
    fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        keys.iter().map(|k| sorted.binary_search(k).expect("present") as u32).collect()
    }

    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut count = Self::cells(&colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..colors.len())
                .map(|i| {
                    let mut nb: Vec<u32> = self.adj[i].iter().map(|&j| colors[j]).collect();
                    nb.sort_unstable();
                    (colors[i], nb)
                })
                .collect();
            let next = Self::rank(&sigs);
            let c = Self::cells(&next);
            colors = next;
            if c == count {
                return colors;
            }
            count = c;
        }
    }

    fn individualize(&self, colors: &[u32], v: usize) -> Vec<u32> {
        let keys: Vec<(u32, bool)> = colors.iter().enumerate().map(|(i, &c)| (c, i != v)).collect();
        self.refine(Self::rank(&keys))
    }

    /// Members of the lowest-colored non-singleton vertex cell.
    fn target_cell(&self, colors: &[u32]) -> Option<Vec<usize>> {
        let vc = &colors[..self.n];
        let mut by_color: Vec<(u32, usize)> = vc.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        by_color.sort_unstable();
        let mut i = 0;
        while i < by_color.len() {
            let mut j = i;
            while j < by_color.len() && by_color[j].0 == by_color[i].0 {
                j += 1;
            }
            if j - i > 1 {
                return Some(by_color[i..j].iter().map(|&(_, v)| v).collect());
            }
            i = j;
        }
        None
    }

    fn leaf(&self, colors: &[u32]) -> (Cert, Vec<Vertex>) {
        let perm: Vec<Vertex> = Self::rank(&colors[..self.n]).into_iter().collect();
        let mut cert: Cert = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut x: Vec<u16> = e.iter().map(|&v| perm[v as usize] as u16).collect();
                x.sort_unstable();
                x
            })
            .collect();
        cert.sort();
        (cert, perm)
    }

    /// Orbit representative test: `v` is pruned when an automorphism fixing
    /// `prefix` pointwise maps an earlier explored child onto it.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.autos {
            if prefix.iter().any(|&u| g[u] as usize != u) {
                continue;
            }
            for (a, &b) in g.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b as usize));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn explore(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let Some(cell) = self.target_cell(&colors) else {
            let (cert, perm) = self.leaf(&colors);
            match &self.best {
                Some((best, best_perm)) if *best == cert => {
                    // perm maps v to the same slot best_perm maps g(v) to
                    let mut inv = vec![0 as Vertex; self.n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        inv[p as usize] = v as Vertex;
                    }
                    let g: Vec<Vertex> = perm.iter().map(|&p| inv[p as usize]).collect();
                    if g.iter().enumerate().any(|(v, &x)| x as usize != v) {
                        self.autos.push(g);
                    }
                }
                Some((best, _)) if *best < cert => {}
                _ => self.best = Some((cert, perm)),
            }
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in cell {
            if self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let child = self.individualize(&colors, v);
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}
