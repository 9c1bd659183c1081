use std::fmt;

use serde::{Deserialize, Serialize};

use super::HypergraphError;

/// Vertex identifier. Vertices are dense integers in `[0, vertex_count)`.
pub type Vertex = u32;

/// A `k`-uniform hypergraph with canonically ordered edges.
///
/// Every edge is stored sorted, and the edge list itself is sorted
/// lexicographically, so two hypergraphs with the same edge set compare equal
/// regardless of input order. Edge indices used by colorings refer to this
/// canonical order.
///
/// A 0-uniform hypergraph has no vertex sets as edges; instead it carries a
/// flag saying whether the empty set is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    vertex_count: usize,
    edges: Vec<Vec<Vertex>>,
    masks: Option<Vec<u128>>,
    null_edge: bool,
}

impl Hypergraph {
    /// Builds a `k`-uniform hypergraph, canonicalizing edge order.
    pub fn new(
        k: usize,
        vertex_count: usize,
        edges: impl IntoIterator<Item = Vec<Vertex>>,
    ) -> Result<Self, HypergraphError> {
        if k == 0 {
            return Err(HypergraphError::ZeroUniform);
        }
        let mut out = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e.len() != k {
                return Err(HypergraphError::EdgeSize {
                    expected: k,
                    found: e.len(),
                });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex(e));
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= vertex_count) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, vertex_count });
            }
            out.push(e);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge(w[0].clone()));
        }
        Ok(Self::from_sorted(k, vertex_count, out))
    }

    /// The 0-uniform hypergraph on `vertex_count` vertices, which either has
    /// the empty set as its single edge or has no edges.
    pub fn trivial(vertex_count: usize, has_empty_edge: bool) -> Self {
        Self {
            k: 0,
            vertex_count,
            edges: Vec::new(),
            masks: None,
            null_edge: has_empty_edge,
        }
    }

    /// The hypergraph on `vertex_count` vertices with no edges.
    pub fn empty(k: usize, vertex_count: usize) -> Self {
        Self::from_sorted(k, vertex_count, Vec::new())
    }

    pub(crate) fn from_sorted(k: usize, vertex_count: usize, edges: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let masks = (vertex_count <= 128).then(|| {
            edges
                .iter()
                .map(|e| e.iter().fold(0u128, |m, &v| m | (1u128 << v)))
                .collect()
        });
        Self {
            k,
            vertex_count,
            edges,
            masks,
            null_edge: false,
        }
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() + usize::from(self.null_edge)
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// Whether a 0-uniform hypergraph contains the empty edge.
    pub fn has_null_edge(&self) -> bool {
        self.null_edge
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i]
    }

    /// Bitset mirror of edge `i`, present when the vertex count fits in 128 bits.
    pub fn edge_mask(&self, i: usize) -> Option<u128> {
        self.masks.as_ref().map(|m| m[i])
    }

    /// Index of `edge` (given sorted) in the canonical order.
    pub fn find_edge(&self, edge: &[Vertex]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.find_edge(edge).is_some()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                d[v as usize] += 1;
            }
        }
        d
    }

    /// Vertex-to-incident-edge-index lists.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v as usize].push(i);
            }
        }
        inc
    }

    /// Size of the intersection of edges `a` and `b`.
    pub fn intersection_size(&self, a: usize, b: usize) -> usize {
        match &self.masks {
            Some(m) => (m[a] & m[b]).count_ones() as usize,
            None => sorted_intersection_len(&self.edges[a], &self.edges[b]),
        }
    }

    pub fn isolated_vertex_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d == 0).count()
    }

    /// The sub-hypergraph keeping the edges at the given indices, on the same vertex set.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = usize>) -> Self {
        let mut edges: Vec<Vec<Vertex>> = keep.into_iter().map(|i| self.edges[i].clone()).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(self.k, self.vertex_count, edges)
    }

    /// Drops isolated vertices and relabels the rest in increasing order.
    pub fn compact(&self) -> Self {
        let deg = self.degrees();
        let mut relabel = vec![u32::MAX; self.vertex_count];
        let mut next = 0u32;
        for (v, &d) in deg.iter().enumerate() {
            if d > 0 {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| relabel[v as usize]).collect());
        Self::new(self.k, next as usize, edges).expect("relabeling preserves validity")
    }

    /// Whether the hypergraph is connected once isolated vertices are ignored.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        if self.edges.is_empty() {
            return true;
        }
        let inc = self.incidence();
        let mut seen_edge = vec![false; self.edges.len()];
        let mut stack = vec![0usize];
        seen_edge[0] = true;
        let mut count = 1;
        while let Some(e) = stack.pop() {
            for &v in &self.edges[e] {
                for &f in &inc[v as usize] {
                    if !seen_edge[f] {
                        seen_edge[f] = true;
                        count += 1;
                        stack.push(f);
                    }
                }
            }
        }
        count == self.edges.len()
    }

    /// Applies a vertex relabeling `perm[v]` and returns the canonicalized result.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        let n = perm.iter().map(|&v| v as usize + 1).max().unwrap_or(0).max(self.vertex_count);
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v as usize]).collect());
        Self::new(self.k, n, edges).expect("relabeling with a permutation preserves validity")
    }
}

pub(crate) fn sorted_intersection_len(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            return write!(f, "Hypergraph(k=0, n={}, null_edge={})", self.vertex_count, self.null_edge);
        }
        write!(f, "Hypergraph(k={}, n={}, edges={:?})", self.k, self.vertex_count, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<u32>,
    k: usize,
    vertices: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.k == 0 {
            return Err(serde::ser::Error::custom("0-uniform hypergraphs have no JSON form"));
        }
        HypergraphRepr {
            format: None,
            k: self.k,
            vertices: self.vertex_count,
            edges: self.edges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = HypergraphRepr::deserialize(deserializer)?;
        if let Some(v) = repr.format {
            if v != crate::FORMAT_VERSION {
                return Err(serde::de::Error::custom(format!("unsupported format version {v}")));
            }
        }
        Hypergraph::new(repr.k, repr.vertices, repr.edges).map_err(serde::de::Error::custom)
    }
}

/// All `k`-subsets of `[0, n)` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<Vertex> = (0..k as Vertex).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (cur[i] as usize) < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every `t`-subset of the sorted slice `set`, each returned sorted.
pub fn subsets_of<T: Copy>(set: &[T], t: usize) -> Vec<Vec<T>> {
    k_subsets(set.len(), t)
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| set[i as usize]).collect())
        .collect()
}

/// The complete `k`-graph on `n` vertices.
pub fn complete_hypergraph(n: usize, k: usize) -> Result<Hypergraph, HypergraphError> {
    if k == 0 {
        return Err(HypergraphError::ZeroUniform);
    }
    if n < k {
        return Err(HypergraphError::TooFewVertices { n, k });
    }
    Ok(Hypergraph::from_sorted(k, n, k_subsets(n, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_makes_equal() {
        let a = Hypergraph::new(2, 3, vec![vec![2, 1], vec![0, 1]]).unwrap();
        let b = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge(1), &[1, 2]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1]]),
            Err(HypergraphError::EdgeSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, 4, vec![vec![1, 1]]),
            Err(HypergraphError::RepeatedVertex(_))
        ));
        assert!(matches!(
            Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 0]]),
            Err(HypergraphError::DuplicateEdge(_))
        ));
        assert!(matches!(
            Hypergraph::new(2, 2, vec![vec![0, 2]]),
            Err(HypergraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete_hypergraph(4, 2).unwrap().edge_count(), 6);
        assert_eq!(complete_hypergraph(5, 3).unwrap().edge_count(), 10);
        assert_eq!(complete_hypergraph(3, 3).unwrap().edge_count(), 1);
        assert!(complete_hypergraph(2, 3).is_err());
    }

    #[test]
    fn json_roundtrip_shape() {
        let h = Hypergraph::new(2, 3, vec![vec![1, 2], vec![0, 1]]).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"k":2,"vertices":3,"edges":[[0,1],[1,2]]}"#);
        let back: Hypergraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
        let bad: Result<Hypergraph, _> = serde_json::from_str(r#"{"k":2,"vertices":2,"edges":[[0,5]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn trivial_flag_counts_one_edge() {
        assert_eq!(Hypergraph::trivial(5, true).edge_count(), 1);
        assert_eq!(Hypergraph::trivial(5, false).edge_count(), 0);
    }
}
