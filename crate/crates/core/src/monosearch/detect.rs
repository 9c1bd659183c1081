//! Exact detection of `(k, ell)`-paths and tight cycles inside edge subsets.
//!
//! Path search grows a vertex sequence window by window. The state is the
//! ordered tail of the last `ell` positions: the next window is the tail set
//! plus `k - ell` fresh vertices. Positions that lie in exactly the same set of
//! windows are interchangeable, so within such a class the placed vertices are
//! kept in increasing order; every other order of new vertices is branched on.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::hypercore::{Color, CycleSpec, EdgeColoring, Hypergraph, PathSpec, Target, Vertex};

use super::SearchError;

/// A monochromatic path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
    pub color: Color,
}

/// A monochromatic tight cycle given by its cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Path(PathWitness),
    Cycle(CycleWitness),
}

impl Witness {
    pub fn color(&self) -> Color {
        match self {
            Witness::Path(p) => p.color,
            Witness::Cycle(c) => c.color,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        match self {
            Witness::Path(p) => &p.vertices,
            Witness::Cycle(c) => &c.vertices,
        }
    }

    /// Replays the witness against the host and coloring.
    pub fn verify(&self, host: &Hypergraph, coloring: &EdgeColoring, target: &Target) -> bool {
        match (self, target) {
            (Witness::Path(p), Target::Path(spec)) => {
                p.vertices.len() >= spec.n() && p.verify(host, coloring, spec.ell())
            }
            (Witness::Cycle(c), Target::CycleGeq(spec)) => {
                c.vertices.len() >= spec.min_length() && c.verify(host, coloring)
            }
            _ => false,
        }
    }
}

fn distinct(vs: &[Vertex]) -> bool {
    let set: HashSet<_> = vs.iter().collect();
    set.len() == vs.len()
}

fn window_ok(host: &Hypergraph, coloring: &EdgeColoring, window: &[Vertex], color: Color) -> bool {
    let mut w = window.to_vec();
    w.sort_unstable();
    host.find_edge(&w).is_some_and(|i| coloring.color(i) == color)
}

impl PathWitness {
    /// Every window of `k` consecutive positions, stepped by `k - ell`, is an
    /// edge of `host` carrying `self.color`.
    pub fn verify(&self, host: &Hypergraph, coloring: &EdgeColoring, ell: usize) -> bool {
        let k = host.uniformity();
        let p = self.vertices.len();
        if k == 0 || ell >= k || p < k || !(p - ell).is_multiple_of(k - ell) || !distinct(&self.vertices) {
            return false;
        }
        let s = k - ell;
        (0..(p - ell) / s).all(|i| window_ok(host, coloring, &self.vertices[i * s..i * s + k], self.color))
    }
}

impl CycleWitness {
    pub fn verify(&self, host: &Hypergraph, coloring: &EdgeColoring) -> bool {
        let k = host.uniformity();
        let p = self.vertices.len();
        if p < k + 1 || !distinct(&self.vertices) {
            return false;
        }
        (0..p).all(|i| {
            let w: Vec<Vertex> = (0..k).map(|j| self.vertices[(i + j) % p]).collect();
            window_ok(host, coloring, &w, self.color)
        })
    }
}

struct PathSearch<'a> {
    k: usize,
    ell: usize,
    s: usize,
    edges: Vec<&'a [Vertex]>,
    incident: Vec<Vec<usize>>,
    used: Vec<bool>,
    seq: Vec<Vertex>,
    goal: Option<usize>,
    best_windows: usize,
    best_seq: Vec<Vertex>,
}

impl<'a> PathSearch<'a> {
    fn new(host: &'a Hypergraph, edge_ids: &[usize], ell: usize, goal: Option<usize>) -> Self {
        let k = host.uniformity();
        let edges: Vec<&[Vertex]> = edge_ids.iter().map(|&i| host.edge(i)).collect();
        let mut incident = vec![Vec::new(); host.vertex_count()];
        for (i, e) in edges.iter().enumerate() {
            for &v in e.iter() {
                incident[v as usize].push(i);
            }
        }
        Self {
            k,
            ell,
            s: k - ell,
            edges,
            incident,
            used: vec![false; host.vertex_count()],
            seq: Vec::new(),
            goal,
            best_windows: 0,
            best_seq: Vec::new(),
        }
    }

    /// (first window, last window) containing position `x`.
    fn class(&self, x: usize) -> (usize, usize) {
        let first = if x < self.k { 0 } else { (x + 1 - self.k).div_ceil(self.s) };
        (first, x / self.s)
    }

    fn done(&self) -> bool {
        self.goal.is_some_and(|g| self.best_windows >= g)
    }

    fn run(&mut self) {
        for ei in 0..self.edges.len() {
            let e = self.edges[ei];
            self.place(e.to_vec(), 1);
            if self.done() {
                return;
            }
        }
    }

    /// Places `fresh` at the next positions in every admissible order, then
    /// continues the search with `windows` windows complete.
    fn place(&mut self, fresh: Vec<Vertex>, windows: usize) {
        let start = self.seq.len();
        let mut taken = vec![false; fresh.len()];
        self.place_rec(&fresh, &mut taken, start, windows);
    }

    fn place_rec(&mut self, fresh: &[Vertex], taken: &mut [bool], start: usize, windows: usize) {
        let pos = self.seq.len();
        if pos == start + fresh.len() {
            self.record_and_extend(windows);
            return;
        }
        let min_after = if pos > start && self.class(pos - 1) == self.class(pos) {
            Some(self.seq[pos - 1])
        } else {
            None
        };
        for i in 0..fresh.len() {
            if taken[i] || min_after.is_some_and(|m| fresh[i] < m) {
                continue;
            }
            taken[i] = true;
            self.used[fresh[i] as usize] = true;
            self.seq.push(fresh[i]);
            self.place_rec(fresh, taken, start, windows);
            self.seq.pop();
            self.used[fresh[i] as usize] = false;
            taken[i] = false;
            if self.done() {
                return;
            }
        }
    }

    fn record_and_extend(&mut self, windows: usize) {
        if windows > self.best_windows {
            self.best_windows = windows;
            self.best_seq = self.seq.clone();
            if self.done() {
                return;
            }
        }
        let len = self.seq.len();
        let tail: Vec<Vertex> = self.seq[len - self.ell..].to_vec();
        let candidates: Vec<usize> = match tail.first() {
            Some(&t0) => self.incident[t0 as usize].clone(),
            None => (0..self.edges.len()).collect(),
        };
        for ei in candidates {
            let e = self.edges[ei];
            let in_tail = e.iter().filter(|v| tail.contains(v)).count();
            let in_used = e.iter().filter(|&&v| self.used[v as usize]).count();
            if in_tail != self.ell || in_used != self.ell {
                continue;
            }
            let fresh: Vec<Vertex> = e.iter().copied().filter(|v| !tail.contains(v)).collect();
            self.place(fresh, windows + 1);
            if self.done() {
                return;
            }
        }
    }
}

/// A `(k, ell)`-path with `spec.edge_count()` edges using only `edge_ids`.
pub fn find_path_in(host: &Hypergraph, edge_ids: &[usize], spec: PathSpec) -> Option<Vec<Vertex>> {
    let m = spec.edge_count();
    if host.uniformity() != spec.k() || edge_ids.len() < m || host.vertex_count() < spec.n() {
        return None;
    }
    let mut search = PathSearch::new(host, edge_ids, spec.ell(), Some(m));
    search.run();
    (search.best_windows >= m).then(|| search.best_seq[..spec.n()].to_vec())
}

/// The longest `(k, ell)`-path using only `edge_ids`, as its vertex sequence
/// (empty when there are no edges).
pub fn longest_path_in(host: &Hypergraph, edge_ids: &[usize], ell: usize) -> Vec<Vertex> {
    if edge_ids.is_empty() || ell >= host.uniformity() {
        return Vec::new();
    }
    let mut search = PathSearch::new(host, edge_ids, ell, None);
    search.run();
    search.best_seq
}

/// A tight cycle on at least `spec.min_length()` vertices using only `edge_ids`.
pub fn find_tight_cycle_in(host: &Hypergraph, edge_ids: &[usize], spec: CycleSpec) -> Option<Vec<Vertex>> {
    let k = host.uniformity();
    if k != spec.k() || edge_ids.len() < spec.min_length() || host.vertex_count() < spec.min_length() {
        return None;
    }
    let set: HashSet<&[Vertex]> = edge_ids.iter().map(|&i| host.edge(i)).collect();
    let mut incident = vec![Vec::new(); host.vertex_count()];
    for &i in edge_ids {
        for &v in host.edge(i) {
            incident[v as usize].push(i);
        }
    }
    let mut cs = CycleSearch {
        host,
        k,
        min_len: spec.min_length(),
        set,
        incident,
        used: vec![false; host.vertex_count()],
        seq: Vec::new(),
        found: None,
    };
    for &i in edge_ids {
        let e = host.edge(i);
        // rotate so the cycle starts at its smallest vertex
        let first = e[0];
        let rest: Vec<Vertex> = e[1..].to_vec();
        cs.used[first as usize] = true;
        cs.seq.push(first);
        cs.permute_start(&rest, &mut vec![false; rest.len()]);
        cs.seq.pop();
        cs.used[first as usize] = false;
        if cs.found.is_some() {
            break;
        }
    }
    cs.found
}

struct CycleSearch<'a> {
    host: &'a Hypergraph,
    k: usize,
    min_len: usize,
    set: HashSet<&'a [Vertex]>,
    incident: Vec<Vec<usize>>,
    used: Vec<bool>,
    seq: Vec<Vertex>,
    found: Option<Vec<Vertex>>,
}

impl CycleSearch<'_> {
    fn permute_start(&mut self, rest: &[Vertex], taken: &mut Vec<bool>) {
        if self.seq.len() == self.k {
            self.extend();
            return;
        }
        for i in 0..rest.len() {
            if taken[i] {
                continue;
            }
            taken[i] = true;
            self.used[rest[i] as usize] = true;
            self.seq.push(rest[i]);
            self.permute_start(rest, taken);
            self.seq.pop();
            self.used[rest[i] as usize] = false;
            taken[i] = false;
            if self.found.is_some() {
                return;
            }
        }
    }

    fn is_edge(&self, window: &[Vertex]) -> bool {
        let mut w = window.to_vec();
        w.sort_unstable();
        self.set.contains(w.as_slice())
    }

    fn closes(&self) -> bool {
        let p = self.seq.len();
        (1..self.k).all(|i| {
            let w: Vec<Vertex> = self.seq[p - self.k + i..].iter().chain(&self.seq[..i]).copied().collect();
            self.is_edge(&w)
        })
    }

    fn extend(&mut self) {
        let p = self.seq.len();
        if p >= self.min_len && p > self.k && self.closes() {
            self.found = Some(self.seq.clone());
            return;
        }
        let tail: Vec<Vertex> = self.seq[p - (self.k - 1)..].to_vec();
        let start = self.seq[0];
        let cands = match tail.first() {
            Some(&t) => self.incident[t as usize].clone(),
            None => (0..self.host.edge_count()).collect(),
        };
        for ei in cands {
            let e = self.host.edge(ei);
            if !self.set.contains(e) || !tail.iter().all(|t| e.contains(t)) {
                continue;
            }
            let Some(&v) = e.iter().find(|v| !tail.contains(v)) else { continue };
            if self.used[v as usize] || v < start {
                continue;
            }
            self.used[v as usize] = true;
            self.seq.push(v);
            self.extend();
            self.seq.pop();
            self.used[v as usize] = false;
            if self.found.is_some() {
                return;
            }
        }
    }
}

fn check_uniformity(host: &Hypergraph, k: usize) -> Result<(), SearchError> {
    if host.uniformity() != k {
        return Err(SearchError::UniformityMismatch {
            host: host.uniformity(),
            target: k,
        });
    }
    Ok(())
}

/// A monochromatic copy of the path, if any color class contains one.
pub fn contains_mono_path(
    host: &Hypergraph,
    coloring: &EdgeColoring,
    spec: PathSpec,
) -> Result<Option<PathWitness>, SearchError> {
    check_uniformity(host, spec.k())?;
    coloring.validate(host, coloring.num_colors())?;
    for c in 0..coloring.num_colors() as Color {
        if let Some(vertices) = find_path_in(host, &coloring.class(c), spec) {
            return Ok(Some(PathWitness { vertices, color: c }));
        }
    }
    Ok(None)
}

/// A monochromatic tight cycle on at least `spec.min_length()` vertices.
pub fn contains_mono_tight_cycle_geq(
    host: &Hypergraph,
    coloring: &EdgeColoring,
    spec: CycleSpec,
) -> Result<Option<CycleWitness>, SearchError> {
    check_uniformity(host, spec.k())?;
    coloring.validate(host, coloring.num_colors())?;
    for c in 0..coloring.num_colors() as Color {
        if let Some(vertices) = find_tight_cycle_in(host, &coloring.class(c), spec) {
            return Ok(Some(CycleWitness { vertices, color: c }));
        }
    }
    Ok(None)
}

/// A monochromatic member of `target`.
pub fn find_mono_target(
    host: &Hypergraph,
    coloring: &EdgeColoring,
    target: &Target,
) -> Result<Option<Witness>, SearchError> {
    Ok(match target {
        Target::Path(p) => contains_mono_path(host, coloring, *p)?.map(Witness::Path),
        Target::CycleGeq(c) => contains_mono_tight_cycle_geq(host, coloring, *c)?.map(Witness::Cycle),
    })
}

/// Whether the edges `edge_ids` (all one color) contain a member of `target`.
pub(crate) fn class_contains(host: &Hypergraph, edge_ids: &[usize], target: &Target) -> bool {
    match target {
        Target::Path(p) => find_path_in(host, edge_ids, *p).is_some(),
        Target::CycleGeq(c) => find_tight_cycle_in(host, edge_ids, *c).is_some(),
    }
}

/// Longest monochromatic path of one color class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorPathReport {
    pub color: Color,
    /// Vertex count of the longest path (0 for an empty class).
    pub vertices: usize,
    pub witness: Vec<Vertex>,
}

/// For each color, the largest `p` such that a monochromatic `(k, ell)`-path
/// on `p` vertices exists.
pub fn longest_mono_path(
    host: &Hypergraph,
    coloring: &EdgeColoring,
    k: usize,
    ell: usize,
) -> Result<Vec<ColorPathReport>, SearchError> {
    check_uniformity(host, k)?;
    if ell >= k {
        return Err(SearchError::Pattern(crate::hypercore::HypergraphError::Overlap { k, ell }));
    }
    coloring.validate(host, coloring.num_colors())?;
    Ok((0..coloring.num_colors() as Color)
        .map(|c| {
            let witness = longest_path_in(host, &coloring.class(c), ell);
            ColorPathReport {
                color: c,
                vertices: witness.len(),
                witness,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{complete_hypergraph, generate_path, generate_tight_cycle};

    fn mono(h: &Hypergraph) -> EdgeColoring {
        EdgeColoring::new(vec![0; h.edge_count()])
    }

    /// K4 colored triangle {01,02,12} / star {03,13,23}.
    fn k4_triangle_star() -> (Hypergraph, EdgeColoring) {
        let k4 = complete_hypergraph(4, 2).unwrap();
        let colors = k4.edges().iter().map(|e| u32::from(e.contains(&3))).collect();
        (k4, EdgeColoring::new(colors))
    }

    #[test]
    fn longest_examples() {
        let p4 = generate_path(PathSpec::new(2, 1, 4).unwrap());
        assert_eq!(longest_mono_path(&p4, &mono(&p4), 2, 1).unwrap()[0].vertices, 4);
        let (k4, c) = k4_triangle_star();
        let r = longest_mono_path(&k4, &c, 2, 1).unwrap();
        assert_eq!((r[0].vertices, r[1].vertices), (3, 3));
        let k5 = complete_hypergraph(5, 3).unwrap();
        assert_eq!(longest_mono_path(&k5, &mono(&k5), 3, 2).unwrap()[0].vertices, 5);
    }

    #[test]
    fn contains_examples() {
        let spec = PathSpec::new(2, 1, 4).unwrap();
        let (k4, c) = k4_triangle_star();
        assert!(contains_mono_path(&k4, &c, spec).unwrap().is_none());
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let w = contains_mono_path(&single, &mono(&single), PathSpec::new(3, 1, 3).unwrap()).unwrap();
        assert!(w.is_some());
        assert!(matches!(
            contains_mono_path(&single, &mono(&single), spec),
            Err(SearchError::UniformityMismatch { .. })
        ));
    }

    #[test]
    fn every_two_coloring_of_k5_has_mono_p4() {
        let k5 = complete_hypergraph(5, 2).unwrap();
        let spec = PathSpec::new(2, 1, 4).unwrap();
        for mask in 0u32..1 << 10 {
            let c = EdgeColoring::new((0..10).map(|i| (mask >> i) & 1).collect());
            let w = contains_mono_path(&k5, &c, spec).unwrap();
            let w = w.expect("K5 arrows P4");
            assert!(w.verify(&k5, &c, 1));
        }
    }

    #[test]
    fn cycle_examples() {
        let k5 = complete_hypergraph(5, 3).unwrap();
        let spec5 = CycleSpec::new(3, 5).unwrap();
        let w = contains_mono_tight_cycle_geq(&k5, &mono(&k5), spec5).unwrap().unwrap();
        assert!(w.verify(&k5, &mono(&k5)));
        let p7 = generate_path(PathSpec::new(3, 2, 7).unwrap());
        assert!(contains_mono_tight_cycle_geq(&p7, &mono(&p7), spec5).unwrap().is_none());
        let c5 = generate_tight_cycle(3, 5).unwrap();
        assert!(contains_mono_tight_cycle_geq(&c5, &mono(&c5), spec5).unwrap().is_some());
        let spec6 = CycleSpec::new(3, 6).unwrap();
        assert!(contains_mono_tight_cycle_geq(&c5, &mono(&c5), spec6).unwrap().is_none());
    }

    #[test]
    fn interior_link_contains_short_path() {
        // P7^(3) interior vertex 3: its link contains a graph P4
        let p7 = generate_path(PathSpec::new(3, 2, 7).unwrap());
        let link = crate::hypercore::link_graph(&p7, 3).unwrap();
        let all: Vec<usize> = (0..link.edge_count()).collect();
        assert!(find_path_in(&link, &all, PathSpec::new(2, 1, 4).unwrap()).is_some());
    }

    #[test]
    fn loose_and_overlapping_paths() {
        for (k, l, n) in [(3, 1, 7), (4, 2, 8), (5, 3, 9), (5, 3, 11), (4, 0, 12), (5, 4, 8)] {
            let spec = PathSpec::new(k, l, n).unwrap();
            let p = generate_path(spec);
            let w = contains_mono_path(&p, &mono(&p), spec).unwrap().unwrap();
            assert!(w.verify(&p, &mono(&p), l));
            let longer = PathSpec::with_edges(k, l, spec.edge_count() + 1).unwrap();
            assert!(contains_mono_path(&p, &mono(&p), longer).unwrap().is_none());
        }
    }
}
