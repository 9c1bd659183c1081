//! Exact small Ramsey and size-Ramsey numbers by exhaustive arrow decisions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hypercore::{complete_hypergraph, subsets_of, EdgeColoring, Hypergraph, Target, Vertex};

use super::arrow::{arrows, ArrowOutcome, SearchLimits, SearchStats};
use super::canon::{canonical_host, CanonicalLabel, DEFAULT_CANON_LIMIT};
use super::detect::class_contains;
use super::SearchError;

/// Result of an exact search over a bounded range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    /// The value, attained within the range.
    Exact(usize),
    /// Nothing in the range arrows: the value is at least this.
    LowerBound(usize),
    /// The node budget ran out; the value is at least `lower_bound`.
    Unknown { lower_bound: usize },
}

#[derive(Clone, Debug)]
pub struct RamseyResult {
    pub outcome: ExactOutcome,
    /// Complete host on `value` vertices, when exact.
    pub host: Option<Hypergraph>,
    /// Avoiding coloring of the complete host on `value - 1` vertices, if it
    /// has enough vertices to need one.
    pub below: Option<(Hypergraph, EdgeColoring)>,
    pub stats: SearchStats,
}

/// Smallest `N <= n_max` with `K_N^{(k)} ->_r target`.
pub fn ramsey_number_exact(target: &Target, r: usize, n_max: usize, limits: SearchLimits) -> Result<RamseyResult, SearchError> {
    if r == 0 {
        return Err(SearchError::ZeroColors);
    }
    let k = target.k();
    let start = target.min_vertices().max(k);
    let mut stats = SearchStats::default();
    let mut below = None;
    for n in start..=n_max {
        let host = complete_hypergraph(n, k)?;
        let d = arrows(&host, r, target, limits)?;
        stats.nodes += d.stats.nodes;
        stats.prunes += d.stats.prunes;
        match d.outcome {
            ArrowOutcome::Arrows => {
                return Ok(RamseyResult {
                    outcome: ExactOutcome::Exact(n),
                    host: Some(host),
                    below,
                    stats,
                })
            }
            ArrowOutcome::Avoided(c) => below = Some((host, c)),
            ArrowOutcome::Unknown => {
                return Ok(RamseyResult {
                    outcome: ExactOutcome::Unknown { lower_bound: n },
                    host: None,
                    below,
                    stats,
                })
            }
        }
    }
    Ok(RamseyResult {
        outcome: ExactOutcome::LowerBound(n_max.max(start - 1) + 1),
        host: None,
        below,
        stats,
    })
}

/// Per edge count: hosts enumerated, hosts containing the target, arrowing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub edges: usize,
    pub hosts: usize,
    pub containing_target: usize,
    pub arrowing: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug)]
pub struct SizeRamseyResult {
    pub outcome: ExactOutcome,
    /// The arrowing host with the least canonical label at the value.
    pub host: Option<Hypergraph>,
    pub levels: Vec<LevelReport>,
    pub stats: SearchStats,
}

/// Whether the enumeration may restrict to connected hosts: a host arrows a
/// connected target iff one of its components does.
fn connected_only(target: &Target) -> bool {
    target.is_connected()
}

/// All isomorphism classes of isolated-vertex-free `k`-graphs with `m + 1`
/// edges extending the given `m`-edge representatives, keyed by label.
fn extend_level(
    level: &BTreeMap<CanonicalLabel, Hypergraph>,
    k: usize,
    connected: bool,
    vertex_cap: usize,
    limit: usize,
) -> Result<BTreeMap<CanonicalLabel, Hypergraph>, SearchError> {
    let mut next = BTreeMap::new();
    for h in level.values() {
        let n = h.vertex_count();
        let min_old = usize::from(connected);
        for old in min_old..=k.min(n) {
            let fresh = k - old;
            if n + fresh > vertex_cap {
                continue;
            }
            let verts: Vec<Vertex> = (0..n as Vertex).collect();
            for mut e in subsets_of(&verts, old) {
                e.extend((n..n + fresh).map(|x| x as Vertex));
                if fresh == 0 && h.contains_edge(&e) {
                    continue;
                }
                let mut edges = h.edges().to_vec();
                edges.push(e);
                let g = Hypergraph::new(k, n + fresh, edges)?;
                let (label, rep) = canonical_host(&g, limit)?;
                next.entry(label).or_insert(rep);
            }
        }
    }
    Ok(next)
}

/// Least edge count of a `k`-graph arrowing `target`, up to `edge_budget`.
pub fn size_ramsey_exact(target: &Target, r: usize, edge_budget: usize, limits: SearchLimits) -> Result<SizeRamseyResult, SearchError> {
    if r == 0 {
        return Err(SearchError::ZeroColors);
    }
    let k = target.k();
    let vertex_cap = k * edge_budget;
    let limit = DEFAULT_CANON_LIMIT.max(vertex_cap);
    let connected = connected_only(target);
    let mut stats = SearchStats::default();
    let mut levels = Vec::new();
    let mut level: BTreeMap<CanonicalLabel, Hypergraph> = BTreeMap::new();
    if edge_budget >= 1 {
        let first = Hypergraph::new(k, k, [(0..k as Vertex).collect::<Vec<_>>()])?;
        let (label, rep) = canonical_host(&first, limit)?;
        level.insert(label, rep);
    }
    for m in 1..=edge_budget {
        if m > 1 {
            level = extend_level(&level, k, connected, vertex_cap, limit)?;
        }
        let mut report = LevelReport {
            edges: m,
            hosts: level.len(),
            ..LevelReport::default()
        };
        let mut found: Option<&Hypergraph> = None;
        if m >= target.min_edges() {
            for h in level.values() {
                let all: Vec<usize> = (0..h.edge_count()).collect();
                if !class_contains(h, &all, target) {
                    continue;
                }
                report.containing_target += 1;
                let d = arrows(h, r, target, limits)?;
                stats.nodes += d.stats.nodes;
                stats.prunes += d.stats.prunes;
                match d.outcome {
                    ArrowOutcome::Arrows => {
                        report.arrowing += 1;
                        // labels iterate in increasing order
                        found.get_or_insert(h);
                    }
                    ArrowOutcome::Avoided(_) => {}
                    ArrowOutcome::Unknown => report.unknown += 1,
                }
            }
        }
        let unknown = report.unknown > 0;
        levels.push(report);
        if let Some(h) = found {
            return Ok(SizeRamseyResult {
                outcome: ExactOutcome::Exact(m),
                host: Some(h.clone()),
                levels,
                stats,
            });
        }
        if unknown {
            return Ok(SizeRamseyResult {
                outcome: ExactOutcome::Unknown { lower_bound: m },
                host: None,
                levels,
                stats,
            });
        }
    }
    Ok(SizeRamseyResult {
        outcome: ExactOutcome::LowerBound(edge_budget + 1),
        host: None,
        levels,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::PathSpec;

    fn unlimited() -> SearchLimits {
        SearchLimits {
            node_budget: None,
            threads: 1,
        }
    }

    #[test]
    fn small_ramsey_numbers() {
        let p3 = Target::Path(PathSpec::new(2, 1, 3).unwrap());
        let r = ramsey_number_exact(&p3, 2, 4, unlimited()).unwrap();
        assert_eq!(r.outcome, ExactOutcome::Exact(3));
        let p4 = Target::Path(PathSpec::new(2, 1, 4).unwrap());
        let r = ramsey_number_exact(&p4, 2, 6, unlimited()).unwrap();
        assert_eq!(r.outcome, ExactOutcome::Exact(5));
        let r = ramsey_number_exact(&p4, 2, 4, unlimited()).unwrap();
        assert_eq!(r.outcome, ExactOutcome::LowerBound(5));
    }

    #[test]
    fn p3_needs_three_edges() {
        // both the triangle and the star K_{1,3} arrow; the triangle has the least label
        let p3 = Target::Path(PathSpec::new(2, 1, 3).unwrap());
        let r = size_ramsey_exact(&p3, 2, 3, unlimited()).unwrap();
        assert_eq!(r.outcome, ExactOutcome::Exact(3));
        assert_eq!(r.levels[2].arrowing, 2);
        let h = r.host.unwrap();
        assert!(arrows(&h, 2, &p3, unlimited()).unwrap().is_arrows());
    }

    #[test]
    fn triple_sunflower() {
        let t = Target::Path(PathSpec::new(3, 2, 4).unwrap());
        let r = size_ramsey_exact(&t, 2, 3, unlimited()).unwrap();
        assert_eq!(r.outcome, ExactOutcome::Exact(3));
        assert_eq!(r.host.unwrap().edge_count(), 3);
    }

    #[test]
    fn level_counts_for_graphs() {
        // connected graphs with 1, 2, 3 edges: 1, 1, 3 (P4, star, triangle)
        let p5 = Target::Path(PathSpec::new(2, 1, 5).unwrap());
        let r = size_ramsey_exact(&p5, 2, 3, unlimited()).unwrap();
        let hosts: Vec<usize> = r.levels.iter().map(|l| l.hosts).collect();
        assert_eq!(hosts, vec![1, 1, 3]);
        assert_eq!(r.outcome, ExactOutcome::LowerBound(4));
    }
}
