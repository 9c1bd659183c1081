//! Exhaustive decision of the arrow relation `H ->_r target`.
//!
//! Edges are colored in a fixed order (descending degree sum, ties by edge
//! index). A color is admissible for an edge when its class stays free of the
//! target; edge `i` may open at most one new color (first-seen symmetry
//! breaking). The search tree is cut at a fixed depth into independent
//! subtrees, chosen from the instance alone, so the outcome, the witness and
//! the node accounting do not depend on how many threads run them.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::hypercore::{Color, EdgeColoring, Hypergraph, Target};

use super::detect::class_contains;
use super::SearchError;

/// Search resources. `node_budget = None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: Option<u64>,
    pub threads: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            node_budget: Some(DEFAULT_NODE_BUDGET),
            threads: 1,
        }
    }
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Subtrees are split off once this many search prefixes exist.
const SPLIT_TARGET: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowOutcome {
    Arrows,
    /// An avoiding coloring: the least one in the search order.
    Avoided(EdgeColoring),
    /// The node budget ran out before a decision.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecision {
    pub outcome: ArrowOutcome,
    pub stats: SearchStats,
}

impl ArrowDecision {
    pub fn is_arrows(&self) -> bool {
        self.outcome == ArrowOutcome::Arrows
    }

    pub fn is_unknown(&self) -> bool {
        self.outcome == ArrowOutcome::Unknown
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.outcome {
            ArrowOutcome::Avoided(c) => Some(c),
            _ => None,
        }
    }
}

/// Edge indices ordered by descending degree sum, ties by index.
pub fn search_order(host: &Hypergraph) -> Vec<usize> {
    let deg = host.degrees();
    let mut order: Vec<usize> = (0..host.edge_count()).collect();
    let key = |i: usize| host.edge(i).iter().map(|&v| deg[v as usize]).sum::<usize>();
    order.sort_by_key(|&i| (std::cmp::Reverse(key(i)), i));
    order
}

struct Problem<'a> {
    host: &'a Hypergraph,
    r: usize,
    target: &'a Target,
    order: Vec<usize>,
    /// Pre-assigned colors by search position.
    fixed: Vec<Option<Color>>,
    any_fixed: bool,
}

/// A partial coloring along the search order.
#[derive(Clone)]
struct State {
    assign: Vec<Color>,
    classes: Vec<Vec<usize>>,
    max_color: Option<Color>,
}

impl State {
    fn root(r: usize) -> Self {
        Self {
            assign: Vec::new(),
            classes: vec![Vec::new(); r],
            max_color: None,
        }
    }
}

enum Flow {
    Found(Vec<Color>),
    Exhausted,
    OutOfBudget,
    Cancelled,
}

struct Counter {
    nodes: u64,
    prunes: u64,
    budget: Option<u64>,
}

impl Problem<'_> {
    /// Colors to try at the next position, in order.
    fn choices(&self, st: &State) -> std::ops::RangeInclusive<Color> {
        if let Some(c) = self.fixed[st.assign.len()] {
            return c..=c;
        }
        // symmetry breaking is only sound when no color is pinned
        let open = if self.any_fixed {
            self.r as Color - 1
        } else {
            st.max_color.map_or(0, |m| m + 1)
        };
        0..=open.min(self.r as Color - 1)
    }

    /// Whether color `c` is admissible for the next edge.
    fn admissible(&self, st: &mut State, c: Color, ctr: &mut Counter) -> bool {
        let e = self.order[st.assign.len()];
        let class = &mut st.classes[c as usize];
        if class.len() + 1 < self.target.min_edges() {
            return true;
        }
        class.push(e);
        let bad = class_contains(self.host, class, self.target);
        class.pop();
        if bad {
            ctr.prunes += 1;
        }
        !bad
    }

    fn push(&self, st: &mut State, c: Color) {
        let e = self.order[st.assign.len()];
        st.classes[c as usize].push(e);
        st.assign.push(c);
        st.max_color = Some(st.max_color.map_or(c, |m| m.max(c)));
    }

    fn pop(&self, st: &mut State, prev_max: Option<Color>) {
        let c = st.assign.pop().expect("non-empty");
        st.classes[c as usize].pop();
        st.max_color = prev_max;
    }

    fn dfs(&self, st: &mut State, ctr: &mut Counter, cancel: &dyn Fn() -> bool) -> Flow {
        if st.assign.len() == self.order.len() {
            return Flow::Found(st.assign.clone());
        }
        for c in self.choices(st) {
            if !self.admissible(st, c, ctr) {
                continue;
            }
            ctr.nodes += 1;
            if ctr.budget.is_some_and(|b| ctr.nodes > b) {
                return Flow::OutOfBudget;
            }
            if ctr.nodes.is_multiple_of(1024) && cancel() {
                return Flow::Cancelled;
            }
            let prev = st.max_color;
            self.push(st, c);
            let flow = self.dfs(st, ctr, cancel);
            self.pop(st, prev);
            if !matches!(flow, Flow::Exhausted) {
                return flow;
            }
        }
        Flow::Exhausted
    }

    fn to_coloring(&self, assign: &[Color]) -> EdgeColoring {
        let mut colors = vec![0; self.order.len()];
        for (pos, &e) in self.order.iter().enumerate() {
            colors[e] = assign[pos];
        }
        EdgeColoring::new(colors)
    }
}

struct SubResult {
    flow: Flow,
    nodes: u64,
    prunes: u64,
}

/// Decides whether every `r`-coloring of `host` contains a monochromatic
/// member of `target`.
pub fn arrows(host: &Hypergraph, r: usize, target: &Target, limits: SearchLimits) -> Result<ArrowDecision, SearchError> {
    extend_avoiding(host, r, target, &[], limits)
}

/// Like [`arrows`], but edges with `fixed[i] = Some(c)` keep color `c`; an
/// empty `fixed` pins nothing. `Arrows` then means no avoiding extension.
pub fn extend_avoiding(
    host: &Hypergraph,
    r: usize,
    target: &Target,
    fixed: &[Option<Color>],
    limits: SearchLimits,
) -> Result<ArrowDecision, SearchError> {
    if r == 0 {
        return Err(SearchError::ZeroColors);
    }
    if host.uniformity() != target.k() {
        return Err(SearchError::UniformityMismatch {
            host: host.uniformity(),
            target: target.k(),
        });
    }
    if !fixed.is_empty() && fixed.len() != host.edge_count() {
        return Err(SearchError::Pattern(crate::hypercore::HypergraphError::ColoringLength {
            edges: host.edge_count(),
            colors: fixed.len(),
        }));
    }
    if let Some(c) = fixed.iter().flatten().find(|&&c| c as usize >= r) {
        return Err(SearchError::Pattern(crate::hypercore::HypergraphError::ColorOutOfRange { color: *c, r }));
    }
    let order = search_order(host);
    let fixed_pos: Vec<Option<Color>> = order.iter().map(|&e| fixed.get(e).copied().flatten()).collect();
    let p = Problem {
        host,
        r,
        target,
        any_fixed: fixed_pos.iter().any(Option::is_some),
        fixed: fixed_pos,
        order,
    };
    let mut ctr = Counter {
        nodes: 0,
        prunes: 0,
        budget: limits.node_budget,
    };
    let decision = |outcome, ctr: &Counter| ArrowDecision {
        outcome,
        stats: SearchStats {
            nodes: ctr.nodes,
            prunes: ctr.prunes,
        },
    };

    // breadth-first split into prefixes, kept in search order
    let mut frontier = vec![State::root(r)];
    while frontier.len() < SPLIT_TARGET && frontier[0].assign.len() < p.order.len() {
        let mut next = Vec::new();
        for mut st in frontier {
            for c in p.choices(&st) {
                if !p.admissible(&mut st, c, &mut ctr) {
                    continue;
                }
                ctr.nodes += 1;
                if ctr.budget.is_some_and(|b| ctr.nodes > b) {
                    return Ok(decision(ArrowOutcome::Unknown, &ctr));
                }
                let mut child = st.clone();
                p.push(&mut child, c);
                next.push(child);
            }
        }
        if next.is_empty() {
            return Ok(decision(ArrowOutcome::Arrows, &ctr));
        }
        frontier = next;
    }
    if frontier[0].assign.len() == p.order.len() {
        let c = p.to_coloring(&frontier[0].assign);
        return Ok(decision(ArrowOutcome::Avoided(c), &ctr));
    }

    let remaining = limits.node_budget.map(|b| b - ctr.nodes);
    let results: Vec<Mutex<Option<SubResult>>> = frontier.iter().map(|_| Mutex::new(None)).collect();
    let next_index = AtomicUsize::new(0);
    let stop_at = AtomicUsize::new(usize::MAX);
    let run = || loop {
        let i = next_index.fetch_add(1, Ordering::Relaxed);
        if i >= frontier.len() || i > stop_at.load(Ordering::Relaxed) {
            break;
        }
        let mut st = frontier[i].clone();
        let mut sub = Counter {
            nodes: 0,
            prunes: 0,
            budget: remaining,
        };
        let cancel = || stop_at.load(Ordering::Relaxed) < i;
        let flow = p.dfs(&mut st, &mut sub, &cancel);
        if matches!(flow, Flow::Found(_) | Flow::OutOfBudget) {
            stop_at.fetch_min(i, Ordering::Relaxed);
        }
        *results[i].lock().expect("result slot") = Some(SubResult {
            flow,
            nodes: sub.nodes,
            prunes: sub.prunes,
        });
    };
    let threads = limits.threads.max(1).min(frontier.len());
    if threads == 1 {
        run();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(run);
            }
        });
    }

    // reduce in prefix order, as a sequential run would have
    for slot in results {
        let sub = slot.into_inner().expect("result slot").expect("prefix before the stop point was searched");
        ctr.nodes += sub.nodes;
        ctr.prunes += sub.prunes;
        if ctr.budget.is_some_and(|b| ctr.nodes > b) {
            return Ok(decision(ArrowOutcome::Unknown, &ctr));
        }
        match sub.flow {
            Flow::Found(assign) => return Ok(decision(ArrowOutcome::Avoided(p.to_coloring(&assign)), &ctr)),
            Flow::OutOfBudget => return Ok(decision(ArrowOutcome::Unknown, &ctr)),
            Flow::Cancelled => unreachable!("only prefixes after the stop point are cancelled"),
            Flow::Exhausted => {}
        }
    }
    Ok(decision(ArrowOutcome::Arrows, &ctr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{complete_hypergraph, core_extend, PathSpec, Vertex};
    use crate::monosearch::find_mono_target;

    fn p4() -> Target {
        Target::Path(PathSpec::new(2, 1, 4).unwrap())
    }

    fn unlimited(threads: usize) -> SearchLimits {
        SearchLimits {
            node_budget: None,
            threads,
        }
    }

    #[test]
    fn k5_arrows_k4_avoids() {
        let k5 = complete_hypergraph(5, 2).unwrap();
        assert!(arrows(&k5, 2, &p4(), unlimited(1)).unwrap().is_arrows());
        let k4 = complete_hypergraph(4, 2).unwrap();
        let d = arrows(&k4, 2, &p4(), unlimited(1)).unwrap();
        let w = d.witness().expect("K4 avoids");
        assert!(find_mono_target(&k4, w, &p4()).unwrap().is_none());
    }

    #[test]
    fn sunflower_arrows_with_r_plus_one_petals() {
        let t = Target::Path(PathSpec::new(3, 2, 4).unwrap());
        let petals = |p: usize| {
            let singles = Hypergraph::new(1, p, (0..p as Vertex).map(|v| vec![v])).unwrap();
            core_extend(&singles, 3, 2, 1).unwrap()
        };
        assert!(arrows(&petals(4), 3, &t, unlimited(1)).unwrap().is_arrows());
        assert!(!arrows(&petals(3), 3, &t, unlimited(1)).unwrap().is_arrows());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let k6 = complete_hypergraph(6, 2).unwrap();
        let limits = SearchLimits {
            node_budget: Some(10),
            threads: 1,
        };
        assert!(arrows(&k6, 3, &p4(), limits).unwrap().is_unknown());
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let k5 = complete_hypergraph(5, 2).unwrap();
        for r in 2..=3 {
            let a = arrows(&k5, r, &p4(), unlimited(1)).unwrap();
            let b = arrows(&k5, r, &p4(), unlimited(8)).unwrap();
            assert_eq!(a, b);
        }
        let limits = |threads| SearchLimits {
            node_budget: Some(500),
            threads,
        };
        let k6 = complete_hypergraph(6, 2).unwrap();
        assert_eq!(
            arrows(&k6, 3, &p4(), limits(1)).unwrap(),
            arrows(&k6, 3, &p4(), limits(8)).unwrap()
        );
    }

    #[test]
    fn pinned_colors_are_respected() {
        let k4 = complete_hypergraph(4, 2).unwrap();
        let mut fixed = vec![None; 6];
        fixed[5] = Some(1);
        let d = extend_avoiding(&k4, 2, &p4(), &fixed, unlimited(1)).unwrap();
        let w = d.witness().unwrap();
        assert_eq!(w.color(5), 1);
        assert!(find_mono_target(&k4, w, &p4()).unwrap().is_none());
        let all = vec![Some(0); 6];
        assert!(extend_avoiding(&k4, 2, &p4(), &all, unlimited(1)).unwrap().is_arrows());
    }

    #[test]
    fn rejects_bad_input() {
        let k4 = complete_hypergraph(4, 3).unwrap();
        assert!(matches!(arrows(&k4, 2, &p4(), unlimited(1)), Err(SearchError::UniformityMismatch { .. })));
        assert!(matches!(arrows(&k4, 0, &p4(), unlimited(1)), Err(SearchError::ZeroColors)));
    }
}
