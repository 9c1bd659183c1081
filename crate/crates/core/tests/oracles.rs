//! Library results checked against brute-force oracles written from the
//! definitions alone.

use std::collections::BTreeSet;

use pathramsey::bounds::{afl_ramsey_lower, combinatorial_constants, majority_ramsey_upper};
use pathramsey::construct::hierarchy_coloring;
use pathramsey::decomp::{arboricity_decompose, bounded_component_coloring, component_cap, component_color_count, is_forest, monochromatic_components, DEFAULT_REPAIR_BUDGET};
use pathramsey::hypercore::{k_subsets, EdgeColoring, Hypergraph, PathSpec, Target, Vertex};
use pathramsey::monosearch::{arrows, canonical_form, contains_mono_path, ramsey_number_exact, ExactOutcome, SearchLimits};
use proptest::prelude::*;

/// Whether some vertex sequence of length `n` has every window (stepped by
/// `k - ell`) an edge of color `c`, for some `c`.
fn naive_mono_path(h: &Hypergraph, coloring: &EdgeColoring, k: usize, ell: usize, n: usize) -> bool {
    fn window_color(h: &Hypergraph, coloring: &EdgeColoring, w: &[Vertex]) -> Option<u32> {
        let mut w = w.to_vec();
        w.sort_unstable();
        h.find_edge(&w).map(|i| coloring.color(i))
    }
    fn go(h: &Hypergraph, col: &EdgeColoring, k: usize, s: usize, n: usize, seq: &mut Vec<Vertex>, color: Option<u32>) -> bool {
        let len = seq.len();
        let mut color = color;
        // a window ends at len once len >= k and (len - k) is a multiple of s
        if len >= k && (len - k).is_multiple_of(s) {
            match window_color(h, col, &seq[len - k..]) {
                None => return false,
                Some(c) if color.is_some_and(|x| x != c) => return false,
                Some(c) => color = Some(c),
            }
        }
        if len == n {
            return true;
        }
        for v in 0..h.vertex_count() as Vertex {
            if !seq.contains(&v) {
                seq.push(v);
                let found = go(h, col, k, s, n, seq, color);
                seq.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    go(h, coloring, k, k - ell, n, &mut Vec::new(), None)
}

fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.uniformity() != b.uniformity() {
        return false;
    }
    let target: BTreeSet<Vec<Vertex>> = b.edges().iter().cloned().collect();
    let mut perm: Vec<Vertex> = (0..a.vertex_count() as Vertex).collect();
    fn permutations(perm: &mut Vec<Vertex>, i: usize, f: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        if i == perm.len() {
            return f(perm);
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            if permutations(perm, i + 1, f) {
                return true;
            }
            perm.swap(i, j);
        }
        false
    }
    permutations(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|e| {
            let mut m: Vec<Vertex> = e.iter().map(|&v| p[v as usize]).collect();
            m.sort_unstable();
            target.contains(&m)
        })
    })
}

/// `max_S ceil(|E(S)| / (|S| - 1))` over vertex subsets with `|S| >= 2`.
fn nash_williams(g: &Hypergraph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let inside = g.edges().iter().filter(|e| e.iter().all(|&v| mask >> v & 1 == 1)).count();
        best = best.max(inside.div_ceil(size - 1));
    }
    best
}

fn host_from_mask(k: usize, n: usize, mask: &[bool]) -> Hypergraph {
    let edges: Vec<Vec<Vertex>> = k_subsets(n, k).into_iter().zip(mask).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    Hypergraph::new(k, n, edges).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    k_subsets(n, k).len()
}

/// Random `k`-graph on `n` vertices as (k, n, edge mask).
fn hosts(ks: std::ops::RangeInclusive<usize>, ns: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Hypergraph> {
    (ks, ns)
        .prop_filter("k <= n", |(k, n)| k <= n)
        .prop_flat_map(|(k, n)| proptest::collection::vec(any::<bool>(), binom(n, k)).prop_map(move |m| host_from_mask(k, n, &m)))
}

fn colored_hosts() -> impl Strategy<Value = (Hypergraph, EdgeColoring)> {
    hosts(2..=3, 3..=6).prop_flat_map(|h| {
        let m = h.edge_count();
        (Just(h), proptest::collection::vec(0u32..2, m)).prop_map(|(h, c)| (h, EdgeColoring::new(c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn detector_matches_naive_search((h, c) in colored_hosts(), ell_off in 0usize..3, edges in 1usize..4) {
        let k = h.uniformity();
        let ell = ell_off.min(k - 1);
        let spec = PathSpec::with_edges(k, ell, edges).unwrap();
        prop_assume!(spec.n() <= h.vertex_count() + 1);
        let fast = contains_mono_path(&h, &c, spec).unwrap();
        prop_assert_eq!(fast.is_some(), naive_mono_path(&h, &c, k, ell, spec.n()));
        if let Some(w) = fast {
            prop_assert!(w.verify(&h, &c, ell));
        }
    }

    #[test]
    fn canonical_labels_decide_isomorphism(a in hosts(2..=2, 5..=5), b in hosts(2..=2, 5..=5), perm in Just((0..5u32).collect::<Vec<_>>()).prop_shuffle()) {
        let moved = a.relabel(&perm);
        prop_assert_eq!(canonical_form(&a).unwrap(), canonical_form(&moved).unwrap());
        prop_assert_eq!(canonical_form(&a).unwrap() == canonical_form(&b).unwrap(), brute_isomorphic(&a, &b));
    }

    #[test]
    fn three_graph_labels(a in hosts(3..=3, 5..=5), b in hosts(3..=3, 5..=5)) {
        prop_assert_eq!(canonical_form(&a).unwrap() == canonical_form(&b).unwrap(), brute_isomorphic(&a, &b));
    }

    #[test]
    fn arboricity_matches_nash_williams(g in hosts(2..=2, 2..=8)) {
        let dec = arboricity_decompose(&g).unwrap();
        prop_assert_eq!(dec.arboricity(), nash_williams(&g));
        let mut all: Vec<usize> = dec.forests.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
        for f in &dec.forests {
            prop_assert!(is_forest(&g, f));
        }
    }

    #[test]
    fn arrowing_is_monotone(g in hosts(2..=2, 4..=6), extra in 0usize..15) {
        let p4 = Target::Path(PathSpec::new(2, 1, 4).unwrap());
        let limits = SearchLimits::default();
        let d2 = arrows(&g, 2, &p4, limits).unwrap();
        let d3 = arrows(&g, 3, &p4, limits).unwrap();
        // more colors never help arrowing
        prop_assert!(!d3.is_arrows() || d2.is_arrows());
        let missing: Vec<Vec<Vertex>> = k_subsets(g.vertex_count(), 2).into_iter().filter(|e| !g.contains_edge(e)).collect();
        if !missing.is_empty() {
            let mut edges = g.edges().to_vec();
            edges.push(missing[extra % missing.len()].clone());
            let bigger = Hypergraph::new(2, g.vertex_count(), edges).unwrap();
            prop_assert!(!d2.is_arrows() || arrows(&bigger, 2, &p4, limits).unwrap().is_arrows());
        }
        if let Some(c) = d2.witness() {
            prop_assert!(contains_mono_path(&g, c, PathSpec::new(2, 1, 4).unwrap()).unwrap().is_none());
        }
    }

    #[test]
    fn hierarchy_small_instances(h in hosts(2..=3, 3..=7), r in 1usize..=4, m_off in 0usize..2) {
        let k = h.uniformity();
        let ell = k - 1;
        let m = (1 + m_off).min(k);
        let consts = combinatorial_constants(k, ell, m).unwrap();
        let budget = num::pow(num::BigInt::from(r), m) / &consts.g;
        prop_assume!(num::BigInt::from(h.edge_count()) <= budget);
        let (c, tr) = hierarchy_coloring(&h, r, ell, m).unwrap();
        let f: usize = consts.f.to_string().parse().unwrap();
        prop_assert!(c.num_colors() <= 2 * r * f + 1);
        prop_assert!(tr.top_layer_empty());
        prop_assert!(tr.max_out_degree <= r * f);
        let spec = PathSpec::with_edges(k, ell, m + 1).unwrap();
        prop_assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }

    #[test]
    fn bounded_components(g in hosts(2..=2, 4..=8), seed in 0u64..50) {
        let cc = bounded_component_coloring(&g, seed, DEFAULT_REPAIR_BUDGET).unwrap();
        let delta = g.degrees().into_iter().max().unwrap_or(0);
        prop_assert!(cc.num_colors <= component_color_count(delta).max(1));
        let biggest = monochromatic_components(&g, &cc.colors).iter().map(Vec::len).max().unwrap_or(0);
        prop_assert_eq!(biggest, cc.max_component);
        prop_assert!(biggest <= component_cap(delta));
    }
}

#[test]
fn closed_forms_bracket_exact_ramsey_numbers() {
    let limits = SearchLimits::default();
    for (r, k, ell, n, n_max) in [(2, 2, 1, 4, 7), (3, 2, 1, 4, 8), (2, 2, 1, 5, 8), (2, 3, 2, 4, 7), (2, 3, 1, 5, 8)] {
        let target = Target::Path(PathSpec::new(k, ell, n).unwrap());
        let res = ramsey_number_exact(&target, r, n_max, limits).unwrap();
        let ExactOutcome::Exact(exact) = res.outcome else {
            panic!("no exact value for {target} r={r}: {:?}", res.outcome);
        };
        let lower = afl_ramsey_lower(r, k, ell, n).unwrap();
        assert!(num::BigInt::from(exact) > lower, "{target} r={r}: exact {exact}, afl {lower}");
        if ell == k - 1 {
            assert!(exact <= majority_ramsey_upper(r, n, k).unwrap().ramsey_upper, "{target} r={r}");
        }
    }
}
