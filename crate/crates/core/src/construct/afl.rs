use serde::Serialize;

use crate::bounds::{afl_order, path_matching_number};
use crate::hypercore::{complete_hypergraph, Color, EdgeColoring, Hypergraph, PathSpec, Target};

use super::{trace_json, ConstructError, ConstructOutput, ConstructParams, Construction};

/// Part of vertex `v` among `A_1..A_r`: the first `r - 1` parts have
/// `m' - 1` vertices each and the last part takes the rest (0-based).
pub fn afl_part_of(v: usize, r: usize, matching_number: usize) -> usize {
    v.checked_div(matching_number.saturating_sub(1)).map_or(r - 1, |p| p.min(r - 1))
}

/// The complete `k`-graph on `(r-1)(m'-1) + n - 1` vertices, each edge
/// colored by the part of its least vertex. Color `i < r - 1` has matching
/// number below `m'` and the last color spans fewer than `n` vertices.
pub fn afl_coloring(r: usize, spec: PathSpec) -> Result<(Hypergraph, EdgeColoring), ConstructError> {
    if r == 0 {
        return Err(ConstructError::Precondition("r must be positive".into()));
    }
    let (k, ell, n) = (spec.k(), spec.ell(), spec.n());
    if ell == 0 {
        return Err(ConstructError::Precondition("partition coloring needs ell >= 1".into()));
    }
    let order = afl_order(r, k, ell, n)?;
    let mp = path_matching_number(k, ell, n)?;
    let host = if order < k {
        Hypergraph::empty(k, order)
    } else {
        complete_hypergraph(order, k)?
    };
    let colors = host.edges().iter().map(|e| afl_part_of(e[0] as usize, r, mp) as Color).collect();
    Ok((host, EdgeColoring::new(colors)))
}

#[derive(Serialize)]
struct AflTrace {
    order: usize,
    matching_number: usize,
    part_sizes: Vec<usize>,
}

pub struct AflConstruction;

impl Construction for AflConstruction {
    fn name(&self) -> &'static str {
        "afl"
    }

    fn summary(&self) -> &'static str {
        "complete host split into r parts; an edge takes the part of its least vertex"
    }

    fn build(&self, p: &ConstructParams) -> Result<ConstructOutput, ConstructError> {
        let k = ConstructParams::need(p.k, "k")?;
        let ell = ConstructParams::need(p.ell, "l")?;
        let n = ConstructParams::need(p.n, "n")?;
        let spec = PathSpec::new(k, ell, n)?;
        let (host, coloring) = afl_coloring(p.r, spec)?;
        let mp = path_matching_number(k, ell, n)?;
        let order = host.vertex_count();
        let mut part_sizes = vec![0; p.r];
        for v in 0..order {
            part_sizes[afl_part_of(v, p.r, mp)] += 1;
        }
        Ok(ConstructOutput {
            construction: self.name(),
            colors_used: coloring.distinct_colors(),
            guarantee: format!("no monochromatic {spec}; R_{}({spec}) > {order}", p.r),
            trace: trace_json(&AflTrace {
                order,
                matching_number: mp,
                part_sizes,
            }),
            host,
            coloring,
            target: Target::Path(spec),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monosearch::contains_mono_path;

    #[test]
    fn k4_two_colors() {
        let spec = PathSpec::new(2, 1, 4).unwrap();
        let (h, c) = afl_coloring(2, spec).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(c.distinct_colors(), 2);
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }

    #[test]
    fn degenerate_parts() {
        let spec = PathSpec::new(3, 2, 5).unwrap();
        let (h, c) = afl_coloring(3, spec).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert!(c.colors().iter().all(|&x| x == 2));
    }

    #[test]
    fn loose_three_uniform() {
        let spec = PathSpec::new(3, 1, 7).unwrap();
        let (h, c) = afl_coloring(2, spec).unwrap();
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }

    #[test]
    fn one_color() {
        let spec = PathSpec::new(2, 1, 4).unwrap();
        let (h, c) = afl_coloring(1, spec).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert!(contains_mono_path(&h, &c, spec).unwrap().is_none());
    }
}
