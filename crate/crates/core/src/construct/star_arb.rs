use serde::Serialize;

use crate::decomp::{arboricity_decompose, star_forest_split};
use crate::hypercore::{Color, EdgeColoring, Hypergraph, PathSpec, Target};

use super::{trace_json, ConstructError, ConstructOutput, ConstructParams, Construction};

#[derive(Clone, Debug, Serialize)]
pub struct StarArbTrace {
    pub arboricity: usize,
    /// Edge indices of each color class; every class is a star forest.
    pub star_forests: Vec<Vec<usize>>,
}

/// Colors a graph with `|E| <= r^2 / 2` so that every color class is a star
/// forest, hence free of `P_4`. Uses one color per nonempty star forest
/// after splitting each forest of an optimal forest decomposition in two.
pub fn star_arboricity_coloring(g: &Hypergraph, r: usize) -> Result<(EdgeColoring, StarArbTrace), ConstructError> {
    if 2 * g.edge_count() > r * r {
        return Err(ConstructError::Precondition(format!(
            "|E| = {} exceeds r^2/2 = {}",
            g.edge_count(),
            (r * r) as f64 / 2.0
        )));
    }
    let dec = arboricity_decompose(g)?;
    let a = dec.arboricity();
    if 2 * a > r {
        return Err(ConstructError::StarArboricity {
            arboricity: a,
            r,
            witness: dec.witness,
        });
    }
    let mut star_forests = Vec::new();
    for forest in &dec.forests {
        for half in star_forest_split(g, forest)? {
            if !half.is_empty() {
                star_forests.push(half);
            }
        }
    }
    let mut colors = vec![0 as Color; g.edge_count()];
    for (c, sf) in star_forests.iter().enumerate() {
        for &i in sf {
            colors[i] = c as Color;
        }
    }
    Ok((EdgeColoring::new(colors), StarArbTrace { arboricity: a, star_forests }))
}

pub struct StarArbConstruction;

impl Construction for StarArbConstruction {
    fn name(&self) -> &'static str {
        "star-arb"
    }

    fn summary(&self) -> &'static str {
        "forest decomposition split into star forests, one color each; avoids P4"
    }

    fn build(&self, p: &ConstructParams) -> Result<ConstructOutput, ConstructError> {
        let host = p.host()?.clone();
        let (coloring, trace) = star_arboricity_coloring(&host, p.r)?;
        let spec = PathSpec::new(2, 1, 4)?;
        Ok(ConstructOutput {
            construction: self.name(),
            colors_used: coloring.num_colors(),
            guarantee: format!(
                "no monochromatic P4; arboricity {}, {} star forests",
                trace.arboricity,
                trace.star_forests.len()
            ),
            trace: trace_json(&trace),
            host,
            coloring,
            target: Target::Path(spec),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::is_star_forest;
    use crate::hypercore::complete_hypergraph;
    use crate::monosearch::contains_mono_path;

    fn check(g: &Hypergraph, r: usize) {
        let (c, tr) = star_arboricity_coloring(g, r).unwrap();
        assert!(c.num_colors() <= r);
        for sf in &tr.star_forests {
            assert!(is_star_forest(g, sf));
        }
        let spec = PathSpec::new(2, 1, 4).unwrap();
        assert!(contains_mono_path(g, &c, spec).unwrap().is_none());
    }

    #[test]
    fn c4_and_k4() {
        let c4 = Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        check(&c4, 4);
        check(&complete_hypergraph(4, 2).unwrap(), 4);
        check(&Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap(), 2);
    }

    #[test]
    fn too_many_edges() {
        let g = Hypergraph::new(2, 6, (1..6).map(|v| vec![0, v])).unwrap();
        assert!(matches!(star_arboricity_coloring(&g, 3), Err(ConstructError::Precondition(_))));
    }

    #[test]
    fn odd_r_parity() {
        // triangle: 3 edges <= 9/2 with r = 3, arboricity 2 needs 4 star forests
        let g = complete_hypergraph(3, 2).unwrap();
        match star_arboricity_coloring(&g, 3) {
            Err(ConstructError::StarArboricity { arboricity, witness, .. }) => {
                assert_eq!(arboricity, 2);
                assert_eq!(witness.len(), 3);
            }
            other => panic!("expected parity error, got {other:?}"),
        }
    }
}
