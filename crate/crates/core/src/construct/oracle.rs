use thiserror::Error;

use crate::bounds::afl_order;
use crate::hypercore::{Color, EdgeColoring, Hypergraph, Target};
use crate::monosearch::{extend_avoiding, ArrowOutcome, SearchError, SearchLimits};

use super::afl::afl_part_of;
use crate::bounds::path_matching_number;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("no avoiding {r}-coloring exists for the instance")]
    Infeasible { r: usize, instance: Hypergraph },
    #[error("search budget exhausted on the instance")]
    Budget { instance: Hypergraph },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Colors a host with `r` colors avoiding a target, keeping pinned colors.
pub trait ColoringOracle: Send + Sync {
    fn name(&self) -> &'static str;

    /// `R` such that every host on fewer than `R` non-isolated vertices can
    /// be colored, when the oracle knows one.
    fn vertex_budget(&self, r: usize, target: &Target) -> Option<usize>;

    /// `fixed` is empty or has one entry per edge.
    fn color(&self, host: &Hypergraph, r: usize, target: &Target, fixed: &[Option<Color>]) -> Result<EdgeColoring, OracleError>;
}

/// Restriction of the partition coloring of the complete host: non-isolated
/// vertices are numbered in order and each edge takes the part of its least
/// vertex.
pub struct AflOracle;

impl ColoringOracle for AflOracle {
    fn name(&self) -> &'static str {
        "afl"
    }

    fn vertex_budget(&self, r: usize, target: &Target) -> Option<usize> {
        match target {
            Target::Path(p) => afl_order(r, p.k(), p.ell(), p.n()).ok().map(|n| n + 1),
            Target::CycleGeq(_) => None,
        }
    }

    fn color(&self, host: &Hypergraph, r: usize, target: &Target, fixed: &[Option<Color>]) -> Result<EdgeColoring, OracleError> {
        if fixed.iter().any(Option::is_some) {
            return Err(OracleError::Unsupported("afl oracle cannot keep pinned colors".into()));
        }
        let Target::Path(p) = target else {
            return Err(OracleError::Unsupported("afl oracle handles path targets only".into()));
        };
        let budget = self
            .vertex_budget(r, target)
            .ok_or_else(|| OracleError::Unsupported(format!("afl oracle needs r >= 1 and a valid path, got r={r}, {p}")))?;
        let mut used: Vec<u32> = host.edges().iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        if used.len() >= budget {
            return Err(OracleError::Infeasible { r, instance: host.clone() });
        }
        let mp = path_matching_number(p.k(), p.ell(), p.n()).expect("validated by vertex_budget");
        let colors = host
            .edges()
            .iter()
            .map(|e| {
                let least = used.binary_search(&e[0]).expect("vertex present");
                afl_part_of(least, r, mp) as Color
            })
            .collect();
        Ok(EdgeColoring::new(colors))
    }
}

/// Backtracking search for an avoiding extension of the pinned colors.
pub struct ExhaustiveOracle {
    pub limits: SearchLimits,
}

impl ColoringOracle for ExhaustiveOracle {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn vertex_budget(&self, _r: usize, _target: &Target) -> Option<usize> {
        None
    }

    fn color(&self, host: &Hypergraph, r: usize, target: &Target, fixed: &[Option<Color>]) -> Result<EdgeColoring, OracleError> {
        let d = extend_avoiding(host, r, target, fixed, self.limits)?;
        match d.outcome {
            ArrowOutcome::Avoided(c) => Ok(c),
            ArrowOutcome::Arrows => Err(OracleError::Infeasible { r, instance: host.clone() }),
            ArrowOutcome::Unknown => Err(OracleError::Budget { instance: host.clone() }),
        }
    }
}

pub fn oracle_names() -> [&'static str; 2] {
    ["afl", "exhaustive"]
}

pub fn oracle(name: &str, limits: SearchLimits) -> Option<Box<dyn ColoringOracle>> {
    match name {
        "afl" => Some(Box::new(AflOracle)),
        "exhaustive" => Some(Box::new(ExhaustiveOracle { limits })),
        _ => None,
    }
}
