//! Monochromatic pattern detection, the arrow relation, exact small Ramsey
//! and size-Ramsey numbers, and canonical labels for isomorph rejection.

mod arrow;
mod canon;
mod detect;
mod exact;

pub use arrow::{arrows, extend_avoiding, search_order, ArrowDecision, ArrowOutcome, SearchLimits, SearchStats, DEFAULT_NODE_BUDGET};
pub use canon::{canonical_form, canonical_form_with_limit, canonical_host, CanonicalLabel, DEFAULT_CANON_LIMIT};
pub use detect::{
    contains_mono_path, contains_mono_tight_cycle_geq, find_mono_target, find_path_in, find_tight_cycle_in,
    longest_mono_path, longest_path_in, ColorPathReport, CycleWitness, PathWitness, Witness,
};
pub use exact::{ramsey_number_exact, size_ramsey_exact, ExactOutcome, LevelReport, RamseyResult, SizeRamseyResult};

use thiserror::Error;

use crate::hypercore::HypergraphError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("host is {host}-uniform but the target is {target}-uniform")]
    UniformityMismatch { host: usize, target: usize },
    #[error("at least one color is required")]
    ZeroColors,
    #[error("canonical labeling limited to {limit} vertices, got {vertices}")]
    CanonicalLimit { vertices: usize, limit: usize },
    #[error(transparent)]
    Pattern(#[from] HypergraphError),
}
