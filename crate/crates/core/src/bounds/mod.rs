//! Closed-form Ramsey and size-Ramsey bounds for `(k, ell)`-paths, in exact
//! rational arithmetic.

mod constants;
mod formulas;
mod report;

pub use constants::{binomial, combinatorial_constants, CombinatorialConstants};
pub use formulas::{
    afl_order, afl_ramsey_lower, afl_ramsey_lower_linear, bierbrauer_r, ceil_int, e_upper, link_size_ramsey_default,
    majority_ramsey_upper, path_matching_number, short_path_size_bounds, turan_upper_paths, valid_path_order_at_most,
    MajorityBound, ShortPathBounds,
};
pub use report::{
    composed_lower_bounds, formula, BoundEntry, BoundKind, BoundReport, ComposeInputs, DroppedEntry, LinkFamily,
    ASYMPTOTIC_NOTE,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("parameter out of range: {0}")]
    Range(String),
}
