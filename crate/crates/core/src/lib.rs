//! Size-Ramsey workbench for uniform hypergraph paths.
//!
//! * [`hypercore`]: `k`-graphs, `(k, ell)`-paths, tight cycles, colorings and
//!   structural transforms.
//! * [`monosearch`]: monochromatic detection, the arrow relation and exact
//!   small Ramsey / size-Ramsey numbers.
//! * [`decomp`]: forest, star-forest, matching and bounded-component
//!   decompositions.
//! * [`construct`]: coloring constructions behind a name registry.
//! * [`bounds`]: exact-arithmetic bound formulas and reports.
//! * [`certificate`]: serialized, re-verifiable claims.

pub mod bounds;
pub mod certificate;
pub mod construct;
pub mod decomp;
pub mod hypercore;
pub mod monosearch;

/// Version tag carried by every JSON document this crate writes.
pub const FORMAT_VERSION: u32 = 1;
