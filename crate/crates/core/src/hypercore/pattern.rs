use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError, Vertex};

/// A `(k, ell)`-path on `n` vertices: consecutive `k`-windows of a vertex
/// sequence, stepped by `k - ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathSpec {
    k: usize,
    ell: usize,
    n: usize,
}

impl PathSpec {
    pub fn new(k: usize, ell: usize, n: usize) -> Result<Self, HypergraphError> {
        if k == 0 {
            return Err(HypergraphError::ZeroUniform);
        }
        if ell >= k {
            return Err(HypergraphError::Overlap { k, ell });
        }
        if n < k {
            return Err(HypergraphError::TooFewVertices { n, k });
        }
        if !(n - ell).is_multiple_of(k - ell) {
            return Err(HypergraphError::Divisibility { k, ell, n });
        }
        Ok(Self { k, ell, n })
    }

    /// The path with `m >= 1` edges.
    pub fn with_edges(k: usize, ell: usize, m: usize) -> Result<Self, HypergraphError> {
        if ell >= k {
            return Err(HypergraphError::Overlap { k, ell });
        }
        Self::new(k, ell, ell + m.max(1) * (k - ell))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Step between consecutive windows, `k - ell`.
    pub fn step(&self) -> usize {
        self.k - self.ell
    }

    pub fn edge_count(&self) -> usize {
        (self.n - self.ell) / (self.k - self.ell)
    }

    /// Smallest valid path with at least `min_n` vertices (and at least one edge).
    pub fn at_least(k: usize, ell: usize, min_n: usize) -> Result<Self, HypergraphError> {
        if ell >= k {
            return Err(HypergraphError::Overlap { k, ell });
        }
        let s = k - ell;
        let m = if min_n <= k { 1 } else { (min_n - ell).div_ceil(s) };
        Self::with_edges(k, ell, m)
    }
}

impl fmt::Display for PathSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path:{},{},{}", self.k, self.ell, self.n)
    }
}

/// The family of tight `k`-uniform cycles on at least `min_length` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycleSpec {
    k: usize,
    min_length: usize,
}

impl CycleSpec {
    pub fn new(k: usize, min_length: usize) -> Result<Self, HypergraphError> {
        if k == 0 {
            return Err(HypergraphError::ZeroUniform);
        }
        if min_length < k + 1 {
            return Err(HypergraphError::CycleTooShort { k, min_length });
        }
        Ok(Self { k, min_length })
    }

    /// Tight cycles on at least `2k - 1` vertices.
    pub fn long_tight(k: usize) -> Result<Self, HypergraphError> {
        Self::new(k, (2 * k).saturating_sub(1).max(k + 1))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn min_length(&self) -> usize {
        self.min_length
    }
}

impl fmt::Display for CycleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle_geq:{},{}", self.k, self.min_length)
    }
}

/// A forbidden pattern: either a single path or a family of tight cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Path(PathSpec),
    CycleGeq(CycleSpec),
}

impl Target {
    pub fn k(&self) -> usize {
        match self {
            Target::Path(p) => p.k(),
            Target::CycleGeq(c) => c.k(),
        }
    }

    /// Fewest vertices any member of the target has.
    pub fn min_vertices(&self) -> usize {
        match self {
            Target::Path(p) => p.n(),
            Target::CycleGeq(c) => c.min_length(),
        }
    }

    /// Fewest edges any member of the target has.
    pub fn min_edges(&self) -> usize {
        match self {
            Target::Path(p) => p.edge_count(),
            Target::CycleGeq(c) => c.min_length(),
        }
    }

    /// Whether every member is connected (so arrowing hosts may be taken connected).
    pub fn is_connected(&self) -> bool {
        match self {
            Target::Path(p) => p.ell() > 0 || p.edge_count() == 1,
            Target::CycleGeq(_) => true,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Path(p) => p.fmt(f),
            Target::CycleGeq(c) => c.fmt(f),
        }
    }
}

impl From<PathSpec> for Target {
    fn from(p: PathSpec) -> Self {
        Target::Path(p)
    }
}

impl From<CycleSpec> for Target {
    fn from(c: CycleSpec) -> Self {
        Target::CycleGeq(c)
    }
}

/// Parses the command-line mini-syntax `path:k,l,n` or `cycle_geq:k,min`.
impl FromStr for Target {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HypergraphError::TargetSyntax(s.to_string());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind, nums.as_slice()) {
            ("path", &[k, l, n]) => Ok(Target::Path(PathSpec::new(k, l, n)?)),
            ("cycle_geq", &[k, min]) => Ok(Target::CycleGeq(CycleSpec::new(k, min)?)),
            _ => Err(bad()),
        }
    }
}

/// JSON form of a target: `{"kind", "k", "ell", "n"}`. Cycle families use
/// `ell = k - 1` and `n` for the minimum length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetRepr {
    pub kind: String,
    pub k: usize,
    pub ell: usize,
    pub n: usize,
}

impl Serialize for Target {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Target::Path(p) => TargetRepr {
                kind: "path".into(),
                k: p.k(),
                ell: p.ell(),
                n: p.n(),
            },
            Target::CycleGeq(c) => TargetRepr {
                kind: "cycle_geq".into(),
                k: c.k(),
                ell: c.k() - 1,
                n: c.min_length(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Target {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = TargetRepr::deserialize(deserializer)?;
        let t = match r.kind.as_str() {
            "path" => PathSpec::new(r.k, r.ell, r.n).map(Target::Path),
            "cycle_geq" => CycleSpec::new(r.k, r.n).map(Target::CycleGeq),
            other => return Err(serde::de::Error::custom(format!("unknown target kind {other:?}"))),
        };
        t.map_err(serde::de::Error::custom)
    }
}

/// The path itself, on vertices `0..n` in sequence order.
pub fn generate_path(spec: PathSpec) -> Hypergraph {
    let s = spec.step();
    let edges = (0..spec.edge_count()).map(|i| ((i * s) as Vertex..(i * s + spec.k()) as Vertex).collect());
    Hypergraph::new(spec.k(), spec.n(), edges).expect("windows are distinct k-sets")
}

/// A tight cycle on `len` vertices `0..len`.
pub fn generate_tight_cycle(k: usize, len: usize) -> Result<Hypergraph, HypergraphError> {
    CycleSpec::new(k, len)?;
    let edges = (0..len).map(|i| (0..k).map(|j| ((i + j) % len) as Vertex).collect());
    Hypergraph::new(k, len, edges)
}
