use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError};

/// Color id of an edge.
pub type Color = u32;

/// A total map from edge indices (canonical order) to colors in `[0, num_colors)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    /// Checks the coloring covers `host` exactly and stays within `r` colors.
    pub fn validate(&self, host: &Hypergraph, r: usize) -> Result<(), HypergraphError> {
        if self.colors.len() != host.edge_count() {
            return Err(HypergraphError::ColoringLength {
                edges: host.edge_count(),
                colors: self.colors.len(),
            });
        }
        if let Some(&c) = self.colors.iter().find(|&&c| c as usize >= r) {
            return Err(HypergraphError::ColorOutOfRange { color: c, r });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// One more than the largest color id in use (0 for the empty coloring).
    pub fn num_colors(&self) -> usize {
        self.colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Edge indices of color `c`.
    pub fn class(&self, c: Color) -> Vec<usize> {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(i, _)| i)
            .collect()
    }
}
