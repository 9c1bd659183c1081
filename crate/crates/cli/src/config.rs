use std::path::PathBuf;

use pathramsey::monosearch::{SearchLimits, DEFAULT_NODE_BUDGET};
use pathramsey::FORMAT_VERSION;
use serde::{Deserialize, Serialize};

/// Resources and output location shared by every command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Search nodes per decision; 0 means unlimited.
    pub node_budget: u64,
    pub threads: usize,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub format: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            seed: 0,
            out_dir: PathBuf::from("ramsey-out"),
            format: FORMAT_VERSION,
        }
    }
}

impl RunConfig {
    pub fn limits(&self) -> SearchLimits {
        SearchLimits {
            node_budget: (self.node_budget > 0).then_some(self.node_budget),
            threads: self.threads.max(1),
        }
    }
}
