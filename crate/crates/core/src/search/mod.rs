//! Containment tests and exact extremal numbers.

mod biclique;
mod extremal;
mod pattern;
mod subdigraph;
mod transitive;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use biclique::find_bidirectional_biclique;
pub use extremal::for_each_permutation;
pub use extremal::{
    canonical_tournament_codes, ex_exact, t_general_exact, t_transitive_exact, AugmentationWitness,
};
pub use pattern::contains_pattern;
pub use subdigraph::{
    contains_subdigraph, contains_subdigraph_through, count_copies, for_each_copy,
};
pub use transitive::{find_transitive_subtournament, find_transitive_subtournament_within};

/// Work limit for the branch-and-bound searches.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            deadline: None,
        }
    }

    pub fn timeout(d: Duration) -> Self {
        Self {
            max_nodes: None,
            deadline: Some(Instant::now() + d),
        }
    }

    /// Checked once per node; the clock is read every 1024 nodes.
    pub(crate) fn exhausted(&self, nodes: u64) -> bool {
        if self.max_nodes.is_some_and(|m| nodes >= m) {
            return true;
        }
        nodes % 1024 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Point value for a completed search, or an interval `[lower, upper]`
/// when the budget ran out first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ExtremalValue {
    Exact { value: usize },
    Bracket { lower: usize, upper: usize },
}

impl ExtremalValue {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            ExtremalValue::Exact { value } => Some(value),
            ExtremalValue::Bracket { .. } => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, ExtremalValue::Exact { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult<W> {
    pub value: ExtremalValue,
    /// A largest avoiding configuration found (size `value - 1` when exact).
    pub witness: Option<W>,
    pub nodes_explored: u64,
}
