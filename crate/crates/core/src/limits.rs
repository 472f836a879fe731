use serde::{Deserialize, Serialize};

/// Largest `n` each exact search accepts. Going above a limit yields
/// [`Error::CapExceeded`](crate::Error::CapExceeded) instead of an
/// approximate answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub chromatic: usize,
    pub feedback: usize,
    pub forest: usize,
    pub weak_forest: usize,
    pub homogeneous: usize,
    pub q5: usize,
    pub expansion: usize,
    pub ex: usize,
    pub t_transitive: usize,
    pub t_general: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            chromatic: 24,
            feedback: 24,
            forest: 20,
            weak_forest: 12,
            homogeneous: 64,
            q5: 15,
            expansion: 24,
            ex: 7,
            t_transitive: 8,
            t_general: 6,
        }
    }
}
