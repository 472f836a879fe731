//! Re-verifiable containment certificates.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Injective map from pattern vertices to host vertices: `map[u]` is the image of `u`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct VertexEmbedding {
    pub map: Vec<usize>,
}

impl VertexEmbedding {
    pub fn new(map: Vec<usize>) -> Self {
        Self { map }
    }

    /// Checks injectivity and that every arc of `pattern` lands on an arc of `host`.
    pub fn verify<H: Digraph + ?Sized, P: Digraph + ?Sized>(
        &self,
        host: &H,
        pattern: &P,
    ) -> Result<()> {
        let k = pattern.order();
        if self.map.len() != k {
            return Err(Error::invalid(format!(
                "map has {} entries, pattern has {k} vertices",
                self.map.len()
            )));
        }
        let n = host.order();
        let mut used = vec![false; n];
        for &x in &self.map {
            if x >= n {
                return Err(Error::invalid(format!("image {} outside host", x + 1)));
            }
            if used[x] {
                return Err(Error::invalid(format!("image {} used twice", x + 1)));
            }
            used[x] = true;
        }
        for u in 0..k {
            for v in 0..k {
                if pattern.has_arc(u, v) && !host.has_arc(self.map[u], self.map[v]) {
                    return Err(Error::invalid(format!(
                        "arc {} -> {} maps to missing arc {} -> {}",
                        u + 1,
                        v + 1,
                        self.map[u] + 1,
                        self.map[v] + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Strictly increasing row and column selections of a host matrix covering
/// every 1 of a pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PatternEmbedding {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl PatternEmbedding {
    pub fn verify(&self, host: &BinaryMatrix, pattern: &BinaryMatrix) -> Result<()> {
        if self.rows.len() != pattern.rows() || self.cols.len() != pattern.cols() {
            return Err(Error::invalid(
                "selection sizes differ from pattern dimensions",
            ));
        }
        let increasing = |s: &[usize], bound: usize| {
            s.windows(2).all(|w| w[0] < w[1]) && s.last().is_none_or(|&x| x < bound)
        };
        if !increasing(&self.rows, host.rows()) || !increasing(&self.cols, host.cols()) {
            return Err(Error::invalid(
                "selected rows/columns must be strictly increasing and in range",
            ));
        }
        for (i, j) in pattern.ones() {
            if !host.get(self.rows[i], self.cols[j]) {
                return Err(Error::invalid(format!(
                    "pattern 1 at ({}, {}) maps to host 0 at ({}, {})",
                    i + 1,
                    j + 1,
                    self.rows[i] + 1,
                    self.cols[j] + 1
                )));
            }
        }
        Ok(())
    }
}
