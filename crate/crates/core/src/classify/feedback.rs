use serde::{Deserialize, Serialize};

use super::{full_mask, require_mask_size};
use crate::bits;
use crate::digraph::Digraph;
use crate::error::{check_cap, Result};
use crate::limits::Limits;
use crate::ordering::VertexOrdering;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeedbackResult {
    pub beta: usize,
    pub ordering: Vec<usize>,
}

impl FeedbackResult {
    pub fn vertex_ordering(&self) -> VertexOrdering {
        VertexOrdering::new(self.ordering.clone()).expect("built as a permutation")
    }
}

/// `beta(H)`: fewest back edges over all orderings, by dynamic programming
/// over vertex subsets. `best[S]` is the optimum for `S` alone; the vertex
/// placed last in `S` contributes one back edge per out-neighbour in `S`.
pub fn min_feedback_edges<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<FeedbackResult> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("minimum feedback edges", n, limits.feedback)?;
    let out: Vec<u64> = (0..n).map(|v| g.out_mask(v)).collect();
    let size = 1usize << n;
    let mut best = vec![u16::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let set = s as u64;
        let mut b = u16::MAX;
        for v in bits::ones(set) {
            let rest = set & !(1 << v);
            let cost = best[rest as usize] + (out[v] & rest).count_ones() as u16;
            b = b.min(cost);
        }
        best[s] = b;
    }

    // Peel the last vertex off, preferring the smallest index on ties.
    let mut set = full_mask(n);
    let mut reversed = Vec::with_capacity(n);
    while set != 0 {
        let target = best[set as usize];
        let v = bits::ones(set)
            .find(|&v| {
                let rest = set & !(1 << v);
                best[rest as usize] + (out[v] & rest).count_ones() as u16 == target
            })
            .expect("some vertex attains the minimum");
        reversed.push(v);
        set &= !(1 << v);
    }
    reversed.reverse();
    Ok(FeedbackResult {
        beta: best[full_mask(n) as usize] as usize,
        ordering: reversed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;
    use crate::ordering::back_edge_graph;

    #[test]
    fn known_values() {
        let lim = Limits::default();
        assert_eq!(
            min_feedback_edges(&Tournament::transitive(7).unwrap(), &lim)
                .unwrap()
                .beta,
            0
        );
        assert_eq!(
            min_feedback_edges(&Tournament::circulant(3).unwrap(), &lim)
                .unwrap()
                .beta,
            1
        );
        let d3 = Tournament::delta(3).unwrap();
        let r = min_feedback_edges(&d3, &lim).unwrap();
        assert_eq!(r.beta, 3);
        let g = back_edge_graph(&d3, &r.vertex_ordering()).unwrap();
        assert_eq!(g.edge_count(), 3);
    }
}
