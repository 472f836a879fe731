//! Structural classification of tournaments: chromatic number, `s(H)`,
//! `beta(H)`, forest / weak forest / star, homogeneous sets and primality,
//! membership in Liu's family `Q_5`, and the asymptotic regime report.
//!
//! Vertex sets are `u64` masks here, so every routine needs `n <= 64`; the
//! exhaustive ones have much smaller limits in [`Limits`](crate::Limits).

mod bounds;
mod chromatic;
mod feedback;
mod forest;
mod homogeneous;
mod q5;

pub use bounds::{bound_profile, classify, non_forest_epsilon, BoundReport, ClassProfile, Regime};
pub use chromatic::{chromatic_number, min_color_class, Coloring, TwoColoring};
pub use feedback::{min_feedback_edges, FeedbackResult};
pub use forest::{is_forest_tournament, is_star, is_weak_forest, ForestWitness, StarWitness};
pub use homogeneous::{homogeneous_closure, homogeneous_sets, is_homogeneous, is_prime};
pub use q5::{circulant_isomorphism, q5_member, three_part_partition, Q5Witness};

use crate::bits;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub(crate) fn full_mask(n: usize) -> u64 {
    bits::low_mask(n)
}

pub(crate) fn require_mask_size(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::CapExceeded {
            what: "vertex-set masks",
            n,
            cap: 64,
        });
    }
    if n == 0 {
        return Err(Error::invalid("tournament must have at least one vertex"));
    }
    Ok(())
}

/// The set induces an acyclic sub-digraph. In a semi-complete digraph this
/// is equivalent to the within-set out-degrees being exactly `0, 1, ..., k-1`.
pub fn is_transitive_set<D: Digraph + ?Sized>(g: &D, set: u64) -> bool {
    let k = set.count_ones();
    let mut seen = 0u64;
    for v in bits::ones(set) {
        let d = (g.out_mask(v) & set).count_ones();
        if d >= k || (seen >> d) & 1 == 1 {
            return false;
        }
        seen |= 1 << d;
    }
    true
}

/// Vertices of a transitive set from source to sink.
pub fn transitive_order<D: Digraph + ?Sized>(g: &D, set: u64) -> Vec<usize> {
    debug_assert!(is_transitive_set(g, set));
    let mut vs: Vec<usize> = bits::ones(set).collect();
    vs.sort_by_key(|&v| std::cmp::Reverse((g.out_mask(v) & set).count_ones()));
    vs
}

#[cfg(test)]
pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn vertices_of(mask: u64) -> Vec<usize> {
    bits::ones(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{SemiCompleteDigraph, Tournament};

    #[test]
    fn transitive_sets() {
        let t = Tournament::transitive(5).unwrap();
        assert!(is_transitive_set(&t, 0b11111));
        assert_eq!(transitive_order(&t, 0b10110), vec![1, 2, 4]);
        let c = Tournament::circulant(3).unwrap();
        assert!(!is_transitive_set(&c, 0b111));
        assert!(is_transitive_set(&c, 0b011));
        let g = SemiCompleteDigraph::complete(3);
        assert!(!is_transitive_set(&g, 0b011));
        assert!(is_transitive_set(&g, 0b100));
    }
}
