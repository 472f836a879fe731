use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{full_mask, is_transitive_set, require_mask_size, transitive_order, vertices_of};
use crate::bits;
use crate::digraph::Digraph;
use crate::error::{check_cap, Result};
use crate::limits::Limits;

/// Bipartition into transitive `left` and `right` whose right-to-left arcs
/// form an acyclic bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn cross_arcs_acyclic<D: Digraph + ?Sized>(g: &D, left: u64, right: u64) -> bool {
    let n = g.order();
    let arcs: u32 = bits::ones(right)
        .map(|r| (g.out_mask(r) & left).count_ones())
        .sum();
    if arcs as usize >= n.max(1) {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for r in bits::ones(right) {
        for l in bits::ones(g.out_mask(r) & left) {
            let a = find(&mut parent, r);
            let b = find(&mut parent, l);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

/// Exhaustive search over bipartitions `(L, R)`, visiting `L` as increasing
/// bit masks.
pub fn is_forest_tournament<D: Digraph + ?Sized>(
    g: &D,
    limits: &Limits,
) -> Result<Option<ForestWitness>> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("forest test", n, limits.forest)?;
    let full = full_mask(n);
    for left in 0..=full {
        let right = full & !left;
        if is_transitive_set(g, left)
            && is_transitive_set(g, right)
            && cross_arcs_acyclic(g, left, right)
        {
            return Ok(Some(ForestWitness {
                left: vertices_of(left),
                right: vertices_of(right),
            }));
        }
    }
    Ok(None)
}

struct WeakForestSearch<'a, D: Digraph + ?Sized> {
    g: &'a D,
    n: usize,
    failed: HashSet<u128>,
}

impl<D: Digraph + ?Sized> WeakForestSearch<'_, D> {
    /// Placed set plus the component partition of the placed vertices,
    /// labelled by first appearance, packed into one integer.
    fn key(&self, placed: u64, comp: &[u8]) -> u128 {
        let mut relabel = [u8::MAX; 64];
        let mut next = 0u8;
        let mut key = placed as u128;
        let mut shift = self.n;
        for v in bits::ones(placed) {
            let c = comp[v] as usize;
            if relabel[c] == u8::MAX {
                relabel[c] = next;
                next += 1;
            }
            key |= (relabel[c] as u128) << shift;
            shift += 5;
        }
        key
    }

    fn extend(&mut self, placed: u64, comp: &mut [u8], order: &mut Vec<usize>) -> bool {
        if order.len() == self.n {
            return true;
        }
        let key = self.key(placed, comp);
        if self.failed.contains(&key) {
            return false;
        }
        let free = full_mask(self.n) & !placed;
        for v in bits::ones(free) {
            // v goes next; its back edges join it to the placed vertices it beats
            let targets = self.g.out_mask(v) & placed;
            let mut seen = 0u64;
            let mut ok = true;
            for u in bits::ones(targets) {
                let c = comp[u];
                if (seen >> c) & 1 == 1 {
                    ok = false;
                    break;
                }
                seen |= 1 << c;
            }
            if !ok {
                continue;
            }
            let saved = comp.to_vec();
            let label = v as u8;
            for u in bits::ones(placed) {
                if (seen >> comp[u]) & 1 == 1 {
                    comp[u] = label;
                }
            }
            comp[v] = label;
            order.push(v);
            if self.extend(placed | 1 << v, comp, order) {
                return true;
            }
            order.pop();
            comp.copy_from_slice(&saved);
        }
        self.failed.insert(key);
        false
    }
}

/// Some ordering has an acyclic back-edge graph. Returns the first such
/// ordering in lexicographic order.
pub fn is_weak_forest<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("weak forest test", n, limits.weak_forest)?;
    // memo keys pack n mask bits and n five-bit labels into 128 bits
    check_cap("weak forest test", n, 21)?;
    let mut search = WeakForestSearch {
        g,
        n,
        failed: HashSet::new(),
    };
    let mut comp: Vec<u8> = (0..n as u8).collect();
    let mut order = Vec::with_capacity(n);
    Ok(search.extend(0, &mut comp, &mut order).then_some(order))
}

/// Star tournament witness: every back edge of `ordering` touches `center`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarWitness {
    /// `None` when the tournament is transitive (no back edges at all).
    pub center: Option<usize>,
    pub ordering: Vec<usize>,
}

/// Some ordering's back-edge graph is a star plus isolated vertices. That
/// happens exactly when the tournament, or the tournament minus one vertex,
/// is transitive: order the rest transitively and put the centre first.
pub fn is_star<D: Digraph + ?Sized>(g: &D) -> Result<Option<StarWitness>> {
    let n = g.order();
    require_mask_size(n)?;
    let full = full_mask(n);
    if is_transitive_set(g, full) {
        return Ok(Some(StarWitness {
            center: None,
            ordering: transitive_order(g, full),
        }));
    }
    for c in 0..n {
        let rest = full & !(1 << c);
        if is_transitive_set(g, rest) {
            let mut ordering = vec![c];
            ordering.extend(transitive_order(g, rest));
            return Ok(Some(StarWitness {
                center: Some(c),
                ordering,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;
    use crate::ordering::{back_edge_graph, VertexOrdering};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn delta_forest_status() {
        let d2 = Tournament::delta(2).unwrap();
        let d3 = Tournament::delta(3).unwrap();
        assert!(is_forest_tournament(&d2, &lim()).unwrap().is_some());
        assert!(is_forest_tournament(&d3, &lim()).unwrap().is_none());
        let w = is_weak_forest(&d3, &lim()).unwrap().unwrap();
        let g = back_edge_graph(&d3, &VertexOrdering::new(w).unwrap()).unwrap();
        assert!(g.is_acyclic());
    }

    #[test]
    fn transitive_is_everything() {
        let t = Tournament::transitive(6).unwrap();
        assert!(is_forest_tournament(&t, &lim()).unwrap().is_some());
        assert_eq!(
            is_weak_forest(&t, &lim()).unwrap().unwrap(),
            vec![0, 1, 2, 3, 4, 5]
        );
        assert_eq!(is_star(&t).unwrap().unwrap().center, None);
    }

    #[test]
    fn star_witness_ordering() {
        let c3 = Tournament::circulant(3).unwrap();
        let w = is_star(&c3).unwrap().unwrap();
        assert_eq!(w.center, Some(0));
        let g = back_edge_graph(&c3, &VertexOrdering::new(w.ordering).unwrap()).unwrap();
        assert!(g.edges_share_endpoint());
        assert!(is_star(&Tournament::u5()).unwrap().is_none());
        assert!(is_star(&Tournament::circulant(5).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn three_chromatic_is_not_weak_forest() {
        let p7 = Tournament::from_fn(7, |i, j| matches!((j - i) % 7, 1 | 2 | 4));
        assert!(is_weak_forest(&p7, &lim()).unwrap().is_none());
        assert!(is_forest_tournament(&p7, &lim()).unwrap().is_none());
    }
}
