//! Edge configurations in ordered graphs: disjoint pairs, ordered copies of
//! `X_h`, nested pairs and crossing pairs. Every finder re-verifies what it
//! returns.

use crate::error::{Error, Result};
use crate::ordering::{make_xh_tree, UndirectedOrderedGraph};

/// What [`find_disjoint_pair_or_xh`] found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisjointOrTree {
    /// Edges `{a, b}` and `{c, d}` with `a < b < c < d`.
    Pair([usize; 4]),
    /// Positions `x_1 < ... < x_h` of an ordered copy of `X_h`.
    Tree(Vec<usize>),
}

pub fn verify_disjoint_pair(g: &UndirectedOrderedGraph, [a, b, c, d]: [usize; 4]) -> Result<()> {
    if !(a < b && b < c && c < d) {
        return Err(Error::invalid(format!(
            "positions {a} {b} {c} {d} are not increasing"
        )));
    }
    if !g.has_edge(a, b) || !g.has_edge(c, d) {
        return Err(Error::invalid("disjoint pair uses a missing edge"));
    }
    Ok(())
}

/// Ordered-isomorphism check against [`make_xh_tree`]: positions strictly
/// increasing and every tree edge present.
pub fn verify_xh_copy(g: &UndirectedOrderedGraph, h: usize, xs: &[usize]) -> Result<()> {
    let tree = make_xh_tree(h)?;
    if xs.len() != h {
        return Err(Error::invalid(format!(
            "X_h copy has {} vertices, expected {h}",
            xs.len()
        )));
    }
    if !xs.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::invalid("X_h copy positions are not increasing"));
    }
    for (a, b) in tree.edges() {
        if !g.has_edge(xs[a], xs[b]) {
            return Err(Error::invalid(format!(
                "tree edge (x_{}, x_{}) maps to missing edge ({}, {})",
                a + 1,
                b + 1,
                xs[a] + 1,
                xs[b] + 1
            )));
        }
    }
    Ok(())
}

pub fn verify_nested_pair(g: &UndirectedOrderedGraph, [a, b, c, d]: [usize; 4]) -> Result<()> {
    if !(a < b && b < c && c < d) {
        return Err(Error::invalid("nested pair positions are not increasing"));
    }
    if !g.has_edge(a, d) || !g.has_edge(b, c) {
        return Err(Error::invalid("nested pair uses a missing edge"));
    }
    Ok(())
}

pub fn verify_crossing_pair(g: &UndirectedOrderedGraph, [a, b, c, d]: [usize; 4]) -> Result<()> {
    if !(a < b && b < c && c < d) {
        return Err(Error::invalid("crossing pair positions are not increasing"));
    }
    if !g.has_edge(a, c) || !g.has_edge(b, d) {
        return Err(Error::invalid("crossing pair uses a missing edge"));
    }
    Ok(())
}

fn interval_edges(g: &UndirectedOrderedGraph, lo: usize, hi: usize) -> Vec<(usize, usize)> {
    (lo..hi)
        .flat_map(|u| g.neighbors(u).range(u + 1..hi).map(move |&v| (u, v)))
        .collect()
}

/// The crossing-edge case: peel the crossing edges down to minimum degree
/// `h - 1`, take the shortest remaining edge `(u, v)`, then `h - 3`
/// neighbours of `v` below `u` and one neighbour of `u` beyond `v`.
fn tree_from_crossing(crossing: &[(usize, usize)], h: usize) -> Option<Vec<usize>> {
    use std::collections::{BTreeMap, BTreeSet};
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(u, v) in crossing {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    loop {
        let low: Vec<usize> = adj
            .iter()
            .filter(|(_, nb)| nb.len() < h - 1)
            .map(|(&v, _)| v)
            .collect();
        if low.is_empty() {
            break;
        }
        for v in low {
            if let Some(nb) = adj.remove(&v) {
                for w in nb {
                    if let Some(s) = adj.get_mut(&w) {
                        s.remove(&v);
                    }
                }
            }
        }
    }
    let (u, v) = adj
        .iter()
        .flat_map(|(&u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
        .min_by_key(|&(u, v)| (v - u, u))?;
    // every neighbour of v is at or below u because (u, v) is shortest
    let below: Vec<usize> = adj[&v].range(..u).copied().collect();
    let beyond = adj[&u].range(v + 1..).next().copied()?;
    if below.len() < h - 3 {
        return None;
    }
    let mut xs: Vec<usize> = below[below.len() - (h - 3)..].to_vec();
    xs.extend([u, v, beyond]);
    Some(xs)
}

fn recurse(g: &UndirectedOrderedGraph, lo: usize, hi: usize, h: usize) -> Option<DisjointOrTree> {
    let n = hi - lo;
    if n < 2 {
        return None;
    }
    let mid = lo + n / 2;
    let edges = interval_edges(g, lo, hi);
    let left: Vec<_> = edges.iter().filter(|e| e.1 < mid).copied().collect();
    let right: Vec<_> = edges.iter().filter(|e| e.0 >= mid).copied().collect();
    if let (Some(&(a, b)), Some(&(c, d))) = (left.first(), right.first()) {
        return Some(DisjointOrTree::Pair([a, b, c, d]));
    }
    if left.len() >= 2 * h * (n / 2) {
        return recurse(g, lo, mid, h);
    }
    if right.len() >= 2 * h * n.div_ceil(2) {
        return recurse(g, mid, hi, h);
    }
    let crossing: Vec<_> = edges
        .iter()
        .filter(|e| e.0 < mid && e.1 >= mid)
        .copied()
        .collect();
    tree_from_crossing(&crossing, h).map(DisjointOrTree::Tree)
}

/// Leftmost-ending edge followed by any edge starting after it.
fn scan_disjoint_pair(g: &UndirectedOrderedGraph) -> Option<[usize; 4]> {
    let (a, b) = g.edges().into_iter().min_by_key(|&(a, b)| (b, a))?;
    let (c, d) = g.edges().into_iter().find(|&(c, _)| c > b)?;
    Some([a, b, c, d])
}

/// An ordered `X_h` exists iff some edge `u < v` has a neighbour of `u`
/// beyond `v` and `h - 3` neighbours of `v` below `u`.
fn scan_xh(g: &UndirectedOrderedGraph, h: usize) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        let Some(&beyond) = g.neighbors(u).range(v + 1..).next() else {
            continue;
        };
        let below: Vec<usize> = g.neighbors(v).range(..u).copied().collect();
        if below.len() >= h - 3 {
            let mut xs = below[below.len() - (h - 3)..].to_vec();
            xs.extend([u, v, beyond]);
            return Some(xs);
        }
    }
    None
}

/// Two disjoint edges one after the other, or an ordered copy of `X_h`, by
/// the halving classification into left, right and crossing edges. When
/// the recursion comes up empty (possible below `2hn` edges) a direct scan
/// for each shape is tried, so `None` means `G` has neither.
pub fn find_disjoint_pair_or_xh(
    g: &UndirectedOrderedGraph,
    h: usize,
) -> Result<Option<DisjointOrTree>> {
    if h < 3 {
        return Err(Error::invalid(format!("X_h needs h >= 3, got {h}")));
    }
    let found = recurse(g, 0, g.order(), h)
        .or_else(|| scan_disjoint_pair(g).map(DisjointOrTree::Pair))
        .or_else(|| scan_xh(g, h).map(DisjointOrTree::Tree));
    match &found {
        Some(DisjointOrTree::Pair(p)) => verify_disjoint_pair(g, *p)?,
        Some(DisjointOrTree::Tree(xs)) => verify_xh_copy(g, h, xs)?,
        None => {}
    }
    Ok(found)
}

/// Forward degree and rightmost neighbour scan: the least `u` with
/// `r(u) <= r(pred(u)) + f(u) - 2` yields the pair `pred(u) < u < w <
/// r(pred(u))` where `w` is the first forward neighbour of `u`.
fn nested_scan(g: &UndirectedOrderedGraph) -> Option<[usize; 4]> {
    let mut pred: Option<(usize, usize)> = None; // (vertex, rightmost neighbour)
    for u in 0..g.order() {
        let fwd = g.neighbors(u).range(u + 1..);
        let f = fwd.clone().count();
        if f == 0 {
            continue;
        }
        let r = *fwd.clone().next_back().expect("f > 0");
        let r_pred = pred.map_or(-1, |(_, r)| r as i64);
        if (r as i64) <= r_pred + f as i64 - 2 {
            let (p, rp) = pred.expect("the first forward vertex never qualifies");
            let w = *g.neighbors(u).range(u + 1..).next().expect("f > 0");
            return Some([p, u, w, rp]);
        }
        pred = Some((u, r));
    }
    None
}

fn nested_direct(g: &UndirectedOrderedGraph) -> Option<[usize; 4]> {
    for (a, d) in g.edges() {
        for b in a + 1..d {
            if let Some(&c) = g.neighbors(b).range(b + 1..d).next() {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Edges `{a, d}` and `{b, c}` with `a < b < c < d`: the forward-degree scan
/// (guaranteed from `3n + 1` edges), then a direct search.
pub fn find_nested_pair(g: &UndirectedOrderedGraph) -> Result<Option<[usize; 4]>> {
    let found = nested_scan(g).or_else(|| nested_direct(g));
    if let Some(p) = found {
        verify_nested_pair(g, p)?;
    }
    Ok(found)
}

/// Edges `{a, c}` and `{b, d}` with `a < b < c < d` by direct search over
/// edges and inner vertices (guaranteed from `2n - 2` edges).
pub fn find_crossing_pair(g: &UndirectedOrderedGraph) -> Result<Option<[usize; 4]>> {
    let mut found = None;
    'outer: for (a, c) in g.edges() {
        for b in a + 1..c {
            if let Some(&d) = g.neighbors(b).range(c + 1..).next() {
                found = Some([a, b, c, d]);
                break 'outer;
            }
        }
    }
    if let Some(p) = found {
        verify_crossing_pair(g, p)?;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UndirectedOrderedGraph {
        UndirectedOrderedGraph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn disjoint_pair_found() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            find_disjoint_pair_or_xh(&g, 4).unwrap(),
            Some(DisjointOrTree::Pair([0, 1, 2, 3]))
        );
    }

    #[test]
    fn star_gives_x3() {
        // star centred in the middle: no two disjoint edges
        let n = 40;
        let c = n / 2;
        let edges: Vec<(usize, usize)> = (0..n)
            .filter(|&v| v != c)
            .map(|v| (v.min(c), v.max(c)))
            .collect();
        let g = graph(n, &edges);
        match find_disjoint_pair_or_xh(&g, 3).unwrap() {
            Some(DisjointOrTree::Tree(xs)) => verify_xh_copy(&g, 3, &xs).unwrap(),
            other => panic!("expected a tree, got {other:?}"),
        }
        assert_eq!(find_disjoint_pair_or_xh(&g, 4).unwrap(), None);
    }

    #[test]
    fn crossing_case_gives_xh() {
        // complete bipartite between halves: every edge crosses the middle
        let n = 16;
        let edges: Vec<(usize, usize)> =
            (0..8).flat_map(|a| (8..16).map(move |b| (a, b))).collect();
        let g = graph(n, &edges);
        for h in 3..=6 {
            match recurse(&g, 0, n, h) {
                Some(DisjointOrTree::Tree(xs)) => verify_xh_copy(&g, h, &xs).unwrap(),
                other => panic!("expected a tree, got {other:?}"),
            }
        }
    }

    #[test]
    fn nested_and_crossing() {
        let g = graph(4, &[(0, 3), (1, 2)]);
        assert_eq!(find_nested_pair(&g).unwrap(), Some([0, 1, 2, 3]));
        assert_eq!(find_crossing_pair(&g).unwrap(), None);
        let g = graph(4, &[(0, 2), (1, 3)]);
        assert_eq!(find_crossing_pair(&g).unwrap(), Some([0, 1, 2, 3]));
        assert_eq!(find_nested_pair(&g).unwrap(), None);
        let path = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(find_nested_pair(&path).unwrap(), None);
        assert_eq!(find_crossing_pair(&path).unwrap(), None);
    }
}
