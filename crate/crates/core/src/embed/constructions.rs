use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits;
use crate::classify::transitive_order;
use crate::digraph::{Digraph, SemiCompleteDigraph, Tournament};
use crate::error::{Error, Result};
use crate::ordering::UndirectedOrderedGraph;
use crate::rng::generator;
use crate::search::find_transitive_subtournament_within;
use crate::witness::VertexEmbedding;

/// Embeds `H` into `G` given a partition of `H` into transitive `classes`
/// and vertex sets `parts` of `G`, one per class: each part induces a
/// tournament with at least `2^(h_i - 1)` vertices and all pairs between
/// different parts are bidirectional. Class `i` goes to a transitive
/// subtournament of part `i`, source to source.
pub fn embed_via_transitive_blowup(
    g: &SemiCompleteDigraph,
    h: &Tournament,
    classes: &[Vec<usize>],
    parts: &[Vec<usize>],
) -> Result<VertexEmbedding> {
    if classes.len() != parts.len() {
        return Err(Error::invalid(format!(
            "{} classes but {} parts",
            classes.len(),
            parts.len()
        )));
    }
    let k = h.order();
    if k > 64 {
        return Err(Error::invalid("H must have at most 64 vertices"));
    }
    let mut seen = vec![false; k];
    for c in classes {
        for &v in c {
            if v >= k || seen[v] {
                return Err(Error::invalid(format!(
                    "classes do not partition V(H) (vertex {})",
                    v + 1
                )));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::invalid("classes do not cover V(H)"));
    }
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= n {
                return Err(Error::invalid(format!(
                    "part {} has vertex {} outside G",
                    i + 1,
                    v + 1
                )));
            }
            if owner[v] != usize::MAX {
                return Err(Error::invalid(format!(
                    "vertex {} lies in parts {} and {}",
                    v + 1,
                    owner[v] + 1,
                    i + 1
                )));
            }
            owner[v] = i;
        }
    }
    for (i, p) in parts.iter().enumerate() {
        let need = 1usize
            .checked_shl(classes[i].len().saturating_sub(1) as u32)
            .unwrap_or(usize::MAX);
        if p.len() < need {
            return Err(Error::invalid(format!(
                "part {} has {} vertices, class {} needs 2^{} = {need}",
                i + 1,
                p.len(),
                i + 1,
                classes[i].len().saturating_sub(1)
            )));
        }
        for (a, &u) in p.iter().enumerate() {
            for &v in &p[a + 1..] {
                if g.has_arc(u, v) && g.has_arc(v, u) {
                    return Err(Error::invalid(format!(
                        "part {} contains the bidirectional pair {{{}, {}}}",
                        i + 1,
                        u + 1,
                        v + 1
                    )));
                }
            }
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            for &u in p {
                for &v in q {
                    if !(g.has_arc(u, v) && g.has_arc(v, u)) {
                        return Err(Error::invalid(format!(
                            "pair {{{}, {}}} between parts {} and {} is not bidirectional",
                            u + 1,
                            v + 1,
                            i + 1,
                            owner[v] + 1
                        )));
                    }
                }
            }
        }
    }
    let mut map = vec![usize::MAX; k];
    for (i, (class, part)) in classes.iter().zip(parts).enumerate() {
        let mask = class.iter().fold(0u64, |m, &v| m | 1 << v);
        if !crate::classify::is_transitive_set(h, mask) {
            return Err(Error::invalid(format!(
                "class {} is not transitive in H",
                i + 1
            )));
        }
        let order = transitive_order(h, mask);
        let chain =
            find_transitive_subtournament_within(g, part, class.len()).ok_or_else(|| {
                Error::invalid(format!(
                    "no transitive subtournament of size {} in part {}",
                    class.len(),
                    i + 1
                ))
            })?;
        for (y, x) in order.into_iter().zip(chain) {
            map[y] = x;
        }
    }
    let w = VertexEmbedding::new(map);
    w.verify(g, h)?;
    Ok(w)
}

/// `T_n` plus bidirectional pairs forming the complete `(r-1)`-partite
/// graph on consecutive classes whose sizes differ by at most one (larger
/// classes first).
pub fn turan_blowup(n: usize, r: usize) -> Result<SemiCompleteDigraph> {
    if r < 2 {
        return Err(Error::invalid(format!("r must be at least 2, got {r}")));
    }
    let parts = r - 1;
    if n < parts {
        return Err(Error::invalid(format!(
            "n = {n} is smaller than r - 1 = {parts}"
        )));
    }
    if n == 0 {
        return Ok(SemiCompleteDigraph::complete(0));
    }
    let (q, extra) = (n / parts, n % parts);
    let mut class = Vec::with_capacity(n);
    for c in 0..parts {
        let size = q + usize::from(c < extra);
        class.extend(std::iter::repeat_n(c, size));
    }
    let mut g = SemiCompleteDigraph::from(&Tournament::transitive(n)?);
    for i in 0..n {
        for j in i + 1..n {
            if class[i] != class[j] {
                g.make_bidirectional(i, j);
            }
        }
    }
    Ok(g)
}

/// `T_n` with every edge of `g` made bidirectional.
pub fn transitive_with_bidirectional(g: &UndirectedOrderedGraph) -> Result<SemiCompleteDigraph> {
    let n = g.order();
    if n == 0 {
        return Ok(SemiCompleteDigraph::complete(0));
    }
    let mut d = SemiCompleteDigraph::from(&Tournament::transitive(n)?);
    for (u, v) in g.edges() {
        d.make_bidirectional(u, v);
    }
    Ok(d)
}

fn distance(g: &UndirectedOrderedGraph, from: usize, to: usize, limit: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::from([from]);
    dist[from] = 0;
    while let Some(v) = queue.pop_front() {
        if v == to {
            return Some(dist[v]);
        }
        if dist[v] >= limit {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Length of a shortest cycle, `None` for a forest.
pub fn girth(g: &UndirectedOrderedGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

fn check_even(n: usize) -> Result<usize> {
    if n % 2 != 0 {
        return Err(Error::invalid(format!("n must be even, got {n}")));
    }
    Ok(n / 2)
}

/// Balanced bipartite graph on sides `0..n/2` and `n/2..n` with no cycle of
/// length at most `girth_bound`: cross pairs are shuffled with the seeded
/// generator and inserted greedily unless their endpoints are already
/// within distance `girth_bound - 1`.
pub fn high_girth_bipartite(
    n: usize,
    girth_bound: usize,
    seed: u64,
) -> Result<UndirectedOrderedGraph> {
    let half = check_even(n)?;
    let mut pairs: Vec<(usize, usize)> = (0..half)
        .flat_map(|a| (half..n).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(&mut generator(seed));
    let mut g = UndirectedOrderedGraph::new(n);
    for (a, b) in pairs {
        // the new edge closes a cycle of length dist + 1
        let close = girth_bound
            .checked_sub(1)
            .and_then(|lim| distance(&g, a, b, lim))
            .is_some_and(|d| d < girth_bound);
        if !close {
            g.add_edge(a, b)?;
        }
    }
    if let Some(c) = girth(&g) {
        if c <= girth_bound {
            return Err(Error::invalid(format!(
                "internal: cycle of length {c} survived"
            )));
        }
    }
    Ok(g)
}

/// A copy of `K_{t,t}` with one side in `0..n/2` and the other in
/// `n/2..n`, as `(left, right)`.
pub fn find_ktt(g: &UndirectedOrderedGraph, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let half = n / 2;
    let words = bits::words_for(n).max(1);
    let rows: Vec<Vec<u64>> = (0..half)
        .map(|a| {
            let mut r = vec![0u64; words];
            for &b in g.neighbors(a).range(half..) {
                bits::set_bit(&mut r, b);
            }
            r
        })
        .collect();
    fn go(
        rows: &[Vec<u64>],
        start: usize,
        t: usize,
        common: &[u64],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if bits::count_ones(common) < t {
            return None;
        }
        if chosen.len() == t {
            return Some(bits::row_ones(common).take(t).collect());
        }
        for a in start..rows.len() {
            if rows.len() - a < t - chosen.len() {
                break;
            }
            let next: Vec<u64> = common.iter().zip(&rows[a]).map(|(c, r)| c & r).collect();
            chosen.push(a);
            if let Some(r) = go(rows, a + 1, t, &next, chosen) {
                return Some(r);
            }
            chosen.pop();
        }
        None
    }
    if t == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    let mut all = vec![0u64; words];
    (half..n).for_each(|b| bits::set_bit(&mut all, b));
    let mut chosen = Vec::new();
    let right = go(&rows, 0, t, &all, &mut chosen)?;
    Some((chosen, right))
}

/// Balanced bipartite graph without `K_{t,t}`: every cross pair is kept
/// with probability `(n/2)^(-2/(t+1))`, then one edge of each `K_{t,t}`
/// found is deleted until none is left.
pub fn ktt_free_bipartite(n: usize, t: usize, seed: u64) -> Result<UndirectedOrderedGraph> {
    let half = check_even(n)?;
    if t == 0 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let mut rng = generator(seed);
    let p = (half.max(1) as f64).powf(-2.0 / (t as f64 + 1.0)).min(1.0);
    let mut g = UndirectedOrderedGraph::new(n);
    for a in 0..half {
        for b in half..n {
            if rng.random_bool(p) {
                g.add_edge(a, b)?;
            }
        }
    }
    while let Some((l, r)) = find_ktt(&g, t) {
        g.remove_edge(l[0], r[0]);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::chromatic_number;
    use crate::limits::Limits;

    #[test]
    fn turan_counts() {
        let t = Tournament::transitive(5).unwrap();
        assert_eq!(turan_blowup(5, 2).unwrap(), SemiCompleteDigraph::from(&t));
        assert_eq!(turan_blowup(4, 3).unwrap().bidirectional_count(), 4);
        for n in [6, 9, 12] {
            for r in [3, 4] {
                let added = turan_blowup(n, r).unwrap().bidirectional_count() as f64;
                let pairs = (n * (n - 1) / 2) as f64;
                assert!(added >= (r as f64 - 2.0) / (r as f64 - 1.0) * pairs);
            }
        }
        assert_eq!(
            chromatic_number(&turan_blowup(7, 4).unwrap(), &Limits::default())
                .unwrap()
                .chi,
            3
        );
    }

    #[test]
    fn blowup_c3() {
        // C_3 classes {0} and {1, 2}: parts of size 1 and 2
        let c3 = Tournament::circulant(3).unwrap();
        let g = turan_blowup(3, 3).unwrap();
        // Turán classes are {0, 1} and {2}
        let w =
            embed_via_transitive_blowup(&g, &c3, &[vec![0], vec![1, 2]], &[vec![2], vec![0, 1]])
                .unwrap();
        w.verify(&g, &c3).unwrap();
        let too_small =
            embed_via_transitive_blowup(&g, &c3, &[vec![0], vec![1, 2]], &[vec![0, 1], vec![2]]);
        assert!(too_small.is_err());
    }

    #[test]
    fn bipartite_generators() {
        let g = high_girth_bipartite(12, 24, 5).unwrap();
        assert!(g.is_acyclic());
        let g = high_girth_bipartite(20, 4, 5).unwrap();
        assert!(girth(&g).is_none_or(|c| c > 4));
        assert!(g.edges().iter().all(|&(a, b)| a < 10 && b >= 10));
        for t in 1..=3 {
            let g = ktt_free_bipartite(24, t, 9).unwrap();
            assert!(find_ktt(&g, t).is_none());
        }
    }

    #[test]
    fn girth_of_small_graphs() {
        let c4 = UndirectedOrderedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(girth(&c4), Some(4));
        let tri = UndirectedOrderedGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(girth(&tri), Some(3));
    }
}
