//! Tournaments and semi-complete digraphs on vertices `0..n`.
//!
//! Both types keep a dense out-adjacency and in-adjacency bit grid, so
//! neighbourhood intersections in the containment searches are plain word
//! operations.

use crate::bits::{self, BitGrid};
use crate::error::{Error, Result};
use crate::ordering::UndirectedOrderedGraph;

/// Read access shared by every digraph the searches run on.
pub trait Digraph {
    fn order(&self) -> usize;
    fn out_row(&self, v: usize) -> &[u64];
    fn in_row(&self, v: usize) -> &[u64];

    #[inline]
    fn has_arc(&self, u: usize, v: usize) -> bool {
        u != v && bits::test_bit(self.out_row(u), v)
    }

    /// Out-neighbourhood as a single word. Only valid for `order() <= 64`.
    #[inline]
    fn out_mask(&self, v: usize) -> u64 {
        debug_assert!(self.order() <= 64);
        self.out_row(v)[0]
    }

    #[inline]
    fn in_mask(&self, v: usize) -> u64 {
        debug_assert!(self.order() <= 64);
        self.in_row(v)[0]
    }

    fn out_degree(&self, v: usize) -> usize {
        bits::count_ones(self.out_row(v))
    }

    fn arc_count(&self) -> usize {
        (0..self.order()).map(|v| self.out_degree(v)).sum()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Adjacency {
    out: BitGrid,
    inn: BitGrid,
}

impl Adjacency {
    fn empty(n: usize) -> Self {
        Self {
            out: BitGrid::new(n, n),
            inn: BitGrid::new(n, n),
        }
    }

    fn n(&self) -> usize {
        self.out.rows()
    }

    fn add(&mut self, u: usize, v: usize) {
        self.out.set(u, v, true);
        self.inn.set(v, u, true);
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.out.set(u, v, false);
        self.inn.set(v, u, false);
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.out.get(u, v)
    }
}

/// A complete oriented graph: exactly one arc between every pair of vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tournament {
    adj: Adjacency,
}

impl Digraph for Tournament {
    #[inline]
    fn order(&self) -> usize {
        self.adj.n()
    }
    #[inline]
    fn out_row(&self, v: usize) -> &[u64] {
        self.adj.out.row(v)
    }
    #[inline]
    fn in_row(&self, v: usize) -> &[u64] {
        self.adj.inn.row(v)
    }
}

impl Tournament {
    /// Builds a tournament from `beats(i, j)`, consulted once per pair `i < j`:
    /// `true` orients the pair `i -> j`, `false` orients it `j -> i`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = Adjacency::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    adj.add(i, j);
                } else {
                    adj.add(j, i);
                }
            }
        }
        Self { adj }
    }

    /// Decodes the labeled tournament whose pair `k` (pairs `i < j` in
    /// lexicographic order) is oriented `i -> j` iff bit `k` of `code` is set.
    pub fn from_pair_code(n: usize, code: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            let bit = (code >> k) & 1 == 1;
            k += 1;
            bit
        })
    }

    /// Inverse of [`Tournament::from_pair_code`].
    pub fn pair_code(&self) -> u64 {
        let n = self.order();
        let mut code = 0u64;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.has_arc(i, j) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        code
    }

    /// Validates an arbitrary arc predicate as a tournament.
    pub fn from_arcs(n: usize, arc: impl Fn(usize, usize) -> bool) -> Result<Self> {
        for i in 0..n {
            if arc(i, i) {
                return Err(Error::invalid(format!("loop at vertex {}", i + 1)));
            }
            for j in i + 1..n {
                if arc(i, j) == arc(j, i) {
                    return Err(Error::invalid(format!(
                        "pair {{{}, {}}} must carry exactly one arc",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self::from_fn(n, arc))
    }

    /// The transitive tournament `T_n`: `i -> j` iff `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("transitive tournament needs n >= 1"));
        }
        Ok(Self::from_fn(n, |_, _| true))
    }

    /// The circulant tournament `C_n` for odd `n >= 3`: `i -> j` iff
    /// `(j - i) mod n` lies in `1..=(n-1)/2`.
    pub fn circulant(n: usize) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::invalid(format!(
                "circulant tournament needs odd n >= 3, got {n}"
            )));
        }
        let half = (n - 1) / 2;
        Ok(Self::from_fn(n, |i, j| (j - i) <= half))
    }

    /// `U_5`: the transitive `T_5` with the arcs `2 -> 5` and `1 -> 4`
    /// (1-based) reversed.
    pub fn u5() -> Self {
        let mut t = Self::from_fn(5, |_, _| true);
        t.reverse_arc(1, 4);
        t.reverse_arc(0, 3);
        t
    }

    /// `Delta_k`: `k` directed triangles `(a_i, b_i, c_i)` with every arc
    /// pointing from triangle `i` to triangle `j` when `i < j`. Vertex
    /// `3i + {0,1,2}` is `a_i, b_i, c_i`.
    pub fn delta(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("Delta_k needs k >= 1"));
        }
        Ok(Self::from_fn(3 * k, |i, j| {
            if i / 3 != j / 3 {
                return true;
            }
            // a -> b, b -> c, c -> a
            !(i % 3 == 0 && j % 3 == 2)
        }))
    }

    /// Reverses the arc `u -> v` (which must be present).
    pub fn reverse_arc(&mut self, u: usize, v: usize) {
        assert!(self.adj.has(u, v), "no arc {u} -> {v} to reverse");
        self.adj.remove(u, v);
        self.adj.add(v, u);
    }

    /// Sub-tournament induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Tournament {
        Tournament::from_fn(vertices.len(), |a, b| {
            self.has_arc(vertices[a], vertices[b])
        })
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        self.induced(perm)
    }

    /// No directed cycle; equivalently the score sequence is `0, 1, ..., n-1`.
    pub fn is_transitive(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        for v in 0..n {
            let d = self.out_degree(v);
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    pub fn is_regular(&self) -> bool {
        let n = self.order();
        n % 2 == 1 && (0..n).all(|v| self.out_degree(v) == (n - 1) / 2)
    }
}

/// A tournament with some pairs made bidirectional.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemiCompleteDigraph {
    adj: Adjacency,
}

impl Digraph for SemiCompleteDigraph {
    #[inline]
    fn order(&self) -> usize {
        self.adj.n()
    }
    #[inline]
    fn out_row(&self, v: usize) -> &[u64] {
        self.adj.out.row(v)
    }
    #[inline]
    fn in_row(&self, v: usize) -> &[u64] {
        self.adj.inn.row(v)
    }
}

impl From<&Tournament> for SemiCompleteDigraph {
    fn from(t: &Tournament) -> Self {
        Self { adj: t.adj.clone() }
    }
}

impl SemiCompleteDigraph {
    /// Validates an arbitrary arc predicate as a semi-complete digraph.
    pub fn from_arcs(n: usize, arc: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut adj = Adjacency::empty(n);
        for i in 0..n {
            if arc(i, i) {
                return Err(Error::invalid(format!("loop at vertex {}", i + 1)));
            }
            for j in 0..n {
                if i != j && arc(i, j) {
                    adj.add(i, j);
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !adj.has(i, j) && !adj.has(j, i) {
                    return Err(Error::invalid(format!(
                        "pair {{{}, {}}} carries no arc",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { adj })
    }

    /// Every pair bidirectional.
    pub fn complete(n: usize) -> Self {
        let mut adj = Adjacency::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    adj.add(i, j);
                }
            }
        }
        Self { adj }
    }

    /// Adds the reverse of existing arcs. Each `(from, to)` in `reversals`
    /// must be the reverse of an arc `to -> from` of `base`, and no pair
    /// may be listed twice.
    pub fn with_back_arcs(base: &Tournament, reversals: &[(usize, usize)]) -> Result<Self> {
        let mut g = SemiCompleteDigraph::from(base);
        for &(from, to) in reversals {
            g.add_reverse_arc(from, to)?;
        }
        Ok(g)
    }

    /// Makes the pair `{from, to}` bidirectional by adding `from -> to`.
    pub fn add_reverse_arc(&mut self, from: usize, to: usize) -> Result<()> {
        let n = self.order();
        if from >= n || to >= n || from == to {
            return Err(Error::invalid(format!(
                "arc ({}, {}) is not a pair of distinct vertices of a {n}-vertex digraph",
                from + 1,
                to + 1
            )));
        }
        if self.adj.has(from, to) {
            return Err(Error::invalid(format!(
                "arc {} -> {} is already present",
                from + 1,
                to + 1
            )));
        }
        self.adj.add(from, to);
        Ok(())
    }

    /// Removes `from -> to`, which must be one half of a bidirectional pair.
    pub fn remove_reverse_arc(&mut self, from: usize, to: usize) {
        assert!(
            self.is_bidirectional(from, to),
            "pair {from}, {to} is not bidirectional"
        );
        self.adj.remove(from, to);
    }

    /// Makes `{u, v}` bidirectional if it is not already.
    pub fn make_bidirectional(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj.add(u, v);
        self.adj.add(v, u);
    }

    #[inline]
    pub fn is_bidirectional(&self, u: usize, v: usize) -> bool {
        u != v && self.adj.has(u, v) && self.adj.has(v, u)
    }

    /// Bidirectional neighbourhood of `v` as a fresh word row.
    pub fn bidi_row(&self, v: usize) -> Vec<u64> {
        self.out_row(v)
            .iter()
            .zip(self.in_row(v))
            .map(|(a, b)| a & b)
            .collect()
    }

    #[inline]
    pub fn bidi_mask(&self, v: usize) -> u64 {
        self.out_mask(v) & self.in_mask(v)
    }

    /// Bidirectional pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn bidirectional_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in bits::row_ones(&self.bidi_row(i)) {
                if j > i {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    pub fn bidirectional_count(&self) -> usize {
        self.arc_count() - self.order() * self.order().saturating_sub(1) / 2
    }

    /// The undirected graph of bidirectional pairs, on the same vertex positions.
    pub fn bidi_graph(&self) -> UndirectedOrderedGraph {
        let mut g = UndirectedOrderedGraph::new(self.order());
        for (i, j) in self.bidirectional_pairs() {
            g.add_edge(i, j).expect("pairs are distinct and in range");
        }
        g
    }

    /// Contains every arc of `T_n`, i.e. was built by augmenting the
    /// transitive tournament in its natural order.
    pub fn extends_transitive(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.adj.has(i, j)))
    }

    pub fn induced(&self, vertices: &[usize]) -> SemiCompleteDigraph {
        let k = vertices.len();
        let mut adj = Adjacency::empty(k);
        for a in 0..k {
            for b in 0..k {
                if a != b && self.has_arc(vertices[a], vertices[b]) {
                    adj.add(a, b);
                }
            }
        }
        SemiCompleteDigraph { adj }
    }

    /// The tournament itself when no pair is bidirectional.
    pub fn as_tournament(&self) -> Option<Tournament> {
        (self.bidirectional_count() == 0).then(|| Tournament {
            adj: self.adj.clone(),
        })
    }

    /// Resolves every bidirectional pair `{i, j}` (`i < j`) to `i -> j` when
    /// `keep_forward(i, j)` is true and to `j -> i` otherwise.
    pub fn orient(&self, mut keep_forward: impl FnMut(usize, usize) -> bool) -> Tournament {
        let mut adj = self.adj.clone();
        for (i, j) in self.bidirectional_pairs() {
            if keep_forward(i, j) {
                adj.remove(j, i);
            } else {
                adj.remove(i, j);
            }
        }
        Tournament { adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_rejects_zero() {
        assert!(Tournament::transitive(0).is_err());
        let t1 = Tournament::transitive(1).unwrap();
        assert_eq!(t1.order(), 1);
        assert_eq!(t1.arc_count(), 0);
    }

    #[test]
    fn transitive_three_arcs() {
        let t = Tournament::transitive(3).unwrap();
        assert!(t.has_arc(0, 1) && t.has_arc(0, 2) && t.has_arc(1, 2));
        assert!(!t.has_arc(1, 0) && !t.has_arc(2, 0) && !t.has_arc(2, 1));
    }

    #[test]
    fn circulant_examples() {
        assert!(Tournament::circulant(4).is_err());
        assert!(Tournament::circulant(1).is_err());
        let c3 = Tournament::circulant(3).unwrap();
        assert!(c3.has_arc(0, 1) && c3.has_arc(1, 2) && c3.has_arc(2, 0));
        let c5 = Tournament::circulant(5).unwrap();
        assert!(c5.has_arc(0, 1) && c5.has_arc(0, 2));
        assert!(!c5.has_arc(0, 3) && c5.has_arc(3, 0));
    }

    #[test]
    fn circulant_is_regular_up_to_99() {
        for n in (3..=99).step_by(2) {
            let c = Tournament::circulant(n).unwrap();
            assert!((0..n).all(|v| c.out_degree(v) == (n - 1) / 2), "n = {n}");
        }
    }

    #[test]
    fn u5_reversals() {
        let u = Tournament::u5();
        // 1-based (5,2) and (4,1)
        assert!(u.has_arc(4, 1) && !u.has_arc(1, 4));
        assert!(u.has_arc(3, 0) && !u.has_arc(0, 3));
        assert!(u.has_arc(0, 1));
        assert!(!u.is_transitive());
    }

    #[test]
    fn delta_structure() {
        assert!(Tournament::delta(0).is_err());
        let d1 = Tournament::delta(1).unwrap();
        let c3 = Tournament::circulant(3).unwrap();
        assert_eq!(d1, c3);
        let d2 = Tournament::delta(2).unwrap();
        for x in 0..3 {
            for y in 3..6 {
                assert!(d2.has_arc(x, y));
            }
        }
    }

    #[test]
    fn pair_code_round_trip() {
        for code in 0..64u64 {
            let t = Tournament::from_pair_code(4, code);
            assert_eq!(t.pair_code(), code);
        }
    }

    #[test]
    fn back_arcs() {
        let t3 = Tournament::transitive(3).unwrap();
        let g = SemiCompleteDigraph::with_back_arcs(&t3, &[]).unwrap();
        assert_eq!(g.bidirectional_count(), 0);

        let g = SemiCompleteDigraph::with_back_arcs(&t3, &[(2, 0)]).unwrap();
        assert!(g.has_arc(2, 0) && g.has_arc(0, 1) && g.has_arc(1, 2));
        assert_eq!(g.bidirectional_pairs(), vec![(0, 2)]);

        // duplicating an existing direction
        assert!(SemiCompleteDigraph::with_back_arcs(&t3, &[(0, 2)]).is_err());
        // same reversal twice
        assert!(SemiCompleteDigraph::with_back_arcs(&t3, &[(2, 0), (2, 0)]).is_err());

        let t8 = Tournament::transitive(8).unwrap();
        let matching: Vec<_> = (0..4).map(|i| (2 * i + 1, 2 * i)).collect();
        let g = SemiCompleteDigraph::with_back_arcs(&t8, &matching).unwrap();
        assert_eq!(g.bidirectional_count(), 4);
    }

    #[test]
    fn semi_complete_validation() {
        assert!(SemiCompleteDigraph::from_arcs(3, |i, j| i < j && !(i == 0 && j == 2)).is_err());
        let g = SemiCompleteDigraph::from_arcs(3, |i, j| i != j).unwrap();
        assert_eq!(g.bidirectional_count(), 3);
        assert_eq!(g, SemiCompleteDigraph::complete(3));
    }

    #[test]
    fn orient_resolves_pairs() {
        let g = SemiCompleteDigraph::complete(3);
        let t = g.orient(|_, _| true);
        assert!(t.is_transitive());
        let t = g.orient(|i, j| !(i == 0 && j == 2));
        assert_eq!(t, Tournament::circulant(3).unwrap());
    }
}
