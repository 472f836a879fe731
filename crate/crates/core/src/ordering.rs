use std::collections::BTreeSet;

use crate::digraph::{Digraph, Tournament};
use crate::error::{Error, Result};

/// A linear order of a tournament's vertices: `perm[p]` is the vertex at position `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexOrdering {
    perm: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::invalid(format!(
                    "ordering is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.perm.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    #[inline]
    pub fn vertex_at(&self, position: usize) -> usize {
        self.perm[position]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// `positions()[v]` is the position of vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (p, &v) in self.perm.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

/// Simple undirected graph whose vertices are the positions `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UndirectedOrderedGraph {
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

impl UndirectedOrderedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.order();
        if u == v || u >= n || v >= n {
            return Err(Error::invalid(format!(
                "edge ({}, {}) needs distinct endpoints in 1..{n}",
                u + 1,
                v + 1
            )));
        }
        let new = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if new {
            self.edges += 1;
        }
        Ok(new)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        if had {
            self.edges -= 1;
        }
        had
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced on `vertices` (sorted ascending), relabelled `0..k`
    /// so the order is preserved.
    pub fn induced(&self, vertices: &[usize]) -> UndirectedOrderedGraph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Self::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.adj[v].range(v + 1..) {
                if index[w] != usize::MAX {
                    g.add_edge(i, index[w]).expect("distinct");
                }
            }
        }
        g
    }

    /// Drops isolated vertices; returns the compressed graph and the original
    /// position of each new vertex.
    pub fn without_isolated(&self) -> (UndirectedOrderedGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| self.degree(v) > 0).collect();
        (self.induced(&keep), keep)
    }

    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.order()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let a = find(&mut parent, u);
            let b = find(&mut parent, v);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// All edges share a common endpoint (vacuously true with no edges).
    pub fn edges_share_endpoint(&self) -> bool {
        let edges = self.edges();
        match edges.first() {
            None => true,
            Some(&(a, b)) => {
                edges.iter().all(|&(u, v)| u == a || v == a)
                    || edges.iter().all(|&(u, v)| u == b || v == b)
            }
        }
    }
}

/// Undirected graph on positions with `p < q` joined iff `H` has the arc
/// `ord(q) -> ord(p)`.
pub fn back_edge_graph(h: &Tournament, ord: &VertexOrdering) -> Result<UndirectedOrderedGraph> {
    let n = h.order();
    if ord.len() != n {
        return Err(Error::invalid(format!(
            "ordering has {} vertices, tournament has {n}",
            ord.len()
        )));
    }
    let mut g = UndirectedOrderedGraph::new(n);
    for p in 0..n {
        for q in p + 1..n {
            if h.has_arc(ord.vertex_at(q), ord.vertex_at(p)) {
                g.add_edge(p, q).expect("distinct");
            }
        }
    }
    Ok(g)
}

/// The tree `X_h` on positions `x_1..x_h` (0-based `0..h`): edges
/// `{x_i, x_{h-1}}` for `i = 1..h-2` and `{x_{h-2}, x_h}`.
pub fn make_xh_tree(h: usize) -> Result<UndirectedOrderedGraph> {
    if h < 3 {
        return Err(Error::invalid(format!("X_h needs h >= 3, got {h}")));
    }
    let mut g = UndirectedOrderedGraph::new(h);
    for i in 0..h - 2 {
        g.add_edge(i, h - 2)?;
    }
    g.add_edge(h - 3, h - 1)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xh_small_cases() {
        assert!(make_xh_tree(2).is_err());
        assert_eq!(make_xh_tree(3).unwrap().edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(
            make_xh_tree(4).unwrap().edges(),
            vec![(0, 2), (1, 2), (1, 3)]
        );
        for h in 3..20 {
            let x = make_xh_tree(h).unwrap();
            assert_eq!(x.edge_count(), h - 1);
            assert!(x.is_acyclic());
        }
    }

    #[test]
    fn back_edges_of_delta() {
        let t = Tournament::transitive(6).unwrap();
        assert_eq!(
            back_edge_graph(&t, &VertexOrdering::identity(6))
                .unwrap()
                .edge_count(),
            0
        );

        let d = Tournament::delta(3).unwrap();
        let g = back_edge_graph(&d, &VertexOrdering::identity(9)).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (3, 5), (6, 8)]);

        let c3 = Tournament::circulant(3).unwrap();
        for perm in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            let o = VertexOrdering::new(perm.to_vec()).unwrap();
            assert!(back_edge_graph(&c3, &o).unwrap().edge_count() >= 1);
        }
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.positions(), vec![1, 2, 0]);
    }

    #[test]
    fn induced_keeps_order() {
        let g = UndirectedOrderedGraph::from_edges(5, &[(0, 4), (1, 3), (2, 3)]).unwrap();
        let (c, keep) = g.without_isolated();
        assert_eq!(keep, vec![0, 1, 2, 3, 4]);
        assert_eq!(c, g);
        let s = g.induced(&[1, 3, 4]);
        assert_eq!(s.edges(), vec![(0, 1)]);
        assert!(!g.has_edge(0, 1));
        assert!(UndirectedOrderedGraph::from_edges(2, &[(0, 0)]).is_err());
    }
}
