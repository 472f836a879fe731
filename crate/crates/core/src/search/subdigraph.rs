use crate::bits;
use crate::digraph::Digraph;
use crate::witness::VertexEmbedding;

/// Backtracking over injective maps with forward checking: after each
/// assignment the candidate sets of all unassigned pattern vertices are
/// narrowed by the new vertex's out- or in-row, and the branch dies as soon
/// as one of them is empty.
struct Matcher<'a, G: Digraph + ?Sized, H: Digraph + ?Sized> {
    g: &'a G,
    h: &'a H,
    /// Pattern vertices in assignment order.
    order: Vec<usize>,
    words: usize,
    /// `layers[d]` holds the candidate rows of order positions `d..`.
    layers: Vec<Vec<u64>>,
    map: Vec<usize>,
}

impl<'a, G: Digraph + ?Sized, H: Digraph + ?Sized> Matcher<'a, G, H> {
    fn new(g: &'a G, h: &'a H, order: Vec<usize>) -> Self {
        let k = h.order();
        let words = bits::words_for(g.order()).max(1);
        let mut first = vec![0u64; k * words];
        for p in 0..k {
            let row = &mut first[p * words..(p + 1) * words];
            for v in 0..g.order() {
                bits::set_bit(row, v);
            }
        }
        let mut layers = vec![first];
        layers.resize(k + 1, vec![0u64; k * words]);
        Self {
            g,
            h,
            order,
            words,
            layers,
            map: vec![usize::MAX; k],
        }
    }

    fn restrict(&mut self, position: usize, vertex: usize) {
        let w = self.words;
        let row = &mut self.layers[0][position * w..(position + 1) * w];
        row.iter_mut().for_each(|x| *x = 0);
        bits::set_bit(row, vertex);
    }

    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let k = self.order.len();
        if depth == k {
            return visit(&self.map);
        }
        let w = self.words;
        let u = self.order[depth];
        let candidates: Vec<usize> =
            bits::row_ones(&self.layers[depth][depth * w..(depth + 1) * w]).collect();
        for x in candidates {
            let (head, tail) = self.layers.split_at_mut(depth + 1);
            let cur = &head[depth];
            let next = &mut tail[0];
            let mut alive = true;
            for q in depth + 1..k {
                let wv = self.order[q];
                let dst = &mut next[q * w..(q + 1) * w];
                dst.copy_from_slice(&cur[q * w..(q + 1) * w]);
                bits::clear_bit(dst, x);
                if self.h.has_arc(u, wv) {
                    for (d, s) in dst.iter_mut().zip(self.g.out_row(x)) {
                        *d &= s;
                    }
                }
                if self.h.has_arc(wv, u) {
                    for (d, s) in dst.iter_mut().zip(self.g.in_row(x)) {
                        *d &= s;
                    }
                }
                if dst.iter().all(|&d| d == 0) {
                    alive = false;
                    break;
                }
            }
            if !alive {
                continue;
            }
            self.map[u] = x;
            if self.run(depth + 1, visit) {
                return true;
            }
        }
        self.map[u] = usize::MAX;
        false
    }
}

/// An injective map sending every arc of `h` onto an arc of `g`. The first
/// map in lexicographic order of `(f(0), f(1), ...)` is returned.
pub fn contains_subdigraph<G: Digraph + ?Sized, H: Digraph + ?Sized>(
    g: &G,
    h: &H,
) -> Option<VertexEmbedding> {
    if h.order() > g.order() {
        return None;
    }
    let mut m = Matcher::new(g, h, (0..h.order()).collect());
    let mut found = None;
    m.run(0, &mut |map| {
        found = Some(map.to_vec());
        true
    });
    found.map(VertexEmbedding::new)
}

/// A copy of `h` that uses the host arc `from -> to` as the image of one of
/// its arcs. Pattern arcs are tried in lexicographic order.
pub fn contains_subdigraph_through<G: Digraph + ?Sized, H: Digraph + ?Sized>(
    g: &G,
    h: &H,
    from: usize,
    to: usize,
) -> Option<VertexEmbedding> {
    let k = h.order();
    if k > g.order() || !g.has_arc(from, to) {
        return None;
    }
    for a in 0..k {
        for b in 0..k {
            if !h.has_arc(a, b) {
                continue;
            }
            let mut order = vec![a, b];
            order.extend((0..k).filter(|&v| v != a && v != b));
            let mut m = Matcher::new(g, h, order);
            m.restrict(0, from);
            m.restrict(1, to);
            let mut found = None;
            m.run(0, &mut |map| {
                found = Some(map.to_vec());
                true
            });
            if let Some(map) = found {
                return Some(VertexEmbedding::new(map));
            }
        }
    }
    None
}

/// Calls `visit` on every copy (injective arc-preserving map) in
/// lexicographic order; stops early when `visit` returns true.
pub fn for_each_copy<G: Digraph + ?Sized, H: Digraph + ?Sized>(
    g: &G,
    h: &H,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    if h.order() > g.order() {
        return;
    }
    let mut m = Matcher::new(g, h, (0..h.order()).collect());
    m.run(0, &mut visit);
}

pub fn count_copies<G: Digraph + ?Sized, H: Digraph + ?Sized>(g: &G, h: &H) -> u64 {
    let mut count = 0;
    for_each_copy(g, h, |_| {
        count += 1;
        false
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{SemiCompleteDigraph, Tournament};

    #[test]
    fn complete_host_gives_identity() {
        let g = SemiCompleteDigraph::complete(5);
        let h = Tournament::u5();
        assert_eq!(
            contains_subdigraph(&g, &h).unwrap().map,
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn transitive_host_avoids_cycle() {
        let t = Tournament::transitive(10).unwrap();
        assert!(contains_subdigraph(&t, &Tournament::circulant(3).unwrap()).is_none());
    }

    #[test]
    fn single_back_arc_triangle() {
        let t3 = Tournament::transitive(3).unwrap();
        let g = SemiCompleteDigraph::with_back_arcs(&t3, &[(2, 0)]).unwrap();
        let c3 = Tournament::circulant(3).unwrap();
        let w = contains_subdigraph(&g, &c3).unwrap();
        w.verify(&g, &c3).unwrap();
        // the three rotations of the cycle 0 -> 1 -> 2 -> 0 of the host
        assert_eq!(count_copies(&g, &c3), 3);
        let w = contains_subdigraph_through(&g, &c3, 2, 0).unwrap();
        w.verify(&g, &c3).unwrap();
        // the other half of the bidirectional pair lies on no triangle
        assert!(contains_subdigraph_through(&g, &c3, 0, 2).is_none());
    }

    #[test]
    fn large_host_multiword() {
        let t = Tournament::transitive(150).unwrap();
        let mut g = SemiCompleteDigraph::from(&t);
        g.add_reverse_arc(140, 70).unwrap();
        let c3 = Tournament::circulant(3).unwrap();
        let w = contains_subdigraph(&g, &c3).unwrap();
        w.verify(&g, &c3).unwrap();
        assert_eq!(w.map[0], 70);
    }

    #[test]
    fn copies_of_transitive_in_transitive() {
        let t = Tournament::transitive(6).unwrap();
        let t3 = Tournament::transitive(3).unwrap();
        assert_eq!(count_copies(&t, &t3), 20);
    }
}
