//! Definitional brute force used by the acceptance criteria. Nothing here
//! calls into the search or classification code it is compared against.

use tourpat_core::{BinaryMatrix, Digraph, SemiCompleteDigraph, Tournament};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for v in 0..n {
        let mut next = Vec::with_capacity(out.len() * (v + 1));
        for p in &out {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Fewest arcs pointing backwards over all `n!` orderings.
pub fn beta(t: &Tournament) -> usize {
    permutations(t.order())
        .iter()
        .map(|p| {
            let mut back = 0;
            for a in 0..p.len() {
                for b in a + 1..p.len() {
                    back += usize::from(t.has_arc(p[b], p[a]));
                }
            }
            back
        })
        .min()
        .unwrap_or(0)
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..1u64 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Some increasing rows and columns cover every 1 of `m`.
pub fn contains_pattern(a: &BinaryMatrix, m: &BinaryMatrix) -> bool {
    if m.rows() > a.rows() || m.cols() > a.cols() {
        return false;
    }
    let ones = m.ones();
    let cols = choose(a.cols(), m.cols());
    choose(a.rows(), m.rows()).iter().any(|r| {
        cols.iter()
            .any(|c| ones.iter().all(|&(i, j)| a.get(r[i], c[j])))
    })
}

/// One more than the most 1s in an `n x n` matrix avoiding `m`, over all
/// `2^(n^2)` matrices.
pub fn ex(n: usize, m: &BinaryMatrix) -> usize {
    let mut best = 0;
    for code in 0..1u64 << (n * n) {
        let ones = code.count_ones() as usize;
        if ones + 1 > best && !contains_pattern(&BinaryMatrix::from_code(n, n, code), m) {
            best = ones + 1;
        }
    }
    best
}

/// Some injective map sends every arc of `h` onto an arc of `g`.
pub fn has_copy<G: Digraph, H: Digraph>(g: &G, h: &H) -> bool {
    fn go<G: Digraph, H: Digraph>(g: &G, h: &H, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == h.order() {
            return true;
        }
        for x in 0..g.order() {
            if map.contains(&x) {
                continue;
            }
            let fits = (0..k).all(|a| {
                (!h.has_arc(a, k) || g.has_arc(map[a], x))
                    && (!h.has_arc(k, a) || g.has_arc(x, map[a]))
            });
            if fits {
                map.push(x);
                if go(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(g, h, &mut Vec::new())
}

/// Most bidirectional pairs addable to `base` without creating `h`, plus
/// one; 0 when `base` contains `h`. Every subset of pairs is tried.
pub fn augment(base: &Tournament, h: &Tournament) -> usize {
    let n = base.order();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut best = 0;
    for mask in 0..1u64 << pairs.len() {
        let k = mask.count_ones() as usize;
        if k < best {
            continue;
        }
        let mut g = SemiCompleteDigraph::from(base);
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                g.make_bidirectional(i, j);
            }
        }
        if !has_copy(&g, h) {
            best = k + 1;
        }
    }
    best
}

/// Maximum of [`augment`] over every labeled tournament on `n` vertices.
pub fn t_general(n: usize, h: &Tournament) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs)
        .map(|code| augment(&Tournament::from_pair_code(n, code), h))
        .max()
        .unwrap_or(0)
}

/// The bipartite graph of 1-entries (rows on one side, columns on the
/// other) has no cycle.
pub fn bipartite_forest(m: &BinaryMatrix) -> bool {
    let mut parent: Vec<usize> = (0..m.rows() + m.cols()).collect();
    fn root(p: &[usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for (i, j) in m.ones() {
        let (a, b) = (root(&parent, i), root(&parent, m.rows() + j));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// `vs` lists distinct vertices with every arc pointing forward in list order.
pub fn is_transitive_chain<D: Digraph>(g: &D, vs: &[usize]) -> bool {
    (0..vs.len()).all(|a| (a + 1..vs.len()).all(|b| vs[a] != vs[b] && g.has_arc(vs[a], vs[b])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(beta(&Tournament::circulant(3).unwrap()), 1);
        let c3 = Tournament::circulant(3).unwrap();
        assert_eq!(augment(&Tournament::transitive(3).unwrap(), &c3), 2);
        assert_eq!(ex(2, &BinaryMatrix::identity(2)), 4);
        assert!(bipartite_forest(&BinaryMatrix::identity(3)));
        assert!(!bipartite_forest(
            &BinaryMatrix::from_rows(&["11", "11"]).unwrap()
        ));
    }
}
