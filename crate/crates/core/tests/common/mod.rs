//! Brute-force reference implementations, written directly from the
//! definitions and sharing no code with the library beyond the graph types.
#![allow(dead_code)]

use tourpat_core::{BinaryMatrix, Digraph, SemiCompleteDigraph, Tournament};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// No directed triangle inside `set`.
pub fn transitive_set<D: Digraph>(g: &D, set: &[usize]) -> bool {
    for &a in set {
        for &b in set {
            for &c in set {
                if a != b
                    && b != c
                    && a != c
                    && g.has_arc(a, b)
                    && g.has_arc(b, c)
                    && g.has_arc(c, a)
                {
                    return false;
                }
            }
        }
    }
    true
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn back_edges(t: &Tournament, ord: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..ord.len() {
        for q in p + 1..ord.len() {
            if t.has_arc(ord[q], ord[p]) {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

pub fn beta(t: &Tournament) -> usize {
    permutations(t.order())
        .iter()
        .map(|p| back_edges(t, p).len())
        .min()
        .unwrap()
}

pub fn chromatic(t: &Tournament) -> usize {
    let n = t.order();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut classes = vec![Vec::new(); k];
            for v in 0..n {
                classes[c % k].push(v);
                c /= k;
            }
            if classes.iter().all(|cl| transitive_set(t, cl)) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Smallest class over all 2-colourings into transitive sets.
pub fn min_class(t: &Tournament) -> Option<usize> {
    let n = t.order();
    (0..1u64 << n)
        .filter(|&m| {
            transitive_set(t, &members(m, n)) && transitive_set(t, &members(!m & ((1 << n) - 1), n))
        })
        .map(|m| (m.count_ones() as usize).min(n - m.count_ones() as usize))
        .min()
}

pub fn forest(t: &Tournament) -> bool {
    let n = t.order();
    (0..1u64 << n).any(|m| {
        let left = members(m, n);
        let right = members(!m & ((1 << n) - 1), n);
        if !transitive_set(t, &left) || !transitive_set(t, &right) {
            return false;
        }
        let cross: Vec<(usize, usize)> = right
            .iter()
            .flat_map(|&r| {
                left.iter()
                    .filter(move |&&l| t.has_arc(r, l))
                    .map(move |&l| (r, l))
            })
            .collect();
        acyclic(n, &cross)
    })
}

pub fn weak_forest(t: &Tournament) -> bool {
    permutations(t.order())
        .iter()
        .any(|p| acyclic(t.order(), &back_edges(t, p)))
}

pub fn star(t: &Tournament) -> bool {
    permutations(t.order()).iter().any(|p| {
        let e = back_edges(t, p);
        e.is_empty()
            || e.iter().all(|&(a, b)| a == e[0].0 || b == e[0].0)
            || e.iter().all(|&(a, b)| a == e[0].1 || b == e[0].1)
    })
}

pub fn homogeneous_sets<D: Digraph>(g: &D) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for m in 0..1u64 << n {
        let k = m.count_ones() as usize;
        if k < 2 || k >= n {
            continue;
        }
        let set = members(m, n);
        let ok = (0..n)
            .filter(|v| m >> v & 1 == 0)
            .all(|z| set.iter().all(|&x| g.has_arc(z, x)) || set.iter().all(|&x| g.has_arc(x, z)));
        if ok {
            out.push(set);
        }
    }
    out
}

pub fn circulant_iso(t: &Tournament) -> bool {
    let n = t.order();
    if n % 2 == 0 || n < 3 {
        return false;
    }
    let c = Tournament::circulant(n).unwrap();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|i| (0..n).all(|j| i == j || c.has_arc(i, j) == t.has_arc(p[i], p[j]))))
}

pub fn three_parts(t: &Tournament) -> bool {
    let n = t.order();
    (0..3usize.pow(n as u32)).any(|code| {
        let mut c = code;
        let mut parts = vec![Vec::new(); 3];
        for v in 0..n {
            parts[c % 3].push(v);
            c /= 3;
        }
        (0..3).all(|i| {
            (i + 1..3).all(|j| {
                let mut u = parts[i].clone();
                u.extend(&parts[j]);
                transitive_set(t, &u)
            })
        })
    })
}

pub fn q5(t: &Tournament) -> bool {
    circulant_iso(t) || three_parts(t)
}

/// Every injective map, in lexicographic order.
pub fn copies<G: Digraph, H: Digraph>(g: &G, h: &H) -> Vec<Vec<usize>> {
    let (n, k) = (g.order(), h.order());
    let mut out = Vec::new();
    let mut map = Vec::new();
    fn go<G: Digraph, H: Digraph>(
        g: &G,
        h: &H,
        n: usize,
        k: usize,
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if map.len() == k {
            let ok = (0..k)
                .all(|a| (0..k).all(|b| a == b || !h.has_arc(a, b) || g.has_arc(map[a], map[b])));
            if ok {
                out.push(map.clone());
            }
            return;
        }
        for x in 0..n {
            if !map.contains(&x) {
                map.push(x);
                go(g, h, n, k, map, out);
                map.pop();
            }
        }
    }
    go(g, h, n, k, &mut map, &mut out);
    out
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..1u64 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| members(m, n))
        .collect()
}

pub fn contains_pattern(a: &BinaryMatrix, m: &BinaryMatrix) -> bool {
    if m.rows() > a.rows() || m.cols() > a.cols() {
        return false;
    }
    let rs = subsets(a.rows(), m.rows());
    let cs = subsets(a.cols(), m.cols());
    rs.iter().any(|r| {
        cs.iter()
            .any(|c| m.ones().iter().all(|&(i, j)| a.get(r[i], c[j])))
    })
}

/// One more than the most 1s in an `n x n` matrix avoiding `m`.
pub fn ex(n: usize, m: &BinaryMatrix) -> usize {
    let mut best = 0;
    for code in 0..1u64 << (n * n) {
        let ones = code.count_ones() as usize;
        if ones < best {
            continue;
        }
        let a = BinaryMatrix::from_code(n, n, code);
        if !contains_pattern(&a, m) {
            best = ones + 1;
        }
    }
    best
}

pub fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Most reversals of `base` arcs keeping the result `H`-free, plus one; 0
/// if `base` already contains `H`.
pub fn augment(base: &Tournament, h: &Tournament) -> usize {
    let n = base.order();
    let pairs = lex_pairs(n);
    let mut best = 0;
    for m in 0..1u64 << pairs.len() {
        let k = m.count_ones() as usize;
        if k < best {
            continue;
        }
        let mut g = SemiCompleteDigraph::from(base);
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            if m >> idx & 1 == 1 {
                g.make_bidirectional(i, j);
            }
        }
        if copies(&g, h).is_empty() {
            best = k + 1;
        }
    }
    best
}

pub fn t_general(n: usize, h: &Tournament) -> usize {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs)
        .map(|code| augment(&Tournament::from_pair_code(n, code), h))
        .max()
        .unwrap()
}
