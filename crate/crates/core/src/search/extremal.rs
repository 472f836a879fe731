use super::{
    contains_pattern, contains_subdigraph, contains_subdigraph_through, Budget, ExtremalResult,
    ExtremalValue,
};
use crate::digraph::{Digraph, SemiCompleteDigraph, Tournament};
use crate::error::{check_cap, Error, Result};
use crate::limits::Limits;
use crate::matrix::BinaryMatrix;

fn finish<W>(
    best: Option<usize>,
    frontier: Option<usize>,
    witness: Option<W>,
    nodes: u64,
) -> ExtremalResult<W> {
    let value = match (best, frontier) {
        (Some(b), None) => ExtremalValue::Exact { value: b + 1 },
        (None, None) => ExtremalValue::Exact { value: 0 },
        (b, Some(f)) => {
            let lower = b.map_or(0, |b| b + 1);
            ExtremalValue::Bracket {
                lower,
                upper: f.max(b.unwrap_or(0)) + 1,
            }
        }
    };
    ExtremalResult {
        value,
        witness,
        nodes_explored: nodes,
    }
}

struct MatrixSearch<'a> {
    pattern: &'a BinaryMatrix,
    n: usize,
    host: BinaryMatrix,
    best: Option<usize>,
    witness: Option<BinaryMatrix>,
    frontier: Option<usize>,
    nodes: u64,
    budget: &'a Budget,
}

impl MatrixSearch<'_> {
    fn go(&mut self, cell: usize, count: usize) {
        let cells = self.n * self.n;
        let bound = count + (cells - cell);
        if self.best.is_some_and(|b| bound <= b) {
            return;
        }
        self.nodes += 1;
        if self.budget.exhausted(self.nodes) {
            self.frontier = Some(self.frontier.map_or(bound, |f| f.max(bound)));
            return;
        }
        if cell == cells {
            self.best = Some(count);
            self.witness = Some(self.host.clone());
            return;
        }
        let (r, c) = (cell / self.n, cell % self.n);
        self.host.set(r, c, true);
        if contains_pattern(&self.host, self.pattern).is_none() {
            self.go(cell + 1, count + 1);
        }
        self.host.set(r, c, false);
        self.go(cell + 1, count);
    }
}

/// `ex(n, M)`: one more than the largest number of 1s in an `n x n` matrix
/// avoiding `M`. All-zero rows and columns of `M` are removed first. When
/// the remaining pattern does not fit in `n x n` the value is `n^2 + 1`;
/// when it has no 1s at all the value is 0.
pub fn ex_exact(
    n: usize,
    m: &BinaryMatrix,
    limits: &Limits,
    budget: &Budget,
) -> Result<ExtremalResult<BinaryMatrix>> {
    if n == 0 {
        return Err(Error::invalid("host size n must be at least 1"));
    }
    check_cap("ex(n,M)", n, limits.ex)?;
    let pattern = m.strip_zero_lines();
    if pattern.count_ones() == 0 {
        return Ok(finish(None, None, None, 0));
    }
    if pattern.rows() > n || pattern.cols() > n {
        let full = BinaryMatrix::from_fn(n, n, |_, _| true);
        return Ok(finish(Some(n * n), None, Some(full), 0));
    }
    let mut s = MatrixSearch {
        pattern: &pattern,
        n,
        host: BinaryMatrix::zeros(n, n),
        best: None,
        witness: None,
        frontier: None,
        nodes: 0,
        budget,
    };
    s.go(0, 0);
    Ok(finish(s.best, s.frontier, s.witness, s.nodes))
}

/// A base tournament together with the reversed arcs added to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentationWitness {
    pub base: Tournament,
    /// Added arcs `(from, to)`; each is the reverse of an arc of `base`.
    pub reversals: Vec<(usize, usize)>,
}

impl AugmentationWitness {
    pub fn digraph(&self) -> SemiCompleteDigraph {
        SemiCompleteDigraph::with_back_arcs(&self.base, &self.reversals)
            .expect("reversals of base arcs")
    }
}

/// Shared state of the augmentation searches. Pairs are visited in
/// lexicographic order; adding a reversal is tried before skipping it, and
/// it is kept only if no copy of `H` runs through the new arc.
struct Augment<'a, H: Digraph + ?Sized> {
    h: &'a H,
    budget: &'a Budget,
    best: Option<usize>,
    witness: Option<AugmentationWitness>,
    frontier: Option<usize>,
    nodes: u64,
}

impl<H: Digraph + ?Sized> Augment<'_, H> {
    fn run(&mut self, base: &Tournament) {
        let n = base.order();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| if base.has_arc(i, j) { (j, i) } else { (i, j) })
            .collect();
        let mut g = SemiCompleteDigraph::from(base);
        let mut chosen = Vec::new();
        self.go(base, &pairs, 0, &mut g, &mut chosen);
    }

    fn go(
        &mut self,
        base: &Tournament,
        pairs: &[(usize, usize)],
        idx: usize,
        g: &mut SemiCompleteDigraph,
        chosen: &mut Vec<(usize, usize)>,
    ) {
        let count = chosen.len();
        let bound = count + (pairs.len() - idx);
        if self.best.is_some_and(|b| bound <= b) {
            return;
        }
        self.nodes += 1;
        if self.budget.exhausted(self.nodes) {
            self.frontier = Some(self.frontier.map_or(bound, |f| f.max(bound)));
            return;
        }
        if idx == pairs.len() {
            self.best = Some(count);
            self.witness = Some(AugmentationWitness {
                base: base.clone(),
                reversals: chosen.clone(),
            });
            return;
        }
        let (from, to) = pairs[idx];
        g.add_reverse_arc(from, to)
            .expect("pair is oriented the other way in the base");
        if contains_subdigraph_through(g, self.h, from, to).is_none() {
            chosen.push((from, to));
            self.go(base, pairs, idx + 1, g, chosen);
            chosen.pop();
        }
        g.remove_reverse_arc(from, to);
        self.go(base, pairs, idx + 1, g, chosen);
    }
}

fn check_sizes<H: Digraph + ?Sized>(n: usize, h: &H) -> Result<()> {
    if h.order() == 0 {
        return Err(Error::invalid("H must have at least one vertex"));
    }
    if n < h.order() {
        return Err(Error::invalid(format!(
            "n = {n} is smaller than |V(H)| = {}",
            h.order()
        )));
    }
    Ok(())
}

/// `t(T_n, H)`: one more than the largest number of bidirectional pairs that
/// can be added to `T_n` without creating a copy of `H`; 0 when `T_n`
/// already contains `H`.
pub fn t_transitive_exact<H: Digraph + ?Sized>(
    n: usize,
    h: &H,
    limits: &Limits,
    budget: &Budget,
) -> Result<ExtremalResult<AugmentationWitness>> {
    check_sizes(n, h)?;
    check_cap("t(T_n,H)", n, limits.t_transitive)?;
    let base = Tournament::transitive(n)?;
    if contains_subdigraph(&base, h).is_some() {
        return Ok(finish(None, None, None, 0));
    }
    let mut s = Augment {
        h,
        budget,
        best: None,
        witness: None,
        frontier: None,
        nodes: 0,
    };
    s.run(&base);
    Ok(finish(s.best, s.frontier, s.witness, s.nodes))
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm); stops when
/// `f` returns true.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if f(&perm) {
        return;
    }
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if f(&perm) {
                return;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Pair codes (see [`Tournament::from_pair_code`]) of one representative
/// per isomorphism class: the least code over all relabelings, ascending.
pub fn canonical_tournament_codes(n: usize) -> Vec<u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::new();
    for code in 0..(1u64 << pairs) {
        let t = Tournament::from_pair_code(n, code);
        let mut minimal = true;
        for_each_permutation(n, |perm| {
            if t.relabel(perm).pair_code() < code {
                minimal = false;
                return true;
            }
            false
        });
        if minimal {
            out.push(code);
        }
    }
    out
}

/// `t(n, H)`: one more than the largest number of bidirectional pairs in an
/// `H`-free semi-complete digraph on `n` vertices; 0 when every
/// `n`-vertex tournament contains `H`. Base tournaments are enumerated up
/// to isomorphism and share one incumbent, so the witness comes from the
/// first base (by canonical code) that attains the maximum.
pub fn t_general_exact<H: Digraph + ?Sized>(
    n: usize,
    h: &H,
    limits: &Limits,
    budget: &Budget,
) -> Result<ExtremalResult<AugmentationWitness>> {
    check_sizes(n, h)?;
    check_cap("t(n,H)", n, limits.t_general)?;
    let mut s = Augment {
        h,
        budget,
        best: None,
        witness: None,
        frontier: None,
        nodes: 0,
    };
    for code in canonical_tournament_codes(n) {
        let base = Tournament::from_pair_code(n, code);
        if contains_subdigraph(&base, h).is_some() {
            continue;
        }
        s.run(&base);
    }
    Ok(finish(s.best, s.frontier, s.witness, s.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn ex_single_one() {
        let one = BinaryMatrix::identity(1);
        for n in 1..=4 {
            let r = ex_exact(n, &one, &lim(), &Budget::unlimited()).unwrap();
            assert_eq!(r.value, ExtremalValue::Exact { value: 1 });
        }
    }

    #[test]
    fn ex_pattern_too_large() {
        let m1 = BinaryMatrix::from_rows(&["110", "100", "001"]).unwrap();
        let r = ex_exact(2, &m1, &lim(), &Budget::unlimited()).unwrap();
        assert_eq!(r.value.exact(), Some(5));
    }

    #[test]
    fn t_transitive_small() {
        let c3 = Tournament::circulant(3).unwrap();
        let r = t_transitive_exact(3, &c3, &lim(), &Budget::unlimited()).unwrap();
        assert_eq!(r.value.exact(), Some(2));
        let w = r.witness.unwrap();
        assert_eq!(w.reversals.len(), 1);
        assert!(contains_subdigraph(&w.digraph(), &c3).is_none());

        let t3 = Tournament::transitive(3).unwrap();
        let r = t_transitive_exact(5, &t3, &lim(), &Budget::unlimited()).unwrap();
        assert_eq!(r.value.exact(), Some(0));
        assert!(t_transitive_exact(2, &c3, &lim(), &Budget::unlimited()).is_err());
    }

    #[test]
    fn budget_gives_bracket() {
        let u5 = Tournament::u5();
        let r = t_transitive_exact(7, &u5, &lim(), &Budget::nodes(10)).unwrap();
        match r.value {
            ExtremalValue::Bracket { lower, upper } => assert!(lower <= upper),
            v => panic!("expected a bracket, got {v:?}"),
        }
    }

    #[test]
    fn canonical_counts() {
        // numbers of non-isomorphic tournaments on 1..=5 vertices
        let counts: Vec<usize> = (1..=5)
            .map(|n| canonical_tournament_codes(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 12]);
    }

    #[test]
    fn permutations_are_complete() {
        let mut seen = std::collections::HashSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
            false
        });
        assert_eq!(seen.len(), 24);
    }
}
