use crate::bits;
use crate::digraph::Digraph;

/// Greedy chain inside `candidates`: take the vertex with the most
/// out-neighbours among the remaining candidates (lowest index on ties),
/// then continue inside its out-neighbourhood. Each step keeps at least
/// half of the rest, so `2^(h-1)` candidates always yield `h` vertices.
/// In a semi-complete digraph, candidates joined to the chain by a
/// bidirectional pair are dropped.
pub fn find_transitive_subtournament_within<D: Digraph + ?Sized>(
    g: &D,
    candidates: &[usize],
    h: usize,
) -> Option<Vec<usize>> {
    if h == 0 {
        return Some(Vec::new());
    }
    let words = bits::words_for(g.order()).max(1);
    let mut set = vec![0u64; words];
    for &v in candidates {
        bits::set_bit(&mut set, v);
    }
    let mut chain = Vec::with_capacity(h);
    while chain.len() < h {
        let mut best: Option<(usize, usize)> = None;
        for v in bits::row_ones(&set) {
            let d: usize = g
                .out_row(v)
                .iter()
                .zip(&set)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            if best.is_none_or(|(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        let (_, v) = best?;
        chain.push(v);
        for (s, o) in set.iter_mut().zip(g.out_row(v)) {
            *s &= o;
        }
        // drop any vertex that also points back to v
        for (s, i) in set.iter_mut().zip(g.in_row(v)) {
            *s &= !i;
        }
    }
    Some(chain)
}

/// `h` vertices inducing a transitive subtournament, listed source first.
pub fn find_transitive_subtournament<D: Digraph + ?Sized>(g: &D, h: usize) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..g.order()).collect();
    find_transitive_subtournament_within(g, &all, h)
}
