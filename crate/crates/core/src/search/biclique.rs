use crate::bits;
use crate::digraph::{Digraph, SemiCompleteDigraph};

/// Disjoint `A` (`|A| = a`) and `B` (`|B| = b`) with every pair between
/// them bidirectional. When `within` is given, `A` is drawn from the first
/// class and `B` from the second. `A` is chosen lexicographically first and
/// `B` as the smallest `b` common bidirectional neighbours of `A`.
pub fn find_bidirectional_biclique(
    g: &SemiCompleteDigraph,
    a: usize,
    b: usize,
    within: Option<(&[usize], &[usize])>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let words = bits::words_for(n).max(1);
    let to_row = |vs: &mut dyn Iterator<Item = usize>| {
        let mut row = vec![0u64; words];
        for v in vs {
            bits::set_bit(&mut row, v);
        }
        row
    };
    let (left, right) = match within {
        Some((x, y)) => (
            to_row(&mut x.iter().copied()),
            to_row(&mut y.iter().copied()),
        ),
        None => (to_row(&mut (0..n)), to_row(&mut (0..n))),
    };
    let bidi: Vec<Vec<u64>> = (0..n).map(|v| g.bidi_row(v)).collect();
    let left_vs: Vec<usize> = bits::row_ones(&left).collect();

    fn pick(
        left_vs: &[usize],
        start: usize,
        a: usize,
        b: usize,
        common: &[u64],
        bidi: &[Vec<u64>],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let available = bits::count_ones(common);
        if available < b {
            return None;
        }
        if chosen.len() == a {
            return Some(bits::row_ones(common).take(b).collect());
        }
        for i in start..left_vs.len() {
            if left_vs.len() - i < a - chosen.len() {
                break;
            }
            let v = left_vs[i];
            let mut next: Vec<u64> = common.iter().zip(&bidi[v]).map(|(c, r)| c & r).collect();
            for &u in chosen.iter() {
                bits::clear_bit(&mut next, u);
            }
            bits::clear_bit(&mut next, v);
            chosen.push(v);
            if let Some(bs) = pick(left_vs, i + 1, a, b, &next, bidi, chosen) {
                return Some(bs);
            }
            chosen.pop();
        }
        None
    }

    let mut chosen = Vec::with_capacity(a);
    let bs = pick(&left_vs, 0, a, b, &right, &bidi, &mut chosen)?;
    Some((chosen, bs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;

    #[test]
    fn examples() {
        let g = SemiCompleteDigraph::complete(5);
        let (a, b) = find_bidirectional_biclique(&g, 2, 3, None).unwrap();
        assert_eq!((a, b), (vec![0, 1], vec![2, 3, 4]));

        let t6 = Tournament::transitive(6).unwrap();
        let plain = SemiCompleteDigraph::from(&t6);
        assert!(find_bidirectional_biclique(&plain, 1, 1, None).is_none());

        let mut g = plain.clone();
        for x in [0, 1] {
            for y in [3, 4] {
                g.make_bidirectional(x, y);
            }
        }
        let (a, b) = find_bidirectional_biclique(&g, 2, 2, None).unwrap();
        assert_eq!((a, b), (vec![0, 1], vec![3, 4]));
        assert!(find_bidirectional_biclique(&g, 2, 3, None).is_none());
        let left = [3, 4];
        let right = [0, 1, 2];
        let (a, b) = find_bidirectional_biclique(&g, 2, 2, Some((&left, &right))).unwrap();
        assert_eq!((a, b), (vec![3, 4], vec![0, 1]));
    }
}
