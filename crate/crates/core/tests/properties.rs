mod common;

use proptest::prelude::*;
use tourpat_core::io;
use tourpat_core::reduce::{matrix_to_interval_digraph, matrix_to_mstar};
use tourpat_core::search::{contains_pattern, contains_subdigraph_through, for_each_copy};
use tourpat_core::{
    back_edge_graph, BinaryMatrix, Digraph, SemiCompleteDigraph, Tournament, VertexOrdering,
};

fn tournament() -> impl Strategy<Value = Tournament> {
    (1usize..=12).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Tournament::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn semi_complete() -> impl Strategy<Value = SemiCompleteDigraph> {
    tournament().prop_flat_map(|t| {
        let pairs = common::lex_pairs(t.order());
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let mut g = SemiCompleteDigraph::from(&t);
            for (&(i, j), b) in pairs.iter().zip(bits) {
                if b {
                    g.make_bidirectional(i, j);
                }
            }
            g
        })
    })
}

fn matrix(max: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c)
            .prop_map(move |bits| BinaryMatrix::from_fn(r, c, |i, j| bits[i * c + j]))
    })
}

fn with_ordering() -> impl Strategy<Value = (Tournament, Vec<usize>)> {
    tournament().prop_flat_map(|t| {
        let n = t.order();
        (Just(t), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn tournament_text_round_trip(t in tournament()) {
        prop_assert_eq!(io::parse_tournament(&io::write_digraph(&t)).unwrap(), t);
    }

    #[test]
    fn semi_complete_text_round_trip(g in semi_complete()) {
        prop_assert_eq!(io::parse_semi_complete(&io::write_digraph(&g)).unwrap(), g);
    }

    #[test]
    fn matrix_text_round_trip(m in matrix(9)) {
        prop_assert_eq!(io::parse_matrix(&io::write_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn back_edge_count_matches_arcs((t, perm) in with_ordering()) {
        let ord = VertexOrdering::new(perm.clone()).unwrap();
        let g = back_edge_graph(&t, &ord).unwrap();
        let pos = ord.positions();
        let n = t.order();
        let backwards = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && t.has_arc(u, v) && pos[v] < pos[u])
            .count();
        prop_assert_eq!(g.edge_count(), backwards);
    }

    #[test]
    fn bidi_count_matches_pairs(g in semi_complete()) {
        prop_assert_eq!(g.bidirectional_count(), g.bidirectional_pairs().len());
        prop_assert_eq!(g.bidi_graph().edge_count(), g.bidirectional_count());
    }

    #[test]
    fn mstar_cross_arcs_reproduce_ones(k in 1usize..=6, bits in proptest::collection::vec(any::<bool>(), 36)) {
        // the diagonal is forced on so no line is zero
        let m = BinaryMatrix::from_fn(k, k, |i, j| i == j || bits[i * 6 + j]);
        let s = matrix_to_mstar(&m).unwrap();
        let k = s.k;
        let back: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| s.tournament.has_arc(k + j, i))
            .collect();
        prop_assert_eq!(back, m.ones());
    }

    #[test]
    fn interval_digraph_counts(m in matrix(8)) {
        let a = m.pad_square();
        let g = matrix_to_interval_digraph(&a).unwrap();
        let n = a.rows();
        prop_assert_eq!(g.bidirectional_count(), a.count_ones());
        prop_assert!(g.bidirectional_pairs().iter().all(|&(i, j)| i < n && j >= n));
    }

    #[test]
    fn through_search_uses_the_arc(g in semi_complete()) {
        let c3 = Tournament::circulant(3).unwrap();
        for (i, j) in g.bidirectional_pairs() {
            for (from, to) in [(i, j), (j, i)] {
                if let Some(w) = contains_subdigraph_through(&g, &c3, from, to) {
                    w.verify(&g, &c3).unwrap();
                    let uses = (0..3).any(|a| (0..3).any(|b| c3.has_arc(a, b) && w.map[a] == from && w.map[b] == to));
                    prop_assert!(uses);
                }
            }
        }
    }
}

#[test]
fn circulants_are_regular() {
    for n in (3..=99).step_by(2) {
        let c = Tournament::circulant(n).unwrap();
        assert!((0..n).all(|v| c.out_degree(v) == (n - 1) / 2));
        assert!(c.is_regular());
    }
}

/// Copies of `M*` in the interval digraph of `A` with every `l` image below
/// every `r` image, compared against pattern containment in both directions.
fn reduction_agrees(a: &BinaryMatrix, m: &BinaryMatrix) {
    let star = matrix_to_mstar(m).unwrap();
    let g = matrix_to_interval_digraph(a).unwrap();
    let (k, n) = (star.k, a.rows());
    let mut ordered = None;
    for_each_copy(&g, &star.tournament, |map| {
        let max_l = map[..k].iter().max().unwrap();
        let min_r = map[k..].iter().min().unwrap();
        if max_l < min_r {
            ordered = Some(map.to_vec());
            return true;
        }
        false
    });
    let w = contains_pattern(a, m);
    assert_eq!(w.is_some(), ordered.is_some(), "A = {a:?}");
    if let Some(map) = ordered {
        // l images are rows (transitive order forces increasing), r images are columns
        let rows: Vec<usize> = map[..k].to_vec();
        let cols: Vec<usize> = map[k..]
            .iter()
            .map(|&x| x.checked_sub(n).expect("r image among columns"))
            .collect();
        assert!(rows.windows(2).all(|w| w[0] < w[1]) && cols.windows(2).all(|w| w[0] < w[1]));
        assert!(rows.iter().all(|&r| r < n));
        for (i, j) in m.ones() {
            assert!(a.get(rows[i], cols[j]));
        }
    }
    if let Some(w) = w {
        let mut map: Vec<usize> = w.rows.clone();
        map.extend(w.cols.iter().map(|&c| c + n));
        tourpat_core::VertexEmbedding::new(map)
            .verify(&g, &star.tournament)
            .unwrap();
    }
}

#[test]
fn reduction_round_trip_exhaustive_small() {
    let (m1, _) = tourpat_core::reduce::figure1_matrices();
    let patterns = [m1, BinaryMatrix::identity(2)];
    for n in 1..=3 {
        for code in 0..1u64 << (n * n) {
            let a = BinaryMatrix::from_code(n, n, code);
            for m in &patterns {
                reduction_agrees(&a, m);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]
    #[test]
    fn reduction_round_trip_random(n in 4usize..=5, bits in proptest::collection::vec(any::<bool>(), 25)) {
        let a = BinaryMatrix::from_fn(n, n, |i, j| bits[i * 5 + j]);
        let (m1, _) = tourpat_core::reduce::figure1_matrices();
        reduction_agrees(&a, &m1);
        reduction_agrees(&a, &BinaryMatrix::identity(2));
    }
}
