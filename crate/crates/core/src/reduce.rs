//! Passing between 0/1 patterns and tournaments: the tournament `M*` of a
//! square pattern, its layered blow-up `M*_p`, the interval digraph of a host
//! matrix, and the dense-interval-pair recursion.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::digraph::{Digraph, SemiCompleteDigraph, Tournament};
use crate::error::{check_cap, Error, Result};
use crate::matrix::BinaryMatrix;

/// `M*` for a `k x k` pattern: vertex `i` is `l_{i+1}`, vertex `k + j` is
/// `r_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MStarTournament {
    pub tournament: Tournament,
    pub k: usize,
    pub matrix: BinaryMatrix,
    /// Every `l_i` has an in-neighbour in `R`.
    pub left_covered: bool,
    /// Every `r_j` has an out-neighbour in `L`.
    pub right_covered: bool,
}

impl MStarTournament {
    pub fn left(&self) -> Range<usize> {
        0..self.k
    }

    pub fn right(&self) -> Range<usize> {
        self.k..2 * self.k
    }
}

fn check_pattern(m: &BinaryMatrix) -> Result<usize> {
    if m.rows() != m.cols() {
        return Err(Error::invalid(format!(
            "pattern must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows() == 0 {
        return Err(Error::invalid("pattern must be at least 1x1"));
    }
    if let Some(r) = (0..m.rows()).find(|&r| m.is_zero_row(r)) {
        return Err(Error::invalid(format!(
            "row {} is all zero; remove zero rows and columns first",
            r + 1
        )));
    }
    if let Some(c) = (0..m.cols()).find(|&c| m.is_zero_col(c)) {
        return Err(Error::invalid(format!(
            "column {} is all zero; remove zero rows and columns first",
            c + 1
        )));
    }
    Ok(m.rows())
}

/// Arcs `l_i -> l_j` and `r_i -> r_j` for `i < j`; between the sides
/// `r_j -> l_i` when `M(i, j) = 1` and `l_i -> r_j` otherwise.
pub fn matrix_to_mstar(m: &BinaryMatrix) -> Result<MStarTournament> {
    let k = check_pattern(m)?;
    let tournament = Tournament::from_fn(2 * k, |u, v| match (u < k, v < k) {
        (true, true) | (false, false) => true,
        // u = l_i, v = r_j
        (true, false) => !m.get(u, v - k),
        (false, true) => unreachable!("from_fn only asks about u < v"),
    });
    let left_covered = (0..k).all(|l| (k..2 * k).any(|r| tournament.has_arc(r, l)));
    let right_covered = (k..2 * k).all(|r| (0..k).any(|l| tournament.has_arc(r, l)));
    Ok(MStarTournament {
        tournament,
        k,
        matrix: m.clone(),
        left_covered,
        right_covered,
    })
}

/// `M*_p`: blocks `s = 0..p` at offset `2ks`, each holding `L_s` then `R_s`
/// arranged as in `M*`. Across blocks `s < t`: `L_s -> L_t`, `R_s -> R_t`,
/// `L_s -> R_t`, and also `L_t -> R_s`, so every arc from `R` to `L` lies
/// inside a block and the blow-up stays a forest whenever `M` is acyclic.
pub fn mstar_blowup(m: &BinaryMatrix, p: usize) -> Result<Tournament> {
    let k = check_pattern(m)?;
    if p == 0 {
        return Err(Error::invalid("blow-up needs p >= 1"));
    }
    let block = 2 * k;
    Ok(Tournament::from_fn(block * p, |u, v| {
        let (su, iu) = (u / block, u % block);
        let (sv, iv) = (v / block, v % block);
        let (lu, lv) = (iu < k, iv < k);
        if su == sv {
            return match (lu, lv) {
                (true, false) => !m.get(iu, iv - k),
                _ => true,
            };
        }
        // su < sv
        match (lu, lv) {
            (true, _) => true,
            (false, false) => true,
            (false, true) => false,
        }
    }))
}

/// Least even `p = 2q` with `(q - 1)^2 > k * q^(2 - 1/k)`, i.e.
/// `(p/2)^2 - p + 1 > k (p/2)^(2 - 1/k)`. Evaluated in `f64` with a strict
/// comparison; `q^(1/k) (1 - 1/q)^2` is increasing, so the predicate is
/// monotone and a doubling plus bisection search finds the threshold.
/// The answer grows like `2 k^k`, so `k` is limited to 15.
pub fn minimal_p(k: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    check_cap("minimal p", k, 15)?;
    let kf = k as f64;
    let holds = |q: u64| {
        let qf = q as f64;
        (qf - 1.0).powi(2) > kf * qf.powf(2.0 - 1.0 / kf)
    };
    let mut hi = 1u64;
    while !holds(hi) {
        hi *= 2;
    }
    let mut lo = hi / 2; // fails (or is 0)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(2 * hi)
}

/// `T_{2n}` with `{i, n + j}` bidirectional exactly when `A(i, j) = 1`.
pub fn matrix_to_interval_digraph(a: &BinaryMatrix) -> Result<SemiCompleteDigraph> {
    if a.rows() != a.cols() {
        return Err(Error::invalid(format!(
            "host matrix must be square, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut g = SemiCompleteDigraph::from(&Tournament::transitive(2 * n.max(1))?);
    if n == 0 {
        return Ok(SemiCompleteDigraph::complete(0));
    }
    for (i, j) in a.ones() {
        g.make_bidirectional(i, n + j);
    }
    Ok(g)
}

/// Two consecutive intervals of equal length `m` with many bidirectional
/// pairs between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPair {
    pub x: Range<usize>,
    pub y: Range<usize>,
    pub count: usize,
}

/// `max(1, log2 m)`.
pub fn clamped_log2(m: f64) -> f64 {
    m.log2().max(1.0)
}

fn bidi_between(g: &SemiCompleteDigraph, x: &Range<usize>, y: &Range<usize>) -> usize {
    let words = bits::words_for(g.order()).max(1);
    let mut ymask = vec![0u64; words];
    for v in y.clone() {
        bits::set_bit(&mut ymask, v);
    }
    x.clone()
        .map(|u| {
            g.out_row(u)
                .iter()
                .zip(g.in_row(u))
                .zip(&ymask)
                .map(|((o, i), m)| (o & i & m).count_ones() as usize)
                .sum::<usize>()
        })
        .sum()
}

fn dense_pair(g: &SemiCompleteDigraph, lo: usize, len: usize, p: u32) -> Option<IntervalPair> {
    if len < 2 {
        return None;
    }
    let half = len / 2;
    let x = lo..lo + half;
    let y = lo + half..lo + 2 * half;
    let count = bidi_between(g, &x, &y);
    let m = half as f64;
    if count as f64 >= m * clamped_log2(m).powi(p as i32) {
        return Some(IntervalPair { x, y, count });
    }
    dense_pair(g, lo, half, p).or_else(|| dense_pair(g, lo + half, len - half, p))
}

/// Halving recursion on the vertex order of `T_n`: split the current
/// interval into its two halves `X`, `Y` of length `m`; report them when at
/// least `m * max(1, log2 m)^p` bidirectional pairs join them, otherwise
/// recurse into the left half and then the right half.
pub fn find_dense_interval_pair(g: &SemiCompleteDigraph, p: u32) -> Result<Option<IntervalPair>> {
    if !g.extends_transitive() {
        return Err(Error::invalid(
            "digraph must contain every arc i -> j (i < j) of the transitive tournament",
        ));
    }
    Ok(dense_pair(g, 0, g.order(), p))
}

/// The two 0/1 patterns shown as forests with superlinear extremal numbers:
/// `M_1` (3x3, four 1s) and `M_2` (5x5, nine 1s).
pub fn figure1_matrices() -> (BinaryMatrix, BinaryMatrix) {
    let one_based = |k: usize, ones: &[(usize, usize)]| {
        let zero: Vec<(usize, usize)> = ones.iter().map(|&(r, c)| (r - 1, c - 1)).collect();
        BinaryMatrix::from_ones(k, k, &zero).expect("entries in range")
    };
    let m1 = one_based(3, &[(1, 1), (1, 2), (2, 1), (3, 3)]);
    let m2 = one_based(
        5,
        &[
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 2),
            (4, 1),
            (4, 5),
            (5, 5),
        ],
    );
    (m1, m2)
}
