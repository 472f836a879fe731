use crate::bits;
use crate::matrix::BinaryMatrix;
use crate::witness::PatternEmbedding;

/// Leftmost column selection for a fixed row selection: pattern column `j`
/// goes to the first host column after the previous one that has a 1 in
/// every selected row where column `j` of the pattern has a 1. Greedy
/// leftmost is optimal because each choice only constrains later columns
/// through the "strictly after" requirement.
fn leftmost_columns(
    a: &BinaryMatrix,
    m: &BinaryMatrix,
    rows: &[usize],
    scratch: &mut Vec<u64>,
) -> Option<Vec<usize>> {
    let words = bits::words_for(a.cols()).max(1);
    let mut cols = Vec::with_capacity(m.cols());
    let mut from = 0;
    for j in 0..m.cols() {
        scratch.clear();
        scratch.resize(words, u64::MAX);
        for (i, &r) in rows.iter().enumerate() {
            if m.get(i, j) {
                for (s, w) in scratch.iter_mut().zip(a.row_words(r)) {
                    *s &= w;
                }
            }
        }
        // columns past the host width are never valid
        let tail = a.cols() % 64;
        if tail != 0 {
            scratch[words - 1] &= bits::low_mask(tail);
        }
        let c = bits::next_one(scratch, from)?;
        if c >= a.cols() {
            return None;
        }
        cols.push(c);
        from = c + 1;
    }
    Some(cols)
}

/// Strictly increasing rows and columns of `a` covering every 1 of `m`.
/// Row selections are tried in lexicographic order and columns are chosen
/// leftmost, so the witness is the lexicographically least one by rows.
pub fn contains_pattern(a: &BinaryMatrix, m: &BinaryMatrix) -> Option<PatternEmbedding> {
    let (k, l) = (m.rows(), m.cols());
    if k > a.rows() || l > a.cols() {
        return None;
    }
    let mut rows: Vec<usize> = (0..k).collect();
    let mut scratch = Vec::new();
    let n = a.rows();
    loop {
        if let Some(cols) = leftmost_columns(a, m, &rows, &mut scratch) {
            return Some(PatternEmbedding { rows, cols });
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if rows[i] < n - k + i {
                rows[i] += 1;
                for j in i + 1..k {
                    rows[j] = rows[j - 1] + 1;
                }
                break;
            }
        }
    }
}
