//! Word-packed bit rows shared by the graph and matrix types.

/// Number of `u64` words needed for `n` bits.
#[inline]
pub const fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Mask with the lowest `n` bits set (`n <= 64`).
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a single word in increasing order.
#[inline]
pub fn ones(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// Iterates the set bits of a multi-word row in increasing order.
pub fn row_ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter()
        .enumerate()
        .flat_map(|(w, &word)| ones(word).map(move |b| w * 64 + b))
}

#[inline]
pub fn test_bit(row: &[u64], i: usize) -> bool {
    (row[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub fn clear_bit(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1u64 << (i % 64));
}

pub fn count_ones(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// First set bit at index `>= from`, if any.
pub fn next_one(row: &[u64], from: usize) -> Option<usize> {
    let mut w = from / 64;
    if w >= row.len() {
        return None;
    }
    let mut word = row[w] & (u64::MAX << (from % 64));
    loop {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
        w += 1;
        if w == row.len() {
            return None;
        }
        word = row[w];
    }
}

/// A rectangular grid of bits stored row-major with a fixed word stride.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitGrid {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitGrid {
    pub fn new(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols).max(1);
        Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        test_bit(self.row(r), c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let row = self.row_mut(r);
        if value {
            set_bit(row, c);
        } else {
            clear_bit(row, c);
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn count_ones(&self) -> usize {
        count_ones(&self.words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_one_crosses_words() {
        let mut row = vec![0u64; 3];
        set_bit(&mut row, 5);
        set_bit(&mut row, 130);
        assert_eq!(next_one(&row, 0), Some(5));
        assert_eq!(next_one(&row, 6), Some(130));
        assert_eq!(next_one(&row, 131), None);
        assert_eq!(row_ones(&row).collect::<Vec<_>>(), vec![5, 130]);
    }

    #[test]
    fn grid_set_get() {
        let mut g = BitGrid::new(3, 70);
        g.set(2, 69, true);
        g.set(0, 0, true);
        assert!(g.get(2, 69));
        assert!(!g.get(2, 68));
        assert_eq!(g.count_ones(), 2);
        g.set(2, 69, false);
        assert_eq!(g.count_ones(), 1);
    }
}
