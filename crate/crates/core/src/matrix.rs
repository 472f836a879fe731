use crate::bits::{self, BitGrid};
use crate::error::{Error, Result};

/// An `R x C` 0/1 matrix, used both as a pattern and as a host.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryMatrix {
    grid: BitGrid,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            grid: BitGrid::new(rows, cols),
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from 0-based `(row, col)` positions of its 1s.
    pub fn from_ones(rows: usize, cols: usize, ones: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in ones {
            if r >= rows || c >= cols {
                return Err(Error::invalid(format!(
                    "entry ({}, {}) outside a {rows}x{cols} matrix",
                    r + 1,
                    c + 1
                )));
            }
            m.set(r, c, true);
        }
        Ok(m)
    }

    /// Parses rows written as strings over `{0,1}`, e.g. `["10", "01"]`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |s| s.as_ref().len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != c {
                return Err(Error::invalid(format!(
                    "row {} has length {}, expected {c}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::invalid(format!(
                            "bad character {ch:?} in row {}",
                            i + 1
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    /// Decodes the `rows x cols` matrix whose cell `r * cols + c` is bit
    /// `r * cols + c` of `code`.
    pub fn from_code(rows: usize, cols: usize, code: u64) -> Self {
        debug_assert!(rows * cols <= 64);
        Self::from_fn(rows, cols, |r, c| (code >> (r * cols + c)) & 1 == 1)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.grid.rows()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.grid.cols()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.grid.get(r, c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.grid.set(r, c, value);
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        self.grid.row(r)
    }

    pub fn count_ones(&self) -> usize {
        self.grid.count_ones()
    }

    /// 0-based positions of the 1s in row-major order.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|r| bits::row_ones(self.grid.row(r)).map(move |c| (r, c)))
            .collect()
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.grid.row(r).iter().all(|&w| w == 0)
    }

    pub fn is_zero_col(&self, c: usize) -> bool {
        (0..self.rows()).all(|r| !self.get(r, c))
    }

    pub fn has_zero_line(&self) -> bool {
        (0..self.rows()).any(|r| self.is_zero_row(r))
            || (0..self.cols()).any(|c| self.is_zero_col(c))
    }

    /// Drops every all-zero row and column.
    pub fn strip_zero_lines(&self) -> BinaryMatrix {
        let rows: Vec<usize> = (0..self.rows()).filter(|&r| !self.is_zero_row(r)).collect();
        let cols: Vec<usize> = (0..self.cols()).filter(|&c| !self.is_zero_col(c)).collect();
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Pads with zero rows or columns at the end to a square matrix.
    pub fn pad_square(&self) -> BinaryMatrix {
        let k = self.rows().max(self.cols());
        Self::from_fn(k, k, |r, c| {
            r < self.rows() && c < self.cols() && self.get(r, c)
        })
    }

    /// Whether the bipartite graph rows + columns, with an edge per 1, has no cycle.
    pub fn is_acyclic(&self) -> bool {
        let r = self.rows();
        let mut parent: Vec<usize> = (0..r + self.cols()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, j) in self.ones() {
            let a = find(&mut parent, i);
            let b = find(&mut parent, r + j);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    pub fn to_rows(&self) -> Vec<String> {
        (0..self.rows())
            .map(|r| {
                (0..self.cols())
                    .map(|c| if self.get(r, c) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_round_trip() {
        let m = BinaryMatrix::from_rows(&["110", "100", "001"]).unwrap();
        assert_eq!(m.count_ones(), 4);
        assert_eq!(m.to_rows(), vec!["110", "100", "001"]);
        assert!(BinaryMatrix::from_rows(&["10", "1"]).is_err());
        assert!(BinaryMatrix::from_rows(&["12"]).is_err());
    }

    #[test]
    fn acyclicity() {
        assert!(BinaryMatrix::identity(3).is_acyclic());
        assert!(!BinaryMatrix::from_rows(&["11", "11"]).unwrap().is_acyclic());
        assert!(BinaryMatrix::from_rows(&["11", "10"]).unwrap().is_acyclic());
    }

    #[test]
    fn strip_and_pad() {
        let m = BinaryMatrix::from_rows(&["010", "000"]).unwrap();
        assert!(m.has_zero_line());
        let s = m.strip_zero_lines();
        assert_eq!((s.rows(), s.cols()), (1, 1));
        assert!(s.get(0, 0));
        let p = m.pad_square();
        assert_eq!((p.rows(), p.cols()), (3, 3));
        assert_eq!(p.count_ones(), 1);
    }

    #[test]
    fn code_layout() {
        let m = BinaryMatrix::from_code(2, 2, 0b1001);
        assert_eq!(m, BinaryMatrix::identity(2));
    }
}
