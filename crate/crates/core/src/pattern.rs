//! (0,1)-patterns: the zero/nonzero structure of a matrix.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    n_rows: usize,
    n_cols: usize,
    bits: Vec<bool>,
}

impl Pattern {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Pattern {
            n_rows,
            n_cols,
            bits: vec![false; n_rows * n_cols],
        }
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let bits = (0..n_rows * n_cols)
            .map(|k| f(k / n_cols, k % n_cols))
            .collect();
        Pattern {
            n_rows,
            n_cols,
            bits,
        }
    }

    pub fn from_bits(n_rows: usize, n_cols: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != n_rows * n_cols {
            return Err(Error::DimensionMismatch {
                expected: n_rows * n_cols,
                found: bits.len(),
            });
        }
        Ok(Pattern {
            n_rows,
            n_cols,
            bits,
        })
    }

    /// Builds a pattern from rows of `0`/`1` values. Panics on ragged input;
    /// meant for literals in code and tests.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut bits = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), n_cols, "ragged pattern literal");
            bits.extend(row.iter().map(|&b| b != 0));
        }
        Pattern {
            n_rows,
            n_cols,
            bits,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, n, |_, _| true)
    }

    /// Tridiagonal pattern: ones where `|i - j| <= 1`.
    pub fn tridiagonal(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i.abs_diff(j) <= 1)
    }

    /// Star with a loop at every vertex: first row and column full, plus the main diagonal.
    pub fn star(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == 0 || j == 0 || i == j)
    }

    /// Sum of `k` distinct cyclic shifts of the identity; every line has exactly `k` ones.
    pub fn circulant(n: usize, k: usize) -> Self {
        Self::from_fn(n, n, |i, j| (j + n - i) % n < k)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Order of a square pattern, or `NotSquare`.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.n_rows)
        } else {
            Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.n_cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.bits[i * self.n_cols..(i + 1) * self.n_cols]
    }

    /// Column indices of the ones in row `i`.
    pub fn row_support(&self, i: usize) -> Vec<usize> {
        (0..self.n_cols).filter(|&j| self.get(i, j)).collect()
    }

    pub fn col_support(&self, j: usize) -> Vec<usize> {
        (0..self.n_rows).filter(|&i| self.get(i, j)).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.n_rows)
            .map(|i| self.row(i).iter().filter(|&&b| b).count())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.n_cols)
            .map(|j| (0..self.n_rows).filter(|&i| self.get(i, j)).count())
            .collect()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Positions `(i, j)` holding a one, row-major.
    pub fn ones_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / self.n_cols, k % self.n_cols))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n_cols, self.n_rows, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Entrywise `self <= other`.
    pub fn is_subpattern_of(&self, other: &Pattern) -> bool {
        self.n_rows == other.n_rows
            && self.n_cols == other.n_cols
            && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Submatrix with the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// `A(i|j)`: delete row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let rows: Vec<usize> = (0..self.n_rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.n_cols).filter(|&c| c != j).collect();
        self.submatrix(&rows, &cols)
    }

    /// `true` when every row and every column has exactly `k` ones.
    pub fn is_regular(&self, k: usize) -> bool {
        self.row_sums().iter().all(|&r| r == k) && self.col_sums().iter().all(|&s| s == k)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows {
            let line: String = self.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern {}x{}\n{}", self.n_rows, self.n_cols, self)
    }
}
