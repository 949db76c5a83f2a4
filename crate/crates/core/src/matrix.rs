//! Dense rational matrices, permutations and diagonal sums.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        RatMatrix {
            n_rows,
            n_cols,
            entries: vec![Rational::zero(); n_rows * n_cols],
        }
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let entries = (0..n_rows * n_cols)
            .map(|k| f(k / n_cols, k % n_cols))
            .collect();
        RatMatrix {
            n_rows,
            n_cols,
            entries,
        }
    }

    pub fn from_entries(n_rows: usize, n_cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n_rows * n_cols {
            return Err(Error::DimensionMismatch {
                expected: n_rows * n_cols,
                found: entries.len(),
            });
        }
        Ok(RatMatrix {
            n_rows,
            n_cols,
            entries,
        })
    }

    /// Builds a matrix from integer rows scaled by `1/denominator`. Panics on
    /// ragged rows; used for literal matrices.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R], denominator: i64) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let den = Rational::from_integer(denominator.into());
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), n_cols, "ragged matrix literal");
            entries.extend(row.iter().map(|&v| Rational::from_integer(v.into()) / &den));
        }
        RatMatrix {
            n_rows,
            n_cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Entries equal to `value` wherever `pattern` has a one, zero elsewhere.
    pub fn from_pattern(pattern: &Pattern, value: &Rational) -> Self {
        Self::from_fn(pattern.n_rows(), pattern.n_cols(), |i, j| {
            if pattern.get(i, j) {
                value.clone()
            } else {
                Rational::zero()
            }
        })
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

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn row_sums(&self) -> Vec<Rational> {
        (0..self.n_rows)
            .map(|i| self.row(i).iter().fold(Rational::zero(), |acc, x| acc + x))
            .collect()
    }

    pub fn col_sums(&self) -> Vec<Rational> {
        let mut sums = vec![Rational::zero(); self.n_cols];
        for i in 0..self.n_rows {
            for (s, x) in sums.iter_mut().zip(self.row(i)) {
                *s += x;
            }
        }
        sums
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n_cols, self.n_rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RatMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        RatMatrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.n_cols {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                found: x.len(),
            });
        }
        Ok((0..self.n_rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.n_cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.n_cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{}\n{}", self.n_rows, self.n_cols, self)
    }
}

/// A permutation of `0..n`; `image[i]` is the column assigned to row `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n || seen[j] {
                return Err(Error::InvalidPermutation(format!("{image:?}")));
            }
            seen[j] = true;
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| self.0[j] == i)
    }

    /// Positions `(i, p(i))` of the diagonal.
    pub fn positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied().enumerate()
    }

    /// `true` when every position of the diagonal is a one of `pattern`.
    pub fn lies_in(&self, pattern: &Pattern) -> bool {
        pattern.n_rows() == self.len() && self.positions().all(|(i, j)| pattern.get(i, j))
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let n = self.len();
        RatMatrix::from_fn(n, n, |i, j| {
            if self.0[i] == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }
}

/// `true` iff `x` is nonnegative and every row and column sums to exactly 1.
pub fn is_doubly_stochastic(x: &RatMatrix) -> Result<bool> {
    x.order()?;
    Ok(x.is_nonnegative()
        && x.row_sums().iter().all(One::is_one)
        && x.col_sums().iter().all(One::is_one))
}

/// Nonzero pattern of `x`.
pub fn support(x: &RatMatrix) -> Pattern {
    Pattern::from_fn(x.n_rows(), x.n_cols(), |i, j| !x[(i, j)].is_zero())
}

/// `sum_i x[i][p(i)]`.
pub fn diagonal_sum(x: &RatMatrix, p: &Permutation) -> Result<Rational> {
    let n = x.order()?;
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.len(),
        });
    }
    Ok(p
        .positions()
        .fold(Rational::zero(), |acc, (i, j)| acc + &x[(i, j)]))
}
