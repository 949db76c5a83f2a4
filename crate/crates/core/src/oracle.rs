//! Brute-force ground truth for small orders: every diagonal inside a
//! support, enumerated explicitly.

use crate::error::{Error, Result};
use crate::matrix::{diagonal_sum, support, Permutation, RatMatrix};
use crate::pattern::Pattern;
use crate::rational::Rational;
use crate::structure::term_rank;

pub const DEFAULT_LIMIT: usize = 1_000_000;

/// All permutations inside the support of `a`, in lexicographic order of
/// their images. Fails once more than `limit` have been found.
pub fn enumerate_diagonals(a: &Pattern, limit: usize) -> Result<Vec<Permutation>> {
    let n = a.order()?;
    let adj: Vec<Vec<usize>> = (0..n).map(|i| a.row_support(i)).collect();
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn walk(
        adj: &[Vec<usize>],
        image: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
        limit: usize,
    ) -> Result<()> {
        let row = image.len();
        if row == adj.len() {
            if out.len() == limit {
                return Err(Error::LimitExceeded(limit));
            }
            out.push(Permutation::new(image.clone()).expect("distinct columns"));
            return Ok(());
        }
        for &j in &adj[row] {
            if !used[j] {
                used[j] = true;
                image.push(j);
                walk(adj, image, used, out, limit)?;
                image.pop();
                used[j] = false;
            }
        }
        Ok(())
    }
    walk(&adj, &mut image, &mut used, &mut out, limit)?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalStats {
    pub min: Rational,
    pub max: Rational,
    pub all_equal: bool,
    pub count: usize,
}

pub fn brute_diagonal_stats_with_limit(x: &RatMatrix, limit: usize) -> Result<DiagonalStats> {
    let diagonals = enumerate_diagonals(&support(x), limit)?;
    let mut sums = diagonals.iter().map(|p| diagonal_sum(x, p));
    let first = sums.next().ok_or(Error::NoSupportDiagonal)??;
    let (mut min, mut max) = (first.clone(), first);
    for s in sums {
        let s = s?;
        if s < min {
            min = s;
        } else if s > max {
            max = s;
        }
    }
    Ok(DiagonalStats {
        all_equal: min == max,
        min,
        max,
        count: diagonals.len(),
    })
}

/// Exact min, max and count over every diagonal avoiding the zeros of `x`.
pub fn brute_diagonal_stats(x: &RatMatrix) -> Result<DiagonalStats> {
    brute_diagonal_stats_with_limit(x, DEFAULT_LIMIT)
}

/// For a symmetric pattern: `true` iff every support permutation is an
/// involution, i.e. its permutation matrix is symmetric.
pub fn check_symmetric_diagonals(a: &Pattern) -> Result<bool> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(enumerate_diagonals(a, DEFAULT_LIMIT)?
        .iter()
        .all(Permutation::is_involution))
}

/// A positive 2x2 submatrix whose complementary submatrix has full term
/// rank but whose two diagonal sums differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

/// Checks the necessary condition for RCDS matrices: every positive 2x2
/// submatrix whose complement has term rank `n - 2` has equal diagonal sums.
pub fn exchange_violations(x: &RatMatrix) -> Result<Vec<ExchangeViolation>> {
    let n = x.order()?;
    let s = support(x);
    let mut out = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            for j in 0..n {
                for l in j + 1..n {
                    if !(s.get(i, j) && s.get(i, l) && s.get(k, j) && s.get(k, l)) {
                        continue;
                    }
                    let rows: Vec<usize> = (0..n).filter(|&r| r != i && r != k).collect();
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j && c != l).collect();
                    if term_rank(&s.submatrix(&rows, &cols)) != n - 2 {
                        continue;
                    }
                    if &x[(i, j)] + &x[(k, l)] != &x[(i, l)] + &x[(k, j)] {
                        out.push(ExchangeViolation {
                            rows: (i, k),
                            cols: (j, l),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
