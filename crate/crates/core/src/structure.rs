//! Bipartite-matching tests on (0,1)-patterns: term rank, support
//! diagonals and full indecomposability.

use crate::error::Result;
use crate::matrix::Permutation;
use crate::pattern::Pattern;

/// A maximum matching between rows and columns through the ones of a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Number of matched pairs: the term rank.
    pub size: usize,
    /// `row_match[i]` is the column matched to row `i`, if any.
    pub row_match: Vec<Option<usize>>,
}

fn augment(
    a: &Pattern,
    row: usize,
    visited: &mut [bool],
    col_match: &mut [Option<usize>],
) -> bool {
    for j in 0..a.n_cols() {
        if a.get(row, j) && !visited[j] {
            visited[j] = true;
            let free = match col_match[j] {
                None => true,
                Some(other) => augment(a, other, visited, col_match),
            };
            if free {
                col_match[j] = Some(row);
                return true;
            }
        }
    }
    false
}

/// Maximum matching by augmenting paths (Kuhn). Works on rectangular patterns.
pub fn max_matching(a: &Pattern) -> Matching {
    let mut col_match = vec![None; a.n_cols()];
    let mut visited = vec![false; a.n_cols()];
    let mut size = 0;
    for i in 0..a.n_rows() {
        visited.fill(false);
        if augment(a, i, &mut visited, &mut col_match) {
            size += 1;
        }
    }
    let mut row_match = vec![None; a.n_rows()];
    for (j, m) in col_match.iter().enumerate() {
        if let Some(i) = m {
            row_match[*i] = Some(j);
        }
    }
    Matching { size, row_match }
}

pub fn term_rank(a: &Pattern) -> usize {
    max_matching(a).size
}

/// A permutation lying in the support of `a`, if one exists.
pub fn find_support_diagonal(a: &Pattern) -> Result<Option<Permutation>> {
    let n = a.order()?;
    let m = max_matching(a);
    if m.size < n {
        return Ok(None);
    }
    let image = m.row_match.into_iter().map(|c| c.expect("perfect matching")).collect();
    Ok(Some(Permutation::new(image).expect("matching is a bijection")))
}

fn reaches_all(n: usize, edge: impl Fn(usize, usize) -> bool) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if !seen[w] && edge(v, w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `true` iff no row and column permutation exposes a `p x (n-p)` zero block.
///
/// With a support diagonal `sigma` placed on the main diagonal, the pattern is
/// fully indecomposable iff the digraph `i -> k` (whenever `a[i][sigma(k)] = 1`,
/// `i != k`) is strongly connected. Order 1 is fully indecomposable iff the
/// entry is one.
pub fn is_fully_indecomposable(a: &Pattern) -> Result<bool> {
    let n = a.order()?;
    let Some(sigma) = find_support_diagonal(a)? else {
        return Ok(false);
    };
    if n == 1 {
        return Ok(true);
    }
    let edge = |i: usize, k: usize| i != k && a.get(i, sigma.apply(k));
    Ok(reaches_all(n, edge) && reaches_all(n, |i, k| edge(k, i)))
}
