//! Permanents, permanental minors and the compatible-permutation-support test.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::assignment::extreme_diagonal_sums;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::pattern::Pattern;
use crate::rational::Rational;

/// Largest order handled by the bitset dynamic program.
pub const MAX_ORDER: usize = 128;
const RYSER_MAX_ORDER: usize = 20;

/// Rows in an order that keeps the set of half-processed columns small:
/// start from a sparsest row, then repeatedly take the row that overlaps the
/// columns already touched the most and opens the fewest new ones.
fn row_order(rows: &[u128]) -> Vec<usize> {
    let n = rows.len();
    let mut done = vec![false; n];
    let mut touched = 0u128;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&i| !done[i])
            .min_by_key(|&i| {
                let fresh = (rows[i] & !touched).count_ones();
                let shared = (rows[i] & touched).count_ones();
                (fresh, std::cmp::Reverse(shared), i)
            })
            .expect("rows remain");
        done[next] = true;
        touched |= rows[next];
        order.push(next);
    }
    order
}

fn bitset_rows(a: &Pattern) -> Vec<u128> {
    (0..a.n_rows())
        .map(|i| a.row_support(i).into_iter().fold(0u128, |acc, j| acc | 1u128 << j))
        .collect()
}

/// Row-by-row count of partial matchings. The state is the set of used
/// columns among those still reachable by later rows; a column that no later
/// row can reach must already be used, otherwise the state is dead.
fn permanent_dp(rows: &[u128]) -> BigUint {
    let n = rows.len();
    let order = row_order(rows);
    let mut later = vec![0u128; n + 1];
    for step in (0..n).rev() {
        later[step] = later[step + 1] | rows[order[step]];
    }
    let mut states: HashMap<u128, BigUint> = HashMap::from([(0, BigUint::one())]);
    let mut touched = 0u128;
    for step in 0..n {
        let row = rows[order[step]];
        touched |= row;
        let keep = later[step + 1];
        let retiring = touched & later[step] & !keep;
        let mut next: HashMap<u128, BigUint> = HashMap::with_capacity(states.len() * 2);
        for (used, count) in &states {
            let mut free = row & !used;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                free ^= bit;
                let now = used | bit;
                if now & retiring == retiring {
                    *next.entry(now & keep).or_default() += count;
                }
            }
        }
        states = next;
        if states.is_empty() {
            return BigUint::zero();
        }
    }
    states.remove(&0).unwrap_or_default()
}

/// Ryser's formula with a Gray-code walk over column subsets.
fn permanent_ryser(rows: &[u128]) -> BigUint {
    let n = rows.len();
    let mut row_sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut subset = 0u32;
    for k in 1u32..1 << n {
        let j = k.trailing_zeros() as usize;
        subset ^= 1 << j;
        let delta = if subset >> j & 1 == 1 { 1 } else { -1 };
        for (sum, row) in row_sums.iter_mut().zip(rows) {
            if row >> j & 1 == 1 {
                *sum += delta;
            }
        }
        let product: i128 = row_sums.iter().map(|&s| s as i128).product();
        if (n - subset.count_ones() as usize) % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    }
    BigUint::from(u128::try_from(total).expect("permanent is nonnegative"))
}

fn permanent_rows(rows: &[u128], ones: usize) -> BigUint {
    let n = rows.len();
    if n == 0 {
        return BigUint::one();
    }
    if rows.iter().any(|&r| r == 0) {
        return BigUint::zero();
    }
    if n <= RYSER_MAX_ORDER && 2 * ones > n * n {
        permanent_ryser(rows)
    } else {
        permanent_dp(rows)
    }
}

/// Number of permutations inside the support of `a`.
pub fn permanent(a: &Pattern) -> Result<BigUint> {
    let n = a.order()?;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n, MAX_ORDER));
    }
    Ok(permanent_rows(&bitset_rows(a), a.count_ones()))
}

/// Permanent, permanental minors on the support, and the CPS constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermanentReport {
    pub order: usize,
    pub permanent: BigUint,
    /// Row-major; `Some(per A(i|j))` on ones of `A`, `None` on zeros.
    pub minor_matrix: Vec<Option<BigUint>>,
    /// Common diagonal sum of the hat matrix, when `A` has CPS.
    pub gamma: Option<BigUint>,
}

impl PermanentReport {
    pub fn minor(&self, i: usize, j: usize) -> Option<&BigUint> {
        self.minor_matrix[i * self.order + j].as_ref()
    }

    pub fn is_cps(&self) -> bool {
        self.gamma.is_some()
    }

    /// The hat matrix: minors on the support, zero elsewhere.
    pub fn hat(&self) -> RatMatrix {
        let n = self.order;
        RatMatrix::from_fn(n, n, |i, j| match self.minor(i, j) {
            Some(m) => Rational::from_integer(m.clone().into()),
            None => Rational::zero(),
        })
    }

    /// `hat / per(A)`, doubly stochastic when `A` has total support.
    pub fn normalized_hat(&self) -> RatMatrix {
        let per = Rational::from_integer(self.permanent.clone().into());
        self.hat().map(|e| e / &per)
    }

    /// Every row and column of minors sums to the permanent.
    pub fn expansion_identity_holds(&self) -> bool {
        let n = self.order;
        let line = |cells: &mut dyn Iterator<Item = (usize, usize)>| {
            cells.filter_map(|(i, j)| self.minor(i, j)).sum::<BigUint>() == self.permanent
        };
        (0..n).all(|i| line(&mut (0..n).map(|j| (i, j))) && line(&mut (0..n).map(|j| (j, i))))
    }
}

/// Permanental minors of every one of `a`, computed in parallel, with the
/// CPS test on the resulting hat matrix.
pub fn hat_matrix(a: &Pattern) -> Result<PermanentReport> {
    let n = a.order()?;
    let per = permanent(a)?;
    if per.is_zero() {
        return Err(Error::NoSupportDiagonal);
    }
    let cells: Vec<(usize, usize)> = a.ones_positions().collect();
    let minors: Vec<BigUint> = cells
        .par_iter()
        .map(|&(i, j)| {
            let m = a.minor(i, j);
            permanent_rows(&bitset_rows(&m), m.count_ones())
        })
        .collect();
    let mut minor_matrix = vec![None; n * n];
    for (&(i, j), m) in cells.iter().zip(minors) {
        minor_matrix[i * n + j] = Some(m);
    }
    let mut report = PermanentReport {
        order: n,
        permanent: per,
        minor_matrix,
        gamma: None,
    };
    debug_assert!(report.expansion_identity_holds());
    let (lo, hi) = extreme_diagonal_sums(&report.hat())?;
    if lo.value == hi.value {
        let g = lo.value.to_integer();
        report.gamma = Some(g.to_biguint().expect("sums of minors are nonnegative"));
    }
    Ok(report)
}

/// `(has CPS, gamma)`.
pub fn is_cps(a: &Pattern) -> Result<(bool, Option<BigUint>)> {
    let report = hat_matrix(a)?;
    Ok((report.is_cps(), report.gamma))
}

/// Exact value of the permanent of the Gray graph biadjacency matrix.
pub const GRAY_GRAPH_PERMANENT: u64 = 10752;

/// Biadjacency matrix of the Gray graph: the 27 points of a `3 x 3 x 3` grid
/// against the 27 axis-parallel lines through them.
pub fn gray_graph_pattern() -> Pattern {
    crate::io::parse_pattern(include_str!("../data/gray_graph.txt")).expect("embedded pattern parses")
}

/// A cubic `27 x 27` pattern sometimes displayed as the Gray graph. It has
/// girth 6, so it is a different graph, and its minors are not all equal.
pub fn lookalike_pattern() -> Pattern {
    crate::io::parse_pattern(include_str!("../data/cubic_lookalike.txt")).expect("embedded pattern parses")
}
