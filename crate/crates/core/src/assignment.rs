//! Optimal diagonals restricted to the support, with LP dual certificates.
//!
//! The solver is the shortest-augmenting-path Hungarian method carried out
//! in exact rationals. Zero cells are not part of the cost structure at all:
//! a missing edge is `None`, never a large number. Maximization negates the
//! costs and flips the resulting potentials, so a maximum certificate carries
//! *upper* potentials (`u_i + v_j >= x_ij` on the support).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{diagonal_sum, is_doubly_stochastic, support, Permutation, RatMatrix};
use crate::pattern::Pattern;
use crate::rational::{sum, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// An optimal permutation together with dual potentials proving optimality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalCertificate {
    pub sense: Sense,
    pub perm: Permutation,
    pub value: Rational,
    pub potentials_u: Vec<Rational>,
    pub potentials_v: Vec<Rational>,
}

impl DiagonalCertificate {
    /// `sum(u) + sum(v)`; equals `value` by strong duality.
    pub fn dual_value(&self) -> Rational {
        sum(&self.potentials_u) + sum(&self.potentials_v)
    }

    /// Checks primal value, dual feasibility on the support of `x`,
    /// complementary slackness on `perm`, and equal objective values.
    pub fn verify(&self, x: &RatMatrix) -> bool {
        let s = support(x);
        let n = self.perm.len();
        if x.n_rows() != n || self.potentials_u.len() != n || self.potentials_v.len() != n {
            return false;
        }
        if !self.perm.lies_in(&s) || diagonal_sum(x, &self.perm).ok() != Some(self.value.clone()) {
            return false;
        }
        let feasible = s.ones_positions().all(|(i, j)| {
            let y = &self.potentials_u[i] + &self.potentials_v[j];
            match self.sense {
                Sense::Min => y <= x[(i, j)],
                Sense::Max => y >= x[(i, j)],
            }
        });
        let tight = self
            .perm
            .positions()
            .all(|(i, j)| &self.potentials_u[i] + &self.potentials_v[j] == x[(i, j)]);
        feasible && tight && self.dual_value() == self.value
    }
}

/// Minimum-cost perfect matching using only the cells allowed by `allowed`.
/// Returns the permutation and row/column potentials with
/// `u_i + v_j <= cost_ij` on allowed cells, equality on the matching.
pub fn min_assignment(
    costs: &RatMatrix,
    allowed: &Pattern,
) -> Result<(Permutation, Vec<Rational>, Vec<Rational>)> {
    let n = costs.order()?;
    if allowed.n_rows() != n || allowed.n_cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: allowed.n_rows(),
        });
    }
    // 1-based arrays; index 0 is the virtual source column.
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if allowed.get(i0 - 1, j - 1) {
                    let cur = &costs[(i0 - 1, j - 1)] - &u[i0] - &v[j];
                    if minv[j].as_ref().is_none_or(|m| cur < *m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| m < d) {
                        delta = Some(m.clone());
                        j1 = j;
                    }
                }
            }
            let Some(delta) = delta else {
                return Err(Error::NoSupportDiagonal);
            };
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut image = vec![0; n];
    for j in 1..=n {
        image[owner[j] - 1] = j - 1;
    }
    let perm = Permutation::new(image).expect("assignment is a bijection");
    Ok((perm, u.split_off(1), v.split_off(1)))
}

fn certificate(x: &RatMatrix, sense: Sense) -> Result<DiagonalCertificate> {
    let s = support(x);
    let (perm, u, v) = match sense {
        Sense::Min => min_assignment(x, &s)?,
        Sense::Max => {
            let (perm, u, v) = min_assignment(&x.map(|e| -e), &s)?;
            (perm, u.into_iter().map(|e| -e).collect(), v.into_iter().map(|e| -e).collect())
        }
    };
    let value = diagonal_sum(x, &perm)?;
    Ok(DiagonalCertificate {
        sense,
        perm,
        value,
        potentials_u: u,
        potentials_v: v,
    })
}

/// Minimum and maximum diagonal sums over permutations inside the support of `x`.
pub fn extreme_diagonal_sums(
    x: &RatMatrix,
) -> Result<(DiagonalCertificate, DiagonalCertificate)> {
    Ok((certificate(x, Sense::Min)?, certificate(x, Sense::Max)?))
}

/// Common restricted diagonal sum of `x`, if `x` is an RCDS matrix.
pub fn rcds_sum(x: &RatMatrix) -> Option<Rational> {
    if !matches!(is_doubly_stochastic(x), Ok(true)) {
        return None;
    }
    let (lo, hi) = extreme_diagonal_sums(x).ok()?;
    (lo.value == hi.value).then_some(lo.value)
}

/// `true` iff `x` is doubly stochastic and all diagonals avoiding its zeros
/// have the same sum. Decided with two assignment problems.
pub fn is_rcds_matrix(x: &RatMatrix) -> bool {
    rcds_sum(x).is_some()
}

/// Diagonal width together with both dual bounds.
#[derive(Clone, Debug)]
pub struct WidthReport {
    pub width: Rational,
    /// `min { sum u + sum v : u_i + v_j >= x_ij on the support }`.
    pub theta_upper: Rational,
    /// `max { sum u + sum v : u_i + v_j <= x_ij on the support }`.
    pub theta_lower: Rational,
    pub min_cert: DiagonalCertificate,
    pub max_cert: DiagonalCertificate,
}

pub fn width_report(x: &RatMatrix) -> Result<WidthReport> {
    if !is_doubly_stochastic(x)? {
        return Err(Error::NotDoublyStochastic);
    }
    let (min_cert, max_cert) = extreme_diagonal_sums(x)?;
    let theta_upper = max_cert.dual_value();
    let theta_lower = min_cert.dual_value();
    Ok(WidthReport {
        width: &max_cert.value - &min_cert.value,
        theta_upper,
        theta_lower,
        min_cert,
        max_cert,
    })
}

/// Largest difference between two diagonal sums of `x` avoiding its zeros.
pub fn diagonal_width(x: &RatMatrix) -> Result<Rational> {
    width_report(x).map(|r| r.width)
}

/// Upper bound on the diagonal width from a lower potential pair `(u, v)` and
/// an upper pair `(u', v')`: `sum(u' - u) + sum(v' - v)`.
pub fn width_upper_bound(
    x: &RatMatrix,
    u: &[Rational],
    v: &[Rational],
    u_up: &[Rational],
    v_up: &[Rational],
) -> Result<Rational> {
    let n = x.order()?;
    for len in [u.len(), v.len(), u_up.len(), v_up.len()] {
        if len != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: len,
            });
        }
    }
    for (row, col) in support(x).ones_positions() {
        let value = &x[(row, col)];
        if &u[row] + &v[col] > *value || &u_up[row] + &v_up[col] < *value {
            return Err(Error::InfeasiblePotentials { row, col });
        }
    }
    Ok(sum(u_up) - sum(u) + sum(v_up) - sum(v))
}
