//! Line-sum potentials of a pattern and the RCDS pattern decision.
//!
//! For a fully indecomposable pattern `A` the system `H x = e`, with
//! `H = [[D_R, A], [A^T, D_S]]` the signless Laplacian of the bipartite graph
//! of `A`, has a solution `x = (u, v)` unique up to `(u + c, v - c)`. `A` is
//! an RCDS pattern iff `u_i + v_j > 0` on every one of `A`; the matrix
//! `Y(u, v)` restricted to `A` is then the unique RCDS matrix with that
//! support.
//!
//! The solve eliminates `u`: `(A^T D_R^-1 A - D_S) v = A^T D_R^-1 e - e`,
//! a singular system with null vector `e`. The gauge `v_{n-1} = 0` and the
//! dropped last equation leave a nonsingular `(n-1) x (n-1)` system.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::RatMatrix;
use crate::pattern::Pattern;
use crate::rational::{sum, Rational};
use crate::structure::is_fully_indecomposable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Potentials {
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
    /// Common line sum of `Y(u, v)` on the pattern.
    pub alpha: Rational,
}

impl Potentials {
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> Rational {
        &self.u[i] + &self.v[j]
    }

    /// `sum(u) + sum(v)`: every diagonal of `Y(u, v)` has this sum.
    pub fn diagonal_sum(&self) -> Rational {
        sum(&self.u) + sum(&self.v)
    }

    /// `Y(u, v)` on the ones of `a`, zero elsewhere.
    pub fn realize(&self, a: &Pattern) -> RatMatrix {
        RatMatrix::from_fn(a.n_rows(), a.n_cols(), |i, j| {
            if a.get(i, j) {
                self.cell(i, j)
            } else {
                Rational::zero()
            }
        })
    }

    /// Shift to the gauge `u + c`, `v - c`.
    pub fn shifted(&self, c: &Rational) -> Potentials {
        Potentials {
            u: self.u.iter().map(|x| x + c).collect(),
            v: self.v.iter().map(|x| x - c).collect(),
            alpha: self.alpha.clone(),
        }
    }

    /// Gauge with `v_{n-1} = 0`.
    pub fn canonical(&self) -> Potentials {
        match self.v.last() {
            Some(last) => self.shifted(last),
            None => self.clone(),
        }
    }

    /// Line sums of `Y(u, v)` on `a`: rows first, then columns.
    pub fn line_sums(&self, a: &Pattern) -> Vec<Rational> {
        let y = self.realize(a);
        let mut sums = y.row_sums();
        sums.extend(y.col_sums());
        sums
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcdsDecision {
    pub is_rcds_pattern: bool,
    pub potentials: Potentials,
    /// The RCDS matrix with support exactly the pattern, when it exists.
    pub realization: Option<RatMatrix>,
    pub constant_sum: Option<Rational>,
    /// Ones of the pattern where `u_i + v_j <= 0`.
    pub violating_positions: Vec<(usize, usize)>,
}

/// The `2n x 2n` signless Laplacian `[[D_R, A], [A^T, D_S]]`.
pub fn build_signless_laplacian(a: &Pattern) -> Result<RatMatrix> {
    let n = a.order()?;
    let rows = a.row_sums();
    let cols = a.col_sums();
    Ok(RatMatrix::from_fn(2 * n, 2 * n, |p, q| {
        let v = match (p < n, q < n) {
            (true, true) => usize::from(p == q) * rows[p],
            (true, false) => usize::from(a.get(p, q - n)),
            (false, true) => usize::from(a.get(q, p - n)),
            (false, false) => usize::from(p == q) * cols[p - n],
        };
        Rational::from_integer(v.into())
    }))
}

/// Solves `H (u, v) = e` exactly, gauge `v_{n-1} = 0`.
pub fn solve_potentials(a: &Pattern) -> Result<Potentials> {
    let n = a.order()?;
    if !is_fully_indecomposable(a)? {
        return Err(Error::NotFullyIndecomposable);
    }
    let r_inv: Vec<Rational> = a
        .row_sums()
        .into_iter()
        .map(|r| Rational::new(1.into(), r.into()))
        .collect();
    let s = a.col_sums();

    // M = A^T D_R^-1 A - D_S, b = A^T D_R^-1 e - e.
    let m = RatMatrix::from_fn(n, n, |j, k| {
        let mut acc = (0..n)
            .filter(|&i| a.get(i, j) && a.get(i, k))
            .fold(Rational::zero(), |acc, i| acc + &r_inv[i]);
        if j == k {
            acc -= Rational::from_integer(s[j].into());
        }
        acc
    });
    let b: Vec<Rational> = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| a.get(i, j))
                .fold(Rational::zero(), |acc, i| acc + &r_inv[i])
                - Rational::one()
        })
        .collect();
    assert!(sum(&b).is_zero(), "reduced right-hand side must be orthogonal to e");

    let mut v = vec![Rational::zero(); n];
    if n > 1 {
        let keep = n - 1;
        let sub = RatMatrix::from_fn(keep, keep, |j, k| m[(j, k)].clone());
        let head = linalg::solve(&sub, &b[..keep]).map_err(|e| match e {
            Error::SingularSystem => Error::NotFullyIndecomposable,
            other => other,
        })?;
        v[..keep].clone_from_slice(&head);
    }
    let av = a_times(a, &v);
    let u: Vec<Rational> = (0..n)
        .map(|i| (Rational::one() - &av[i]) * &r_inv[i])
        .collect();
    let potentials = Potentials {
        u,
        v,
        alpha: Rational::one(),
    };
    if potentials.line_sums(a).iter().any(|t| !t.is_one()) {
        return Err(Error::SingularSystem);
    }
    Ok(potentials)
}

fn a_times(a: &Pattern, v: &[Rational]) -> Vec<Rational> {
    (0..a.n_rows())
        .map(|i| {
            (0..a.n_cols())
                .filter(|&j| a.get(i, j))
                .fold(Rational::zero(), |acc, j| acc + &v[j])
        })
        .collect()
}

/// Decides whether `a` is the pattern of an RCDS doubly stochastic matrix
/// and realizes that matrix when it is.
pub fn decide_rcds_pattern(a: &Pattern) -> Result<RcdsDecision> {
    let potentials = solve_potentials(a)?;
    let violating_positions: Vec<(usize, usize)> = a
        .ones_positions()
        .filter(|&(i, j)| !potentials.cell(i, j).is_positive())
        .collect();
    let is_rcds_pattern = violating_positions.is_empty();
    let (realization, constant_sum) = if is_rcds_pattern {
        (Some(potentials.realize(a)), Some(potentials.diagonal_sum()))
    } else {
        (None, None)
    };
    Ok(RcdsDecision {
        is_rcds_pattern,
        potentials,
        realization,
        constant_sum,
        violating_positions,
    })
}

/// For a symmetric RCDS pattern, the vector `w = (u + v) / 2` and the
/// symmetric RCDS matrix `A o [w_i + w_j]`.
pub fn symmetrize_rcds(a: &Pattern) -> Result<(Vec<Rational>, RatMatrix)> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let decision = decide_rcds_pattern(a)?;
    if !decision.is_rcds_pattern {
        return Err(Error::NotRcdsPattern);
    }
    let p = &decision.potentials;
    let half = Rational::new(1.into(), 2.into());
    let w: Vec<Rational> = p.u.iter().zip(&p.v).map(|(x, y)| (x + y) * &half).collect();
    let n = w.len();
    let x = RatMatrix::from_fn(n, n, |i, j| {
        if a.get(i, j) {
            &w[i] + &w[j]
        } else {
            Rational::zero()
        }
    });
    Ok((w, x))
}
