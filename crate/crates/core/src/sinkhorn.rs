//! Sinkhorn–Knopp balancing: find positive diagonal scalings `D1 X D2`
//! whose line sums are all within a tolerance of 1.
//!
//! The scaling vectors are rounded to dyadic rationals with a fixed number
//! of significant bits (derived from the tolerance) after every half step.
//! Unrounded iterates double their bit length each sweep. The tolerance test
//! itself is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// Guard bits kept beyond what the tolerance strictly needs.
const GUARD_BITS: u64 = 24;

fn within(sums: &[Rational], tolerance: &Rational) -> bool {
    sums.iter().all(|s| (s - Rational::one()).abs() <= *tolerance)
}

fn converged(x: &RatMatrix, tolerance: &Rational) -> bool {
    within(&x.row_sums(), tolerance) && within(&x.col_sums(), tolerance)
}

/// Smallest `k` with `2^-k <= tol`.
fn bits_for(tolerance: &Rational) -> u64 {
    let mut k = 0;
    let mut scale = Rational::one();
    while scale > *tolerance {
        scale /= Rational::from_integer(BigInt::from(2));
        k += 1;
    }
    k
}

fn pow2(exp: i64) -> Rational {
    let p = Rational::from_integer(BigInt::one() << exp.unsigned_abs());
    if exp >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Rounds a positive rational to `bits` significant binary digits.
fn round_relative(q: &Rational, bits: u64) -> Rational {
    let magnitude = q.numer().bits() as i64 - q.denom().bits() as i64;
    let shift = bits as i64 - magnitude;
    let scale = pow2(shift);
    let scaled = q * &scale;
    let (quot, rem) = scaled.numer().div_rem(scaled.denom());
    let rounded = if rem * 2 >= *scaled.denom() { quot + 1 } else { quot };
    Rational::from_integer(rounded) / scale
}

fn apply(x: &RatMatrix, rows: &[Rational], cols: &[Rational]) -> RatMatrix {
    RatMatrix::from_fn(x.n_rows(), x.n_cols(), |i, j| &x[(i, j)] * &rows[i] * &cols[j])
}

/// Alternately normalizes rows then columns until every line sum of the
/// scaled matrix is within `tolerance` of 1.
///
/// The input must be square and nonnegative without zero lines. A support
/// without total support never balances and ends in `NotConverged`.
pub fn sinkhorn_balance(
    x: &RatMatrix,
    tolerance: &Rational,
    max_iters: usize,
) -> Result<RatMatrix> {
    let n = x.order()?;
    if !tolerance.is_positive() {
        return Err(Error::InvalidParameters("tolerance must be positive".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if x[(i, j)].is_negative() {
                return Err(Error::NegativeEntry(i, j));
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| x.row(i).iter().all(Zero::is_zero)) {
        return Err(Error::ZeroRow(i));
    }
    if let Some(j) = (0..n).find(|&j| (0..n).all(|i| x[(i, j)].is_zero())) {
        return Err(Error::ZeroColumn(j));
    }
    if converged(x, tolerance) {
        return Ok(x.clone());
    }

    let n_bits = usize::BITS - n.leading_zeros();
    let bits = bits_for(tolerance) + 2 * n_bits as u64 + GUARD_BITS;
    let mut rows = vec![Rational::one(); n];
    let mut cols = vec![Rational::one(); n];
    for _ in 0..max_iters {
        for (i, r) in rows.iter_mut().enumerate() {
            let s = (0..n).fold(Rational::zero(), |acc, j| acc + &x[(i, j)] * &cols[j]);
            *r = round_relative(&s.recip(), bits);
        }
        for (j, c) in cols.iter_mut().enumerate() {
            let s = (0..n).fold(Rational::zero(), |acc, i| acc + &x[(i, j)] * &rows[i]);
            *c = round_relative(&s.recip(), bits);
        }
        let balanced = apply(x, &rows, &cols);
        if converged(&balanced, tolerance) {
            return Ok(balanced);
        }
    }
    Err(Error::NotConverged(max_iters))
}
