//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Rational systems are brought to integer form by scaling each row with the
//! lcm of its denominators; elimination then stays in `BigInt` with exact
//! divisions by the previous pivot, and only back-substitution produces
//! fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Bareiss elimination in place; returns the pivot column of each pivot row.
/// Columns in `0..limit_cols` are eligible as pivots.
fn eliminate(m: &mut [Vec<BigInt>], limit_cols: usize) -> Vec<usize> {
    let n_rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..limit_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (upper, lower) = m.split_at_mut(r + 1);
        let pivot_row = &upper[r];
        for row in lower.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..row.len() {
                let v = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Exact solution of the square nonsingular system `a x = b`.
pub fn solve(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.order()?;
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.len(),
        });
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            integer_row(&row)
        })
        .collect();
    let pivots = eliminate(&mut m, n);
    if pivots.len() < n {
        return Err(Error::SingularSystem);
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

pub fn rank(a: &RatMatrix) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..a.n_rows()).map(|i| integer_row(a.row(i))).collect();
    eliminate(&mut m, a.n_cols()).len()
}
