//! Brute-force diagonal enumeration, the reference the fast paths are
//! tested against.

use diagsum::assignment::extreme_diagonal_sums;
use diagsum::matrix::RatMatrix;
use diagsum::oracle::{brute_diagonal_stats, exchange_violations};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = RatMatrix::from_int_rows(&[[2, 1, 1], [1, 2, 1], [1, 1, 2]], 4);
    let st = brute_diagonal_stats(&x)?;
    let (lo, hi) = extreme_diagonal_sums(&x)?;
    println!("{x}{} diagonals, min {} max {}", st.count, st.min, st.max);
    println!("assignment solver: min {} max {}", lo.value, hi.value);
    for v in exchange_violations(&x)? {
        println!("2x2 exchange fails on rows {:?}, cols {:?}", v.rows, v.cols);
    }
    Ok(())
}
