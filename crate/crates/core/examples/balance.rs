//! Sinkhorn balancing of a positive matrix, then an exact width check on
//! the balanced result.

use diagsum::assignment::diagonal_width;
use diagsum::matrix::RatMatrix;
use diagsum::rational::rat;
use diagsum::sinkhorn::sinkhorn_balance;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = RatMatrix::from_int_rows(&[[1, 2, 0], [3, 1, 1], [0, 2, 5]], 1);
    let x = sinkhorn_balance(&a, &rat(1, 1_000_000), 1000)?;
    let show: Vec<String> = x.entries().iter().map(|v| format!("{:.6}", to_f64(v))).collect();
    println!("balanced (rounded for display): {show:?}");
    println!("row sums: {:?}", x.row_sums().iter().map(to_f64).collect::<Vec<_>>());
    let uniform = RatMatrix::from_fn(3, 3, |_, _| rat(1, 3));
    println!("width of J/3: {}", diagonal_width(&uniform)?);
    Ok(())
}

fn to_f64(v: &diagsum::rational::Rational) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}
