//! Solve the potential system of a (0,1)-pattern and read off the unique
//! RCDS matrix on it, or the cells that rule one out.

use diagsum::pattern::Pattern;
use diagsum::potentials::decide_rcds_pattern;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let full = Pattern::from_rows(&[[1, 1, 1, 1], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]);
    let d = decide_rcds_pattern(&full)?;
    println!("u = {:?}", d.potentials.u.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("v = {:?}", d.potentials.v.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("RCDS pattern: {}; bad cells {:?}", d.is_rcds_pattern, d.violating_positions);

    let mut trimmed = full.clone();
    for &(i, j) in &d.violating_positions {
        trimmed.set(i, j, false);
    }
    let d = decide_rcds_pattern(&trimmed)?;
    if let (Some(x), Some(s)) = (d.realization, d.constant_sum) {
        println!("after dropping them:\n{x}every diagonal sums to {s}");
    }
    Ok(())
}
