//! Permanents, permanental minors and the constant-permanental-sum test,
//! ending with the Gray graph.

use diagsum::pattern::Pattern;
use diagsum::permanent::{gray_graph_pattern, hat_matrix, permanent};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [4, 8, 12] {
        let d = Pattern::from_fn(n, n, |i, j| i != j);
        println!("per(J_{n} - I) = {}", permanent(&d)?);
    }

    let tree = Pattern::from_rows(&[
        [0, 1, 1, 1, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 1],
    ]);
    let r = hat_matrix(&tree)?;
    println!("\nper = {}, minors on the ones:\n{}", r.permanent, r.hat());
    println!("CPS: {}, gamma = {:?}", r.is_cps(), r.gamma.as_ref().map(ToString::to_string));

    let g = gray_graph_pattern();
    let r = hat_matrix(&g)?;
    let minors: std::collections::BTreeSet<_> = r.minor_matrix.iter().flatten().collect();
    println!("\nGray graph: per = {}, distinct minors {:?}", r.permanent, minors);
    println!("normalized hat is RCDS: {}", diagsum::assignment::is_rcds_matrix(&r.normalized_hat()));
    Ok(())
}
