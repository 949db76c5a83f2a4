//! A tour of the explicit construction families.

use diagsum::assignment::rcds_sum;
use diagsum::construct::{
    class1, corner_block, derangement_rcds, gale_ryser, star_rcds, tridiagonal_rcds, zigzag,
    ZigZagSpec,
};
use diagsum::matrix::RatMatrix;
use diagsum::rational::rat;

fn show(name: &str, x: &RatMatrix) {
    let sum = rcds_sum(x).map(|s| s.to_string()).unwrap_or_else(|| "none".into());
    println!("{name} (sum {sum})\n{x}");
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show("tridiagonal 5", &tridiagonal_rcds(5)?.matrix);
    show("corner block 3 1 5", &corner_block(3, 1, 5)?);
    show("class 1, k=3 t=2 p=2", &class1(3, 2, 2)?);
    show("derangement 4", &derangement_rcds(4)?);

    for n in 2..=6 {
        match star_rcds(n)? {
            Some(x) => show(&format!("star {n}"), &x),
            None => println!("star {n}: no RCDS matrix\n"),
        }
    }

    let spec = ZigZagSpec {
        block_dims: vec![(2, 1), (2, 2), (2, 2), (2, 2), (2, 2), (2, 1)],
        constants: vec![rat(1, 2), rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 2)],
        last_block_void: false,
    };
    show("zig-zag", &zigzag(&spec)?);

    if let Some(p) = gale_ryser(&[2, 2, 1], &[1, 2, 2])? {
        println!("Gale-Ryser realization of (2,2,1) / (1,2,2):\n{}", diagsum::io::serialize_pattern(&p));
    }
    Ok(())
}
