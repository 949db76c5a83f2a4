//! Decide whether a doubly stochastic matrix has constant diagonal sums,
//! and measure how far it is from that when it does not.

use diagsum::assignment::{rcds_sum, width_report};
use diagsum::io::{parse_matrix, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rcds = parse_matrix("0 1/3 1/3 1/3\n1/3 2/3 0 0\n1/3 0 2/3 0\n1/3 0 0 2/3", Format::Plain)?;
    println!("{rcds}common sum: {:?}\n", rcds_sum(&rcds).map(|s| s.to_string()));

    let skewed = parse_matrix("1/4 3/4\n3/4 1/4", Format::Plain)?;
    let report = width_report(&skewed)?;
    println!("{skewed}width = {}", report.width);
    println!("min diagonal {} via {:?}", report.min_cert.value, report.min_cert.perm.image());
    println!("max diagonal {} via {:?}", report.max_cert.value, report.max_cert.perm.image());
    println!("dual bounds: {} .. {}", report.theta_lower, report.theta_upper);
    Ok(())
}
