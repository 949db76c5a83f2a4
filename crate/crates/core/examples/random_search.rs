//! Seeded search for RCDS patterns among random (0,1)-matrices.

use diagsum::rational::rat;
use diagsum::search::{discover, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = SearchConfig { n: 5, density: rat(3, 5), trials: 2000, seed: 11 };
    let found = discover(&config)?;
    println!("{} of {} trials gave an RCDS matrix", found.len(), config.trials);
    for d in found.iter().take(3) {
        let kept = d.pattern == d.drawn;
        println!("trial {} (pattern kept whole: {kept})\n{}", d.trial, d.matrix);
    }
    if let Some(d) = found.first() {
        println!("{}", serde_json::to_string_pretty(&d.to_json())?);
    }
    Ok(())
}
