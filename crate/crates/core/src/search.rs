//! Seeded random search for RCDS patterns.
//!
//! Each trial draws an i.i.d. Bernoulli pattern, solves for its potentials
//! and keeps the trial when every `u_i + v_j` on the pattern is nonnegative.
//! Cells where the sum vanishes drop out, so the emitted matrix is RCDS on a
//! support contained in the drawn pattern.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::assignment::is_rcds_matrix;
use crate::error::{Error, Result};
use crate::io::{matrix_to_json, pattern_to_json};
use crate::matrix::{is_doubly_stochastic, support, RatMatrix};
use crate::pattern::Pattern;
use crate::potentials::solve_potentials;
use crate::rational::Rational;
use crate::structure::is_fully_indecomposable;

/// The splitmix64 generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `true` with probability `p`: compares the top 53 bits, read as a
    /// fraction of `2^53`, against `p` exactly.
    pub fn bernoulli(&mut self, p: &Rational) -> bool {
        let draw = BigInt::from(self.next_u64() >> 11);
        draw * p.denom() < p.numer() * (BigInt::one() << 53)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub density: Rational,
    pub trials: u64,
    pub seed: u64,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameters("order must be positive".into()));
        }
        if !(self.density.is_positive() && self.density < Rational::one()) {
            return Err(Error::InvalidParameters(format!(
                "density must lie strictly between 0 and 1, got {}",
                self.density
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParameters("at least one trial is required".into()));
        }
        Ok(())
    }
}

/// Row-major i.i.d. Bernoulli(`density`) entries.
pub fn random_pattern(n: usize, density: &Rational, rng: &mut SplitMix64) -> Pattern {
    let bits = (0..n * n).map(|_| rng.bernoulli(density)).collect();
    Pattern::from_bits(n, n, bits).expect("n*n bits")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discovery {
    pub trial: u64,
    /// The pattern drawn in this trial.
    pub drawn: Pattern,
    /// Support of `matrix`, contained in `drawn`.
    pub pattern: Pattern,
    pub matrix: RatMatrix,
}

impl Discovery {
    pub fn to_json(&self) -> Value {
        json!({
            "trial": self.trial,
            "drawn": pattern_to_json(&self.drawn),
            "pattern": pattern_to_json(&self.pattern),
            "matrix": matrix_to_json(&self.matrix),
        })
    }
}

/// The RCDS matrix obtained from `a`'s potentials, if none of them is
/// negative on `a`. Returns `(support, matrix)`.
pub fn realize_from_pattern(a: &Pattern) -> Option<(Pattern, RatMatrix)> {
    if !is_fully_indecomposable(a).ok()? {
        return None;
    }
    let p = solve_potentials(a).ok()?;
    if a.ones_positions().any(|(i, j)| p.cell(i, j).is_negative()) {
        return None;
    }
    let x = p.realize(a);
    debug_assert!(is_doubly_stochastic(&x).unwrap_or(false));
    Some((support(&x), x))
}

/// Runs every trial; trial `t` draws from a generator seeded with `seed ^ t`,
/// so the output does not depend on scheduling.
pub fn discover(config: &SearchConfig) -> Result<Vec<Discovery>> {
    config.validate()?;
    let found = (0..config.trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = SplitMix64::new(config.seed ^ trial);
            let drawn = random_pattern(config.n, &config.density, &mut rng);
            let (pattern, matrix) = realize_from_pattern(&drawn)?;
            assert!(is_rcds_matrix(&matrix), "emitted matrix must be RCDS");
            Some(Discovery {
                trial,
                drawn,
                pattern,
                matrix,
            })
        })
        .collect();
    Ok(found)
}
