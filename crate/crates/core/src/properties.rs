//! Randomized invariants across modules.

use num_bigint::BigUint;
use proptest::prelude::*;

use crate::assignment::{extreme_diagonal_sums, is_rcds_matrix, rcds_sum, width_report};
use crate::construct::{gale_ryser, gale_ryser_feasible};
use crate::io::{parse_matrix, parse_pattern, serialize_matrix, serialize_pattern, Format};
use crate::matrix::{diagonal_sum, is_doubly_stochastic, support, RatMatrix};
use crate::oracle::{brute_diagonal_stats, enumerate_diagonals, DEFAULT_LIMIT};
use crate::pattern::Pattern;
use crate::permanent::permanent;
use crate::potentials::decide_rcds_pattern;
use crate::rational::rat;

fn pattern(max_n: usize) -> impl Strategy<Value = Pattern> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| Pattern::from_bits(n, n, bits).unwrap())
    })
}

fn rational_matrix() -> impl Strategy<Value = RatMatrix> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-50i64..50, 1i64..12), r * c).prop_map(move |v| {
            let entries = v.into_iter().map(|(p, q)| rat(p, q)).collect();
            RatMatrix::from_entries(r, c, entries).unwrap()
        })
    })
}

/// Convex combination of up to `n` permutation matrices with weights 1..=9.
fn doubly_stochastic(max_n: usize) -> impl Strategy<Value = RatMatrix> {
    (2..=max_n).prop_flat_map(|n| {
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        proptest::collection::vec((perm, 1i64..10), 1..=n).prop_map(move |terms| {
            let total: i64 = terms.iter().map(|(_, w)| w).sum();
            let mut x = RatMatrix::zeros(n, n);
            for (image, w) in terms {
                for (i, j) in image.into_iter().enumerate() {
                    x[(i, j)] += rat(w, total);
                }
            }
            x
        })
    })
}

fn permute(x: &RatMatrix, rows: &[usize], cols: &[usize]) -> RatMatrix {
    RatMatrix::from_fn(x.n_rows(), x.n_cols(), |i, j| x[(rows[i], cols[j])].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_text_roundtrip(x in rational_matrix()) {
        for format in [Format::Plain, Format::Json] {
            let text = serialize_matrix(&x, format);
            prop_assert_eq!(Format::detect(&text), format);
            prop_assert_eq!(parse_matrix(&text, format).unwrap(), x.clone());
        }
    }

    #[test]
    fn pattern_text_roundtrip(a in pattern(7)) {
        prop_assert_eq!(parse_pattern(&serialize_pattern(&a)).unwrap(), a);
    }

    #[test]
    fn permanent_counts_diagonals(a in pattern(6)) {
        let count = enumerate_diagonals(&a, DEFAULT_LIMIT).unwrap().len();
        prop_assert_eq!(permanent(&a).unwrap(), BigUint::from(count));
    }

    #[test]
    fn extremes_match_enumeration(x in doubly_stochastic(6)) {
        let (lo, hi) = extreme_diagonal_sums(&x).unwrap();
        let st = brute_diagonal_stats(&x).unwrap();
        prop_assert_eq!(&lo.value, &st.min);
        prop_assert_eq!(&hi.value, &st.max);
        prop_assert_eq!(is_rcds_matrix(&x), st.all_equal);
    }

    #[test]
    fn duality_brackets_every_diagonal(x in doubly_stochastic(6)) {
        let report = width_report(&x).unwrap();
        prop_assert!(report.min_cert.verify(&x));
        prop_assert!(report.max_cert.verify(&x));
        prop_assert_eq!(&report.theta_upper - &report.theta_lower, report.width.clone());
        // Weak duality: any diagonal lies between the two dual values.
        for p in enumerate_diagonals(&support(&x), DEFAULT_LIMIT).unwrap() {
            let d = diagonal_sum(&x, &p).unwrap();
            prop_assert!(report.theta_lower <= d && d <= report.theta_upper);
        }
    }

    #[test]
    fn width_is_invariant_under_line_permutations(
        x in doubly_stochastic(5),
        seed in any::<u64>(),
    ) {
        let n = x.n_rows();
        let mut rng = crate::search::SplitMix64::new(seed);
        let mut shuffle = || {
            let mut v: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                v.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
            }
            v
        };
        let (rows, cols) = (shuffle(), shuffle());
        let y = permute(&x, &rows, &cols);
        prop_assert_eq!(width_report(&x).unwrap().width, width_report(&y).unwrap().width);
        prop_assert_eq!(rcds_sum(&x), rcds_sum(&y));
        prop_assert_eq!(rcds_sum(&x), rcds_sum(&x.transpose()));
    }

    #[test]
    fn decided_patterns_are_realized_exactly(a in pattern(6)) {
        let Ok(d) = decide_rcds_pattern(&a) else { return Ok(()); };
        match (d.is_rcds_pattern, d.realization) {
            (true, Some(x)) => {
                prop_assert!(is_doubly_stochastic(&x).unwrap());
                prop_assert_eq!(support(&x), a);
                prop_assert_eq!(rcds_sum(&x), d.constant_sum);
            }
            (false, None) => prop_assert!(!d.violating_positions.is_empty()),
            (flag, x) => prop_assert!(false, "inconsistent decision {flag} {x:?}"),
        }
    }

    #[test]
    fn gale_ryser_realizes_feasible_sums(
        r in proptest::collection::vec(0usize..5, 1..5),
        s in proptest::collection::vec(0usize..5, 1..5),
    ) {
        if r.iter().sum::<usize>() != s.iter().sum::<usize>() {
            prop_assert!(gale_ryser(&r, &s).is_err());
            return Ok(());
        }
        let found = gale_ryser(&r, &s).unwrap();
        prop_assert_eq!(found.is_some(), gale_ryser_feasible(&r, &s));
        if let Some(p) = found {
            prop_assert_eq!(p.row_sums(), r);
            prop_assert_eq!(p.col_sums(), s);
        }
    }

    #[test]
    fn zero_free_rcds_is_uniform(weights in proptest::collection::vec(1i64..4, 1..7)) {
        let n = weights.len();
        let total: i64 = weights.iter().sum();
        let x = RatMatrix::from_fn(n, n, |i, j| rat(weights[(j + n - i) % n], total));
        let uniform = RatMatrix::from_fn(n, n, |_, _| rat(1, n as i64));
        prop_assert_eq!(is_rcds_matrix(&x), x == uniform);
    }
}

