//! Acceptance criteria. Each prints one PASS/FAIL line; the process exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};

use diagsum::assignment::{extreme_diagonal_sums, is_rcds_matrix, rcds_sum, width_report};
use diagsum::construct::{
    class1, corner_block, derangement_rcds, example_block_patterns, star_rcds, tridiagonal_rcds,
    two_by_two_block, uniform, zigzag, ZigZagSpec,
};
use diagsum::matrix::{is_doubly_stochastic, support, Permutation, RatMatrix};
use diagsum::oracle::{brute_diagonal_stats, exchange_violations};
use diagsum::pattern::Pattern;
use diagsum::permanent::{gray_graph_pattern, hat_matrix, GRAY_GRAPH_PERMANENT};
use diagsum::potentials::{decide_rcds_pattern, solve_potentials, Potentials};
use diagsum::rational::{int, parse_rational, rat, Rational};
use diagsum::search::SplitMix64;
use diagsum::structure::is_fully_indecomposable;
use num_bigint::BigUint;
use num_traits::Zero;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ex_one() -> Pattern {
    Pattern::from_rows(&[[1, 1, 1, 1], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]])
}

fn eq_x() -> RatMatrix {
    RatMatrix::from_int_rows(&[[0, 1, 1, 1], [1, 2, 0, 0], [1, 0, 2, 0], [1, 0, 0, 2]], 3)
}

fn root2() -> Pattern {
    Pattern::from_rows(&[
        [0, 1, 1, 1, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [1, 0, 1, 0, 0, 0],
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 1],
    ])
}

fn notso() -> Pattern {
    Pattern::from_rows(&[
        [1, 0, 0, 1, 1],
        [0, 1, 1, 1, 0],
        [1, 0, 0, 1, 1],
        [1, 1, 1, 0, 0],
        [1, 0, 1, 1, 0],
    ])
}

fn symtree() -> Pattern {
    Pattern::from_rows(&[
        [0, 1, 1, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1, 0, 0],
        [1, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0, 0, 1],
    ])
}

/// Equal up to the shift `u + c`, `v - c`.
fn same_gauge_class(p: &Potentials, q: &Potentials) -> bool {
    let (p, q) = (p.canonical(), q.canonical());
    p.u == q.u && p.v == q.v
}

fn decimal_matrix(rows: &[&str]) -> RatMatrix {
    let entries: Vec<Rational> = rows
        .iter()
        .flat_map(|r| r.split_whitespace().map(|t| parse_rational(t).expect("decimal")))
        .collect();
    RatMatrix::from_entries(rows.len(), rows.len(), entries).expect("square")
}

/// Every RCDS matrix built by the criteria, for the cross-cutting checks.
#[derive(Default)]
struct Produced(Vec<(String, RatMatrix)>);

impl Produced {
    fn add(&mut self, label: impl Into<String>, x: &RatMatrix) {
        self.0.push((label.into(), x.clone()));
    }
}

/// Every positive 2x2 submatrix with a full-term-rank complement has equal
/// diagonal sums.
fn exchange_ok(x: &RatMatrix) -> bool {
    exchange_violations(x).map(|v| v.is_empty()).unwrap_or(false)
}

fn golden_realization(out: &mut Produced) -> Check {
    let mut a_prime = ex_one();
    a_prime.set(0, 0, false);
    let d = decide_rcds_pattern(&a_prime).map_err(|e| e.to_string())?;
    ensure!(d.realization.as_ref() == Some(&eq_x()), "realization of A' differs: {:?}", d.realization);
    ensure!(d.constant_sum == Some(int(2)), "sum of A' is {:?}", d.constant_sum);
    let d = decide_rcds_pattern(&ex_one()).map_err(|e| e.to_string())?;
    ensure!(!d.is_rcds_pattern, "A reported as RCDS pattern");
    ensure!(d.violating_positions == vec![(0, 0)], "violations {:?}", d.violating_positions);
    out.add("ex-one realization", &eq_x());
    Ok(())
}

fn golden_root2(out: &mut Produced) -> Check {
    let a = root2();
    let p = solve_potentials(&a).map_err(|e| e.to_string())?;
    // Table values with every line sum 5.
    let table = Potentials {
        u: [1, 1, 2, 2, 2, 2].map(|v| rat(v, 5)).to_vec(),
        v: [0, 0, 1, 1, 1, 1].map(|v| rat(v, 5)).to_vec(),
        alpha: int(1),
    };
    ensure!(same_gauge_class(&p, &table), "potentials {:?}", p);
    let x = RatMatrix::from_int_rows(
        &[
            [0, 1, 2, 2, 0, 0],
            [1, 0, 0, 0, 2, 2],
            [2, 0, 3, 0, 0, 0],
            [2, 0, 0, 3, 0, 0],
            [0, 2, 0, 0, 3, 0],
            [0, 2, 0, 0, 0, 3],
        ],
        5,
    );
    let d = decide_rcds_pattern(&a).map_err(|e| e.to_string())?;
    ensure!(d.realization.as_ref() == Some(&x), "realization differs");
    ensure!(d.constant_sum == Some(rat(14, 5)), "sum {:?}", d.constant_sum);
    ensure!(rcds_sum(&x) == Some(rat(14, 5)), "assignment check disagrees");
    out.add("loopy tree realization", &x);
    Ok(())
}

fn golden_notso(out: &mut Produced) -> Check {
    let p = solve_potentials(&notso()).map_err(|e| e.to_string())?;
    let want = Potentials {
        u: ["0.25", "0.2", "0.25", "0.2", "0.3"].map(|t| parse_rational(t).unwrap()).to_vec(),
        v: ["0", "0.3", "0.1", "0", "0.25"].map(|t| parse_rational(t).unwrap()).to_vec(),
        alpha: int(1),
    };
    ensure!(same_gauge_class(&p, &want), "potentials {:?}", p);
    let x = decimal_matrix(&[
        "0.25 0 0 0.25 0.5",
        "0 0.5 0.3 0.2 0",
        "0.25 0 0 0.25 0.5",
        "0.2 0.5 0.3 0 0",
        "0.3 0 0.4 0.3 0",
    ]);
    let d = decide_rcds_pattern(&notso()).map_err(|e| e.to_string())?;
    ensure!(d.realization.as_ref() == Some(&x), "realization differs: {:?}", d.realization);
    out.add("decimal example realization", &x);
    Ok(())
}

fn golden_simplex(out: &mut Produced) -> Check {
    let first = RatMatrix::from_int_rows(
        &[
            [1, 0, 0, 1, 2, 0, 0],
            [0, 0, 0, 0, 2, 2, 0],
            [0, 0, 0, 0, 0, 2, 2],
            [1, 0, 0, 1, 0, 0, 2],
            [2, 2, 0, 0, 0, 0, 0],
            [0, 2, 2, 0, 0, 0, 0],
            [0, 0, 2, 2, 0, 0, 0],
        ],
        4,
    );
    let second = RatMatrix::from_int_rows(
        &[
            [0, 0, 0, 0, 3, 3, 3],
            [0, 1, 1, 1, 6, 0, 0],
            [0, 1, 1, 1, 0, 6, 0],
            [0, 1, 1, 1, 0, 0, 6],
            [3, 6, 0, 0, 0, 0, 0],
            [3, 0, 6, 0, 0, 0, 0],
            [3, 0, 0, 6, 0, 0, 0],
        ],
        9,
    );
    out.add("simplex face 1", &first);
    out.add("simplex face 2", &second);
    ensure!(rcds_sum(&first) == Some(rat(13, 4)), "first: {:?}", rcds_sum(&first));
    if rcds_sum(&second) != Some(rat(7, 3)) {
        let st = brute_diagonal_stats(&second).map_err(|e| e.to_string())?;
        return Err(format!(
            "second: expected 7/3, got {:?}; enumeration gives min {}, max {} over {} diagonals",
            rcds_sum(&second).map(|s| s.to_string()),
            st.min,
            st.max,
            st.count
        ));
    }
    let d = decide_rcds_pattern(&support(&first)).map_err(|e| e.to_string())?;
    ensure!(d.realization.as_ref() == Some(&first), "first not reproduced from its pattern");
    Ok(())
}

fn non_rcds_witness() -> Check {
    let report = hat_matrix(&symtree()).map_err(|e| e.to_string())?;
    let displayed = RatMatrix::from_int_rows(
        &[
            [0, 2, 4, 2, 0, 0, 0, 0],
            [2, 0, 0, 0, 3, 3, 0, 0],
            [4, 0, 4, 0, 0, 0, 0, 0],
            [2, 0, 0, 0, 0, 0, 3, 3],
            [0, 3, 0, 0, 5, 0, 0, 0],
            [0, 3, 0, 0, 0, 5, 0, 0],
            [0, 0, 0, 3, 0, 0, 5, 0],
            [0, 0, 0, 3, 0, 0, 0, 5],
        ],
        1,
    );
    ensure!(report.hat() == displayed, "hat matrix differs");
    for (divisor, lo_want, hi_want) in [(9, rat(29, 9), rat(30, 9)), (8, rat(29, 8), rat(30, 8))] {
        let x = displayed.scale(&rat(1, divisor));
        let (lo, hi) = extreme_diagonal_sums(&x).map_err(|e| e.to_string())?;
        ensure!(lo.value == lo_want && hi.value == hi_want, "/{divisor}: extremes {} {}", lo.value, hi.value);
        ensure!(!is_rcds_matrix(&x), "/{divisor}: reported RCDS");
    }
    ensure!(report.permanent == BigUint::from(8u32), "per = {}", report.permanent);
    ensure!(is_doubly_stochastic(&report.normalized_hat()).unwrap(), "hat/per not doubly stochastic");
    Ok(())
}

fn cps_separation() -> Check {
    let a = notso();
    let report = hat_matrix(&a).map_err(|e| e.to_string())?;
    let m = [[3, 0, 0, 3, 6], [0, 6, 4, 2, 0], [3, 0, 0, 3, 6], [2, 6, 4, 0, 0], [4, 8, 4, 4, 0]];
    for (i, j) in a.ones_positions() {
        let got = report.minor(i, j).cloned();
        ensure!(got == Some(BigUint::from(m[i][j] as u32)), "minor ({i}, {j}) = {got:?}");
    }
    ensure!(!report.is_cps(), "reported CPS");
    let d = decide_rcds_pattern(&a).map_err(|e| e.to_string())?;
    ensure!(d.is_rcds_pattern, "pattern not RCDS");
    Ok(())
}

fn tridiagonal_family(out: &mut Produced) -> Check {
    let (lo_h, hi_h, lo_x, hi_x) = (rat(37, 10), rat(15, 4), rat(1, 5), rat(1, 2));
    let mut problems = Vec::new();
    for n in 2..=50 {
        let t = tridiagonal_rcds(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure!(is_doubly_stochastic(&t.matrix).unwrap(), "n = {n}: line sums");
        ensure!(support(&t.matrix) == Pattern::tridiagonal(n), "n = {n}: support");
        ensure!(is_rcds_matrix(&t.matrix), "n = {n}: not RCDS");
        if n <= 8 {
            ensure!(brute_diagonal_stats(&t.matrix).unwrap().all_equal, "n = {n}: oracle");
        }
        for (k, h) in t.pivots.iter().enumerate().skip(1) {
            if !(&lo_h < h && h < &hi_h) {
                problems.push(format!("n={n}: h_{} = {h}", k + 1));
            }
        }
        for (k, x) in t.x.iter().enumerate() {
            if !(&lo_x < x && x < &hi_x) {
                problems.push(format!("n={n}: x_{} = {x}", k + 1));
            }
        }
        out.add(format!("tridiagonal {n}"), &t.matrix);
    }
    if problems.is_empty() {
        return Ok(());
    }
    let shown: Vec<&str> = problems.iter().take(3).map(String::as_str).collect();
    Err(format!(
        "{} strict-bound violations, e.g. {}; h_2 = 4 - 1/4 = 15/4 and x_1 = 1/2 at n = 2 are forced",
        problems.len(),
        shown.join(", ")
    ))
}

fn star_dichotomy(out: &mut Produced) -> Check {
    let displayed = [
        RatMatrix::from_int_rows(&[[1, 1], [1, 1]], 2),
        RatMatrix::from_int_rows(&[[1, 2, 2], [2, 3, 0], [2, 0, 3]], 5),
        RatMatrix::from_int_rows(&[[0, 1, 1, 1], [1, 2, 0, 0], [1, 0, 2, 0], [1, 0, 0, 2]], 3),
    ];
    for (n, v) in (2..=4).zip(&displayed) {
        let got = star_rcds(n).map_err(|e| e.to_string())?;
        ensure!(got.as_ref() == Some(v), "n = {n}: {got:?}");
        ensure!(is_rcds_matrix(v), "n = {n}: not RCDS");
        out.add(format!("star {n}"), v);
    }
    for n in 5..=20 {
        ensure!(star_rcds(n).map_err(|e| e.to_string())?.is_none(), "n = {n} feasible");
        let d = decide_rcds_pattern(&Pattern::star(n)).map_err(|e| e.to_string())?;
        ensure!(!d.is_rcds_pattern, "n = {n}: star pattern decided RCDS");
    }
    Ok(())
}

fn construction_families(out: &mut Produced) -> Check {
    let mut verify = |label: String, x: RatMatrix| -> Check {
        ensure!(is_doubly_stochastic(&x).unwrap(), "{label}: not doubly stochastic");
        ensure!(is_rcds_matrix(&x), "{label}: not RCDS");
        if x.n_rows() <= 8 {
            ensure!(brute_diagonal_stats(&x).unwrap().all_equal, "{label}: oracle disagrees");
        }
        out.add(label, &x);
        Ok(())
    };
    for n in 3..=7 {
        for r in 2..n {
            for s in 1..r {
                verify(format!("corner {r} {s} {n}"), corner_block(r, s, n).unwrap())?;
            }
        }
    }
    let spec = ZigZagSpec {
        block_dims: vec![(2, 1), (2, 2), (2, 2), (2, 2), (2, 2), (2, 1)],
        constants: vec![rat(1, 2), rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 2)],
        last_block_void: false,
    };
    verify("zigzag 6".into(), zigzag(&spec).map_err(|e| e.to_string())?)?;
    let block = two_by_two_block([1, 2, 3, 4], 5, &example_block_patterns()).map_err(|e| e.to_string())?;
    let alpha_scaled = block.scale(&int(10));
    ensure!(
        alpha_scaled.row_sums().iter().chain(&alpha_scaled.col_sums()).all(|s| s == &int(10)),
        "block line sums before normalization differ from k1 k4 + k2 k3"
    );
    verify("block2x2 1 2 3 4 5".into(), block)?;
    verify("class1 3 2 2".into(), class1(3, 2, 2).map_err(|e| e.to_string())?)?;
    for n in 2..=6 {
        verify(format!("derangement {n}"), derangement_rcds(n).unwrap())?;
    }
    Ok(())
}

fn random_permutation(n: usize, rng: &mut SplitMix64) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        image.swap(i, j);
    }
    Permutation::new(image).unwrap()
}

/// Convex combination of at most `n` random permutation matrices with
/// integer weights in `1..=10`.
fn random_doubly_stochastic(rng: &mut SplitMix64) -> RatMatrix {
    let n = 2 + (rng.next_u64() % 5) as usize;
    let terms = 1 + (rng.next_u64() % n as u64) as usize;
    let mut x = RatMatrix::zeros(n, n);
    let mut total = 0;
    for _ in 0..terms {
        let w = 1 + (rng.next_u64() % 10) as i64;
        total += w;
        for (i, j) in random_permutation(n, rng).positions() {
            x[(i, j)] += int(w);
        }
    }
    x.scale(&rat(1, total))
}

fn random_suite() -> Vec<RatMatrix> {
    let mut rng = SplitMix64::new(2024);
    (0..200).map(|_| random_doubly_stochastic(&mut rng)).collect()
}

fn width_duality() -> Check {
    for (k, x) in random_suite().iter().enumerate() {
        let report = width_report(x).map_err(|e| format!("matrix {k}: {e}"))?;
        let st = brute_diagonal_stats(x).map_err(|e| e.to_string())?;
        ensure!(report.width == &st.max - &st.min, "matrix {k}: width {} vs oracle {}", report.width, &st.max - &st.min);
        ensure!(&report.theta_upper - &report.theta_lower == report.width, "matrix {k}: dual gap");
        ensure!(report.min_cert.verify(x) && report.max_cert.verify(x), "matrix {k}: certificate");
        ensure!(report.width.is_zero() == is_rcds_matrix(x), "matrix {k}: zero width vs RCDS");
    }
    Ok(())
}

fn random_patterns(out: &mut Produced) -> Check {
    let patterns = [
        ["11011", "10111", "00111", "01100", "11001"],
        ["00110", "10111", "01011", "01001", "10010"],
        ["11001", "11000", "00111", "11100", "00011"],
        ["00110", "11001", "00101", "10111", "11100"],
    ];
    for (k, rows) in patterns.iter().enumerate() {
        let a = diagsum::io::parse_pattern(&rows.join("\n")).unwrap();
        let d = decide_rcds_pattern(&a).map_err(|e| e.to_string())?;
        ensure!(d.is_rcds_pattern, "pattern {} rejected at {:?}", k + 1, d.violating_positions);
        out.add(format!("5x5 pattern {}", k + 1), d.realization.as_ref().unwrap());
    }
    Ok(())
}

fn uniqueness_and_monotonicity(produced: &Produced) -> Result<String, String> {
    let (mut resolved, mut pairs) = (0, 0);
    for (label, x) in &produced.0 {
        ensure!(exchange_ok(x), "{label}: 2x2 exchange condition fails");
        let s = support(x);
        if is_fully_indecomposable(&s).unwrap() {
            let d = decide_rcds_pattern(&s).map_err(|e| format!("{label}: {e}"))?;
            ensure!(d.realization.as_ref() == Some(x), "{label}: re-solve differs");
            resolved += 1;
        }
    }
    for (la, x) in &produced.0 {
        for (lb, y) in &produced.0 {
            if x.n_rows() != y.n_rows() {
                continue;
            }
            // Zeros of x contained in zeros of y.
            if support(y).is_subpattern_of(&support(x)) {
                let (alpha, beta) = (rcds_sum(x).unwrap(), rcds_sum(y).unwrap());
                ensure!(alpha <= beta, "{la} ({alpha}) vs {lb} ({beta})");
                pairs += 1;
            }
        }
    }
    Ok(format!("{resolved} re-solved, {pairs} nested pairs"))
}

fn gray_graph() -> Check {
    let g = gray_graph_pattern();
    ensure!(g.is_regular(3), "not cubic");
    ensure!(is_fully_indecomposable(&g).unwrap(), "not fully indecomposable");
    let report = hat_matrix(&g).map_err(|e| e.to_string())?;
    ensure!(report.expansion_identity_holds(), "row expansion identity fails");
    ensure!(report.permanent == BigUint::from(GRAY_GRAPH_PERMANENT), "per = {}", report.permanent);
    let minors: Vec<&BigUint> = report.minor_matrix.iter().flatten().collect();
    ensure!(minors.len() == 81, "{} support entries", minors.len());
    ensure!(minors.iter().all(|m| m == &minors[0]), "minors differ");
    ensure!(is_rcds_matrix(&report.normalized_hat()), "hat/per not RCDS");
    Ok(())
}

fn zero_free_characterization() -> Result<String, String> {
    let mut rng = SplitMix64::new(77);
    let mut candidates: Vec<RatMatrix> = random_suite();
    for n in 1..=6usize {
        for trial in 0..40 {
            // Weights on all n cyclic shifts; every fifth trial uses equal weights.
            let weights: Vec<i64> = (0..n)
                .map(|_| if trial % 5 == 0 { 1 } else { 1 + (rng.next_u64() % 4) as i64 })
                .collect();
            let total: i64 = weights.iter().sum();
            candidates.push(RatMatrix::from_fn(n, n, |i, j| rat(weights[(j + n - i) % n], total)));
        }
    }
    let (mut zero_free, mut rcds) = (0, 0);
    for x in candidates {
        let n = x.n_rows();
        if x.entries().iter().any(Zero::is_zero) {
            continue;
        }
        zero_free += 1;
        if is_rcds_matrix(&x) {
            rcds += 1;
            ensure!(x == uniform(n).unwrap(), "zero-free RCDS matrix differs from J/n:\n{x}");
        }
    }
    ensure!(rcds > 0, "no zero-free RCDS matrix encountered");
    Ok(format!("{zero_free} zero-free, {rcds} RCDS, all equal to J/n"))
}

fn main() {
    let mut produced = Produced::default();
    let mut failures = 0;
    let mut report = |id: u32, name: &str, result: Result<String, String>| {
        match result {
            Ok(detail) if detail.is_empty() => println!("[PASS] {id:>2} {name}"),
            Ok(detail) => println!("[PASS] {id:>2} {name} ({detail})"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {id:>2} {name}: {why}");
            }
        }
    };
    let run = |f: &mut dyn FnMut() -> Check| -> Result<String, String> {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r.map(|()| String::new()),
            Err(p) => Err(format!(
                "panicked: {}",
                p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default()
            )),
        }
    };

    report(1, "golden realization of the 4x4 pattern", run(&mut || golden_realization(&mut produced)));
    report(2, "golden potentials of the loopy tree", run(&mut || golden_root2(&mut produced)));
    report(3, "golden potentials of the decimal example", run(&mut || golden_notso(&mut produced)));
    report(4, "golden simplex-face matrices", run(&mut || golden_simplex(&mut produced)));
    report(5, "non-RCDS hat matrix witness", run(&mut non_rcds_witness));
    report(6, "CPS separates from RCDS", run(&mut cps_separation));
    report(7, "tridiagonal family, n = 2..50", run(&mut || tridiagonal_family(&mut produced)));
    report(8, "star dichotomy", run(&mut || star_dichotomy(&mut produced)));
    report(9, "construction families", run(&mut || construction_families(&mut produced)));
    report(10, "width duality on 200 random matrices", run(&mut width_duality));
    report(11, "four random 5x5 RCDS patterns", run(&mut || random_patterns(&mut produced)));
    let twelve = catch_unwind(AssertUnwindSafe(|| uniqueness_and_monotonicity(&produced)))
        .unwrap_or_else(|_| Err("panicked".into()));
    report(12, "uniqueness and monotonicity", twelve);
    report(13, "Gray graph has equal permanental minors", run(&mut gray_graph));
    let fourteen = catch_unwind(zero_free_characterization).unwrap_or_else(|_| Err("panicked".into()));
    report(14, "zero-free RCDS matrices are J/n", fourteen);

    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
