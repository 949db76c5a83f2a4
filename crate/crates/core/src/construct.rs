//! Explicit families of RCDS doubly stochastic matrices, plus Gale–Ryser
//! realization of (0,1)-matrices with prescribed line sums.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{is_doubly_stochastic, RatMatrix};
use crate::pattern::Pattern;
use crate::rational::{int, rat, Rational};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn recip(n: usize) -> Rational {
    Rational::new(1.into(), n.into())
}

/// `(1/n) J_n`.
pub fn uniform(n: usize) -> Result<RatMatrix> {
    if n == 0 {
        return Err(invalid("order must be positive"));
    }
    Ok(RatMatrix::from_pattern(&Pattern::ones(n), &recip(n)))
}

/// `(1/k) A` for a square pattern with exactly `k` ones in every line.
pub fn regular_rcds(a: &Pattern, k: usize) -> Result<RatMatrix> {
    a.order()?;
    if k == 0 || !a.is_regular(k) {
        return Err(Error::NotRegular(k));
    }
    Ok(RatMatrix::from_pattern(a, &recip(k)))
}

/// The tridiagonal realization together with the data of its elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiagonal {
    pub matrix: RatMatrix,
    /// Off-diagonal entries `x_1, ..., x_{n-1}`.
    pub x: Vec<Rational>,
    /// Pivots `h_1, ..., h_{n-1}` of the forward elimination.
    pub pivots: Vec<Rational>,
}

/// Solves `x_{i-1} + 4 x_i + x_{i+1} = 2` for `i = 1..n-1` with
/// `x_0 = x_n = 0` and assembles the symmetric tridiagonal matrix with
/// off-diagonal `x` and diagonal `1 - x_{i-1} - x_i`.
pub fn tridiagonal_rcds(n: usize) -> Result<Tridiagonal> {
    if n < 2 {
        return Err(invalid("tridiagonal family needs n >= 2"));
    }
    let m = n - 1;
    let (two, four) = (int(2), int(4));
    let mut pivots: Vec<Rational> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for i in 0..m {
        let (h, f) = match i {
            0 => (four.clone(), rat(1, 2)),
            _ => {
                let h = &four - pivots[i - 1].recip();
                let f = (&two - &rhs[i - 1]) / &h;
                (h, f)
            }
        };
        pivots.push(h);
        rhs.push(f);
    }
    let mut x = vec![Rational::zero(); m];
    x[m - 1] = rhs[m - 1].clone();
    for i in (0..m - 1).rev() {
        x[i] = &rhs[i] - &x[i + 1] / &pivots[i];
    }
    if n >= 3 {
        let (lo_h, hi_h) = (rat(37, 10), rat(15, 4));
        let (lo_x, hi_x) = (rat(1, 5), rat(1, 2));
        assert!(pivots[1..].iter().all(|h| &lo_h < h && h <= &hi_h));
        assert!(x.iter().all(|v| &lo_x < v && v < &hi_x));
    }
    let at = |i: usize| if i == 0 || i == n { Rational::zero() } else { x[i - 1].clone() };
    let matrix = RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::one() - at(i) - at(i + 1)
        } else if j == i + 1 {
            at(j)
        } else if i == j + 1 {
            at(i)
        } else {
            Rational::zero()
        }
    });
    Ok(Tridiagonal { matrix, x, pivots })
}

/// The symmetric star-with-loops matrix with `x_i = 2/(n+2)`, or `None`
/// when its `(1,1)` entry would be negative (`n >= 5`).
pub fn star_rcds(n: usize) -> Result<Option<RatMatrix>> {
    if n < 2 {
        return Err(invalid("star family needs n >= 2"));
    }
    let x = rat(2, n as i64 + 2);
    let corner = Rational::one() - &x * int(n as i64 - 1);
    if corner < Rational::zero() {
        return Ok(None);
    }
    Ok(Some(RatMatrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => corner.clone(),
        (0, _) | (_, 0) => x.clone(),
        _ if i == j => Rational::one() - &x,
        _ => Rational::zero(),
    })))
}

/// Four constant blocks with an `(n-r) x s` zero block in the lower left.
pub fn corner_block(r: usize, s: usize, n: usize) -> Result<RatMatrix> {
    if !(0 < s && s < r && r < n) {
        return Err(invalid(format!("corner block needs 0 < s < r < n, got r={r} s={s} n={n}")));
    }
    let top_left = recip(r);
    let top_right = Rational::new((r - s).into(), (r * (n - s)).into());
    let bottom_right = recip(n - s);
    Ok(RatMatrix::from_fn(n, n, |i, j| match (i < r, j < s) {
        (true, true) => top_left.clone(),
        (true, false) => top_right.clone(),
        (false, true) => Rational::zero(),
        (false, false) => bottom_right.clone(),
    }))
}

/// A staircase of constant blocks `X_1, ..., X_{k+1}`: row band `m` holds
/// `X_{2m-1}` and `X_{2m}`, column band `c` holds `X_{2c-2}` and `X_{2c-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigZagSpec {
    /// `(rows, cols)` of each block, in order. The void last block is omitted.
    pub block_dims: Vec<(usize, usize)>,
    pub constants: Vec<Rational>,
    pub last_block_void: bool,
}

/// Band sizes of a zig-zag layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigZagLayout {
    pub heights: Vec<usize>,
    pub widths: Vec<usize>,
}

impl ZigZagLayout {
    pub fn order(&self) -> usize {
        self.heights.iter().sum()
    }

    fn row_band(b: usize) -> usize {
        b / 2
    }

    fn col_band(b: usize) -> usize {
        b.div_ceil(2)
    }
}

impl ZigZagSpec {
    /// Checks shapes and the interleaving `W_t < H_t < W_{t+1}` of cumulative
    /// band heights `H` and widths `W`, and that the assembly is square.
    pub fn layout(&self) -> Result<ZigZagLayout> {
        let dims = &self.block_dims;
        let count = dims.len();
        if count == 0 {
            return Err(invalid("zig-zag needs at least one block"));
        }
        if (count % 2 == 1) != self.last_block_void {
            return Err(invalid(if self.last_block_void {
                "with a void last block the block count must be odd"
            } else {
                "without a void last block the block count must be even"
            }));
        }
        if dims.iter().any(|&(r, s)| r == 0 || s == 0) {
            return Err(invalid("zig-zag blocks must be nonempty"));
        }
        let bands = count.div_ceil(2);
        let mut heights = vec![0; bands];
        let mut widths = vec![0; count / 2 + 1];
        for (b, &(r, s)) in dims.iter().enumerate() {
            for (slot, value, what) in [
                (&mut heights[ZigZagLayout::row_band(b)], r, "rows"),
                (&mut widths[ZigZagLayout::col_band(b)], s, "columns"),
            ] {
                if *slot != 0 && *slot != value {
                    return Err(invalid(format!("block {} disagrees with its band on {what}", b + 1)));
                }
                *slot = value;
            }
        }
        let (mut h, mut w) = (0, widths[0]);
        for t in 0..bands - 1 {
            h += heights[t];
            let w_next = w + widths[t + 1];
            if !(w < h && h < w_next) {
                return Err(invalid(format!("dimension condition fails at band {}", t + 1)));
            }
            w = w_next;
        }
        let layout = ZigZagLayout { heights, widths };
        let n_cols: usize = layout.widths.iter().sum();
        if layout.order() != n_cols {
            return Err(invalid(format!("assembly is {}x{n_cols}, not square", layout.order())));
        }
        Ok(layout)
    }

    /// Fills in the unique constants making every line sum 1, walking the
    /// staircase block by block. Fails if some constant is not positive or
    /// the final band does not close.
    pub fn with_derived_constants(block_dims: Vec<(usize, usize)>, last_block_void: bool) -> Result<Self> {
        let mut spec = ZigZagSpec {
            block_dims,
            constants: Vec::new(),
            last_block_void,
        };
        let layout = spec.layout()?;
        let (h, w) = (&layout.heights, &layout.widths);
        let mut c: Vec<Rational> = Vec::with_capacity(spec.block_dims.len());
        for b in 0..spec.block_dims.len() {
            let value = if b == 0 {
                recip(h[0])
            } else if b % 2 == 1 {
                let m = ZigZagLayout::row_band(b);
                (Rational::one() - &c[b - 1] * int(w[m] as i64)) / int(w[m + 1] as i64)
            } else {
                let col = ZigZagLayout::col_band(b);
                (Rational::one() - &c[b - 1] * int(h[col - 1] as i64)) / int(h[col] as i64)
            };
            if value <= Rational::zero() {
                return Err(invalid(format!("derived constant of block {} is not positive", b + 1)));
            }
            c.push(value);
        }
        spec.constants = c;
        spec.assemble(&layout)?;
        Ok(spec)
    }

    fn assemble(&self, layout: &ZigZagLayout) -> Result<RatMatrix> {
        let n = layout.order();
        let starts = |sizes: &[usize]| {
            sizes
                .iter()
                .scan(0, |acc, &s| {
                    let start = *acc;
                    *acc += s;
                    Some(start)
                })
                .collect::<Vec<_>>()
        };
        let (row_start, col_start) = (starts(&layout.heights), starts(&layout.widths));
        let mut x = RatMatrix::zeros(n, n);
        for (b, c) in self.constants.iter().enumerate() {
            let (rb, cb) = (ZigZagLayout::row_band(b), ZigZagLayout::col_band(b));
            for i in row_start[rb]..row_start[rb] + layout.heights[rb] {
                for j in col_start[cb]..col_start[cb] + layout.widths[cb] {
                    x[(i, j)] = c.clone();
                }
            }
        }
        if !is_doubly_stochastic(&x)? {
            return Err(Error::LineSumsNotOne);
        }
        Ok(x)
    }
}

/// Assembles a zig-zag matrix after validating its layout, the positivity of
/// its constants and its line sums.
pub fn zigzag(spec: &ZigZagSpec) -> Result<RatMatrix> {
    let layout = spec.layout()?;
    if spec.constants.len() != spec.block_dims.len() {
        return Err(Error::DimensionMismatch {
            expected: spec.block_dims.len(),
            found: spec.constants.len(),
        });
    }
    if spec.constants.iter().any(|c| c <= &Rational::zero()) {
        return Err(invalid("zig-zag constants must be positive"));
    }
    spec.assemble(&layout)
}

/// Sub-patterns of the order-10 example with `k = (1, 2, 3, 4)`, `p = 5`.
pub fn example_block_patterns() -> [Pattern; 4] {
    [
        Pattern::from_rows(&[
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [1, 0, 0, 0, 0],
        ]),
        Pattern::from_rows(&[
            [0, 1, 1, 0, 0],
            [0, 1, 0, 0, 1],
            [1, 0, 0, 1, 0],
            [0, 0, 0, 1, 1],
            [1, 0, 1, 0, 0],
        ]),
        Pattern::from_rows(&[
            [0, 1, 1, 1, 0],
            [1, 1, 0, 0, 1],
            [1, 0, 1, 0, 1],
            [0, 0, 1, 1, 1],
            [1, 1, 0, 1, 0],
        ]),
        Pattern::from_rows(&[
            [1, 1, 0, 1, 1],
            [0, 1, 1, 1, 1],
            [1, 1, 1, 0, 1],
            [1, 0, 1, 1, 1],
            [1, 1, 1, 1, 0],
        ]),
    ]
}

/// `2 x 2` block pattern `[[A1, A2], [A3, A4]]` with `A_i` being
/// `k_i`-regular of order `p`; requires `k1 + k4 = k2 + k3`. Blocks carry the
/// values `k4, k3, k2, k1`, scaled by `1/(k1 k4 + k2 k3)`.
pub fn two_by_two_block(k: [usize; 4], p: usize, sub_patterns: &[Pattern; 4]) -> Result<RatMatrix> {
    if k[0] + k[3] != k[1] + k[2] {
        return Err(invalid(format!(
            "balance condition fails: {} + {} != {} + {}",
            k[0], k[3], k[1], k[2]
        )));
    }
    let alpha = k[0] * k[3] + k[1] * k[2];
    if p == 0 || alpha == 0 || k.iter().any(|&ki| ki > p) {
        return Err(invalid(format!("need 0 < k_i <= p and k1 k4 + k2 k3 > 0, got k={k:?} p={p}")));
    }
    for (a, &ki) in sub_patterns.iter().zip(&k) {
        if a.n_rows() != p || a.n_cols() != p {
            return Err(Error::DimensionMismatch {
                expected: p,
                found: a.n_rows().max(a.n_cols()),
            });
        }
        if !a.is_regular(ki) {
            return Err(Error::NotRegular(ki));
        }
    }
    let values = [k[3], k[2], k[1], k[0]].map(|v| Rational::new(v.into(), alpha.into()));
    Ok(RatMatrix::from_fn(2 * p, 2 * p, |i, j| {
        let b = 2 * (i / p) + j / p;
        if sub_patterns[b].get(i % p, j % p) {
            values[b].clone()
        } else {
            Rational::zero()
        }
    }))
}

/// [`two_by_two_block`] with circulant sub-patterns.
pub fn two_by_two_block_circulant(k: [usize; 4], p: usize) -> Result<RatMatrix> {
    two_by_two_block(k, p, &k.map(|ki| Pattern::circulant(p, ki)))
}

/// `S` is majorized by the conjugate of `R`; with equal totals this is the
/// Gale–Ryser criterion for a (0,1)-matrix with row sums `R`, column sums `S`.
pub fn gale_ryser_feasible(r: &[usize], s: &[usize]) -> bool {
    if r.iter().sum::<usize>() != s.iter().sum::<usize>() {
        return false;
    }
    let mut s_sorted = s.to_vec();
    s_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let (mut lhs, mut rhs) = (0, 0);
    for (k, sk) in s_sorted.iter().enumerate() {
        lhs += sk;
        rhs += r.iter().filter(|&&ri| ri > k).count();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Greedy column filling: columns in nonincreasing order of demand, each
/// taking the rows with the largest remaining demand (ties by index).
pub fn gale_ryser(r: &[usize], s: &[usize]) -> Result<Option<Pattern>> {
    let (total_r, total_s) = (r.iter().sum::<usize>(), s.iter().sum::<usize>());
    if total_r != total_s {
        return Err(invalid(format!("row total {total_r} differs from column total {total_s}")));
    }
    if !gale_ryser_feasible(r, s) {
        return Ok(None);
    }
    let mut remaining = r.to_vec();
    let mut a = Pattern::zeros(r.len(), s.len());
    let mut cols: Vec<usize> = (0..s.len()).collect();
    cols.sort_by(|&x, &y| s[y].cmp(&s[x]).then(x.cmp(&y)));
    for j in cols {
        let mut rows: Vec<usize> = (0..r.len()).filter(|&i| remaining[i] > 0).collect();
        if rows.len() < s[j] {
            return Ok(None);
        }
        rows.sort_by(|&x, &y| remaining[y].cmp(&remaining[x]).then(x.cmp(&y)));
        for &i in &rows[..s[j]] {
            a.set(i, j, true);
            remaining[i] -= 1;
        }
    }
    Ok(Some(a))
}

/// `(1/(tp)) [t I_k ... t I_k ; A]` with `n = kp` and `A` a Gale–Ryser
/// realization of row sums `tp` and column sums `t(p-1)`.
pub fn class1(k: usize, t: usize, p: usize) -> Result<RatMatrix> {
    if k == 0 || t == 0 || p == 0 || t > k {
        return Err(invalid(format!("need 1 <= t <= k and p >= 1, got k={k} t={t} p={p}")));
    }
    let n = k * p;
    let a = gale_ryser(&vec![t * p; n - k], &vec![t * (p - 1); n])?
        .expect("constant line sums are always realizable here");
    let (top, bottom) = (Rational::new(1.into(), p.into()), Rational::new(1.into(), (t * p).into()));
    Ok(RatMatrix::from_fn(n, n, |i, j| {
        if i < k {
            if j % k == i { top.clone() } else { Rational::zero() }
        } else if a.get(i - k, j) {
            bottom.clone()
        } else {
            Rational::zero()
        }
    }))
}

/// `(1/(n-1)) (J_n - I_n)`: the normalized sum of all derangement matrices.
pub fn derangement_rcds(n: usize) -> Result<RatMatrix> {
    if n < 2 {
        return Err(invalid("derangement family needs n >= 2"));
    }
    let a = Pattern::from_fn(n, n, |i, j| i != j);
    Ok(RatMatrix::from_pattern(&a, &recip(n - 1)))
}
