//! The `diagsum` command line.
//!
//! Exit codes: 0 for an affirmative decision or plain success, 1 for a
//! negative decision, 2 for any error (one diagnostic line on stderr).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::assignment::{extreme_diagonal_sums, width_report};
use crate::construct::{
    class1, corner_block, derangement_rcds, regular_rcds, star_rcds, tridiagonal_rcds,
    two_by_two_block, two_by_two_block_circulant, uniform, zigzag, ZigZagSpec,
};
use crate::error::Error;
use crate::io::{matrix_to_json, parse_matrix, parse_pattern, pattern_to_json, rationals_to_json, Format};
use crate::matrix::{is_doubly_stochastic, RatMatrix};
use crate::oracle::{brute_diagonal_stats_with_limit, DEFAULT_LIMIT};
use crate::pattern::Pattern;
use crate::permanent::{lookalike_pattern, gray_graph_pattern, hat_matrix, permanent};
use crate::potentials::decide_rcds_pattern;
use crate::rational::{parse_rational, Rational};
use crate::search::{discover, SearchConfig};

pub const ORACLE_LIMIT_VAR: &str = "DIAGSUM_ORACLE_LIMIT";

#[derive(Parser, Debug)]
#[command(name = "diagsum", version, about = "Restricted constant diagonal sums of doubly stochastic matrices")]
struct Cli {
    /// Emit machine-readable JSON records.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a matrix is doubly stochastic with constant restricted diagonal sums.
    Check { file: PathBuf },
    /// Diagonal width: largest minus smallest restricted diagonal sum.
    Width { file: PathBuf },
    /// Decide whether a (0,1)-pattern supports an RCDS matrix, and realize it.
    Pattern { file: PathBuf },
    /// Build a matrix from one of the explicit families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Permanent, hat matrix and compatible-permutation-support verdict.
    Cps { file: PathBuf },
    /// Permanent of a (0,1)-pattern.
    Permanent { file: PathBuf },
    /// Random search for RCDS patterns.
    Search(SearchArgs),
    /// Brute-force statistics over all support diagonals.
    Oracle {
        file: PathBuf,
        /// Maximum number of diagonals to enumerate.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print the Gray graph biadjacency pattern.
    Gray {
        /// Print the cubic lookalike whose minors are not constant.
        #[arg(long)]
        lookalike: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// (1/n) J_n
    Uniform { n: usize },
    /// (1/k) A for a k-regular pattern file
    Regular { file: PathBuf, k: usize },
    /// Tridiagonal RCDS matrix of order n
    Tridiagonal { n: usize },
    /// Star with loops; infeasible for n >= 5
    Star { n: usize },
    /// Constant blocks with a lower-left zero block, 0 < s < r < n
    Corner { r: usize, s: usize, n: usize },
    /// Zig-zag staircase from a JSON spec file
    Zigzag { file: PathBuf },
    /// 2x2 block construction with k1 + k4 = k2 + k3
    Block2x2 {
        k1: usize,
        k2: usize,
        k3: usize,
        k4: usize,
        p: usize,
        /// File with four p x p patterns separated by blank lines (default: circulants).
        #[arg(long)]
        blocks: Option<PathBuf>,
    },
    /// p copies of t I_k stacked over a Gale-Ryser block
    Class1 { k: usize, t: usize, p: usize },
    /// (1/(n-1)) (J_n - I_n)
    Derangement { n: usize },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Probability of a one, as a fraction or decimal.
    #[arg(long, default_value = "1/2")]
    density: String,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

type Outcome = std::result::Result<i32, String>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Ctx<'_> {
    fn line(&mut self, text: impl AsRef<str>) -> std::result::Result<(), String> {
        writeln!(self.out, "{}", text.as_ref()).map_err(|e| e.to_string())
    }

    fn text(&mut self, text: impl AsRef<str>) -> std::result::Result<(), String> {
        write!(self.out, "{}", text.as_ref()).map_err(|e| e.to_string())
    }

    fn record(&mut self, value: Value) -> std::result::Result<(), String> {
        self.line(value.to_string())
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn read_input(path: &Path) -> std::result::Result<String, String> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_matrix(path: &Path) -> std::result::Result<RatMatrix, String> {
    let text = read_input(path)?;
    parse_matrix(&text, Format::detect(&text)).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_pattern(path: &Path) -> std::result::Result<Pattern, String> {
    let text = read_input(path)?;
    parse_pattern(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Parses arguments and runs one subcommand, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(err, "diagsum: {}", first.trim_start_matches("error: "));
                    2
                }
            };
        }
    };
    let mut ctx = Ctx { out, json: cli.json };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "diagsum: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> Outcome {
    match command {
        Command::Check { file } => check(&read_matrix(&file)?, ctx),
        Command::Width { file } => width(&read_matrix(&file)?, ctx),
        Command::Pattern { file } => pattern(&read_pattern(&file)?, ctx),
        Command::Construct { family } => construct(family, ctx),
        Command::Cps { file } => cps(&read_pattern(&file)?, ctx),
        Command::Permanent { file } => {
            let per = permanent(&read_pattern(&file)?).map_err(lib)?;
            if ctx.json {
                ctx.record(json!({ "permanent": per.to_string() }))?;
            } else {
                ctx.line(per.to_string())?;
            }
            Ok(0)
        }
        Command::Search(args) => search(args, ctx),
        Command::Oracle { file, limit } => oracle(&read_matrix(&file)?, limit, ctx),
        Command::Gray { lookalike } => {
            let g = if lookalike { lookalike_pattern() } else { gray_graph_pattern() };
            if ctx.json {
                ctx.record(json!({ "pattern": pattern_to_json(&g) }))?;
            } else {
                ctx.text(g.to_string())?;
            }
            Ok(0)
        }
    }
}

fn check(x: &RatMatrix, ctx: &mut Ctx) -> Outcome {
    let ds = is_doubly_stochastic(x).map_err(lib)?;
    if !ds {
        let (lo, hi) = extreme_diagonal_sums(x).map_err(lib)?;
        if ctx.json {
            ctx.record(json!({
                "doubly_stochastic": false,
                "rcds": false,
                "min": lo.value.to_string(),
                "max": hi.value.to_string(),
            }))?;
        } else {
            ctx.line("not doubly stochastic")?;
            ctx.line(format!("not RCDS, min = {}, max = {}", lo.value, hi.value))?;
        }
        return Ok(1);
    }
    let report = width_report(x).map_err(lib)?;
    let rcds = report.width.is_zero();
    let (lo, hi) = (&report.min_cert.value, &report.max_cert.value);
    if ctx.json {
        ctx.record(json!({
            "doubly_stochastic": true,
            "rcds": rcds,
            "sum": rcds.then(|| lo.to_string()),
            "min": lo.to_string(),
            "max": hi.to_string(),
            "width": report.width.to_string(),
        }))?;
    } else {
        ctx.line("doubly stochastic")?;
        if rcds {
            ctx.line(format!("RCDS, sum = {lo}"))?;
        } else {
            ctx.line(format!("not RCDS, min = {lo}, max = {hi}, width = {}", report.width))?;
        }
    }
    Ok(if rcds { 0 } else { 1 })
}

fn width(x: &RatMatrix, ctx: &mut Ctx) -> Outcome {
    let report = width_report(x).map_err(lib)?;
    if ctx.json {
        ctx.record(json!({
            "width": report.width.to_string(),
            "min": report.min_cert.value.to_string(),
            "max": report.max_cert.value.to_string(),
        }))?;
    } else {
        ctx.line(report.width.to_string())?;
    }
    Ok(0)
}

fn pattern(a: &Pattern, ctx: &mut Ctx) -> Outcome {
    let d = decide_rcds_pattern(a).map_err(lib)?;
    if ctx.json {
        ctx.record(json!({
            "rcds_pattern": d.is_rcds_pattern,
            "u": rationals_to_json(&d.potentials.u),
            "v": rationals_to_json(&d.potentials.v),
            "realization": d.realization.as_ref().map(matrix_to_json),
            "sum": d.constant_sum.as_ref().map(ToString::to_string),
            "violations": d.violating_positions,
        }))?;
    } else {
        ctx.line(format!("u = {}", join(&d.potentials.u)))?;
        ctx.line(format!("v = {}", join(&d.potentials.v)))?;
        match (&d.realization, &d.constant_sum) {
            (Some(x), Some(sum)) => {
                ctx.line(format!("RCDS pattern, sum = {sum}"))?;
                ctx.text(x.to_string())?;
            }
            _ => {
                let cells: Vec<String> = d.violating_positions.iter().map(|(i, j)| format!("({i}, {j})")).collect();
                ctx.line(format!("not an RCDS pattern; u + v <= 0 at {}", cells.join(" ")))?;
            }
        }
    }
    Ok(if d.is_rcds_pattern { 0 } else { 1 })
}

fn read_blocks(path: &Path) -> std::result::Result<[Pattern; 4], String> {
    let text = read_input(path)?;
    let mut chunks: Vec<String> = vec![String::new()];
    for line in text.lines() {
        if line.trim().is_empty() {
            if !chunks.last().is_some_and(String::is_empty) {
                chunks.push(String::new());
            }
        } else if !line.trim_start().starts_with('#') {
            let last = chunks.last_mut().expect("nonempty");
            last.push_str(line);
            last.push('\n');
        }
    }
    chunks.retain(|c| !c.is_empty());
    let patterns = chunks
        .iter()
        .map(|c| parse_pattern(c))
        .collect::<crate::error::Result<Vec<_>>>()
        .map_err(|e| format!("{}: {e}", path.display()))?;
    patterns
        .try_into()
        .map_err(|v: Vec<Pattern>| format!("{}: expected 4 blocks, found {}", path.display(), v.len()))
}

fn read_zigzag(path: &Path) -> std::result::Result<ZigZagSpec, String> {
    let text = read_input(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let bad = |what: &str| format!("{}: {what}", path.display());
    let blocks = value["blocks"]
        .as_array()
        .ok_or_else(|| bad("missing `blocks` array"))?
        .iter()
        .map(|b| match b.as_array().map(Vec::as_slice) {
            Some([r, s]) => match (r.as_u64(), s.as_u64()) {
                (Some(r), Some(s)) => Ok((r as usize, s as usize)),
                _ => Err(bad("block dimensions must be nonnegative integers")),
            },
            _ => Err(bad("each block must be a [rows, cols] pair")),
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let void = value["last_block_void"].as_bool().unwrap_or(false);
    match value.get("constants") {
        None | Some(Value::Null) => ZigZagSpec::with_derived_constants(blocks, void).map_err(lib),
        Some(Value::Array(items)) => {
            let constants = items
                .iter()
                .map(|c| {
                    let token = match c {
                        Value::String(s) => s.clone(),
                        Value::Number(n) if n.is_i64() => n.to_string(),
                        _ => return Err(bad("constants must be fraction strings or integers")),
                    };
                    parse_rational(&token).ok_or_else(|| bad(&format!("malformed constant `{token}`")))
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(ZigZagSpec {
                block_dims: blocks,
                constants,
                last_block_void: void,
            })
        }
        Some(_) => Err(bad("`constants` must be an array")),
    }
}

fn construct(family: Family, ctx: &mut Ctx) -> Outcome {
    let (name, x) = match family {
        Family::Uniform { n } => ("uniform", uniform(n).map_err(lib)?),
        Family::Regular { file, k } => ("regular", regular_rcds(&read_pattern(&file)?, k).map_err(lib)?),
        Family::Tridiagonal { n } => ("tridiagonal", tridiagonal_rcds(n).map_err(lib)?.matrix),
        Family::Star { n } => match star_rcds(n).map_err(lib)? {
            Some(x) => ("star", x),
            None => {
                if ctx.json {
                    ctx.record(json!({ "family": "star", "n": n, "feasible": false }))?;
                } else {
                    ctx.line("infeasible for n ≥ 5")?;
                }
                return Ok(1);
            }
        },
        Family::Corner { r, s, n } => ("corner", corner_block(r, s, n).map_err(lib)?),
        Family::Zigzag { file } => ("zigzag", zigzag(&read_zigzag(&file)?).map_err(lib)?),
        Family::Block2x2 { k1, k2, k3, k4, p, blocks } => {
            let k = [k1, k2, k3, k4];
            let x = match blocks {
                Some(path) => two_by_two_block(k, p, &read_blocks(&path)?),
                None => two_by_two_block_circulant(k, p),
            };
            ("block2x2", x.map_err(lib)?)
        }
        Family::Class1 { k, t, p } => ("class1", class1(k, t, p).map_err(lib)?),
        Family::Derangement { n } => ("derangement", derangement_rcds(n).map_err(lib)?),
    };
    if ctx.json {
        ctx.record(json!({ "family": name, "feasible": true, "matrix": matrix_to_json(&x) }))?;
    } else {
        ctx.text(x.to_string())?;
    }
    Ok(0)
}

fn cps(a: &Pattern, ctx: &mut Ctx) -> Outcome {
    let report = hat_matrix(a).map_err(lib)?;
    let gamma = report.gamma.as_ref().map(ToString::to_string);
    if ctx.json {
        ctx.record(json!({
            "permanent": report.permanent.to_string(),
            "hat": matrix_to_json(&report.hat()),
            "cps": report.is_cps(),
            "gamma": gamma,
        }))?;
    } else {
        ctx.line(format!("permanent = {}", report.permanent))?;
        ctx.text(report.hat().to_string())?;
        match gamma {
            Some(g) => ctx.line(format!("CPS, gamma = {g}"))?,
            None => ctx.line("not CPS")?,
        }
    }
    Ok(if report.is_cps() { 0 } else { 1 })
}

fn search(args: SearchArgs, ctx: &mut Ctx) -> Outcome {
    let density = parse_rational(&args.density).ok_or_else(|| format!("malformed density `{}`", args.density))?;
    let config = SearchConfig {
        n: args.n,
        density,
        trials: args.trials,
        seed: args.seed,
    };
    for d in discover(&config).map_err(lib)? {
        if ctx.json {
            ctx.record(d.to_json())?;
        } else {
            ctx.line(format!("trial {}", d.trial))?;
            ctx.text(d.matrix.to_string())?;
            ctx.line("")?;
        }
    }
    Ok(0)
}

fn oracle_limit(flag: Option<usize>) -> std::result::Result<usize, String> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(ORACLE_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{ORACLE_LIMIT_VAR} must be a nonnegative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

fn oracle(x: &RatMatrix, limit: Option<usize>, ctx: &mut Ctx) -> Outcome {
    let st = brute_diagonal_stats_with_limit(x, oracle_limit(limit)?).map_err(lib)?;
    if ctx.json {
        ctx.record(json!({
            "count": st.count,
            "min": st.min.to_string(),
            "max": st.max.to_string(),
            "all_equal": st.all_equal,
        }))?;
    } else {
        ctx.line(format!("diagonals = {}", st.count))?;
        ctx.line(format!("min = {}, max = {}", st.min, st.max))?;
        ctx.line(if st.all_equal { "all equal" } else { "not all equal" })?;
    }
    Ok(0)
}
