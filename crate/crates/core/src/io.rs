//! Text formats for matrices and patterns.
//!
//! Plain matrices are whitespace-separated tokens, one row per line. JSON
//! matrices are `{"n": 3, "rows": [["1/2", ...], ...]}`. Patterns are rows of
//! `0`/`1` characters, optionally separated by whitespace. Blank lines and
//! lines starting with `#` are ignored in the plain formats.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::pattern::Pattern;
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
}

impl Format {
    /// JSON if the first non-blank character is `{`, plain otherwise.
    pub fn detect(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Plain
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_matrix(text: &str, format: Format) -> Result<RatMatrix> {
    match format {
        Format::Plain => parse_plain(text),
        Format::Json => parse_json(text),
    }
}

fn parse_plain(text: &str) -> Result<RatMatrix> {
    let mut n_cols = None;
    let mut n_rows = 0;
    let mut entries = Vec::new();
    for (line, content) in content_lines(text) {
        let row = content
            .split_whitespace()
            .map(|tok| {
                parse_rational(tok).ok_or_else(|| Error::MalformedToken {
                    line,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let expected = *n_cols.get_or_insert(row.len());
        if row.len() != expected {
            return Err(Error::RaggedRows {
                line,
                expected,
                found: row.len(),
            });
        }
        entries.extend(row);
        n_rows += 1;
    }
    match n_cols {
        None => Err(Error::EmptyInput),
        Some(n_cols) => RatMatrix::from_entries(n_rows, n_cols, entries),
    }
}

fn json_token(value: &Value, row: usize) -> Result<Rational> {
    let bad = || Error::MalformedToken {
        line: row + 1,
        token: value.to_string(),
    };
    match value {
        Value::String(s) => parse_rational(s).ok_or_else(bad),
        // Only integral JSON numbers are exact; decimals must be quoted.
        Value::Number(num) if num.is_i64() || num.is_u64() => {
            parse_rational(&num.to_string()).ok_or_else(bad)
        }
        _ => Err(bad()),
    }
}

fn parse_json(text: &str) -> Result<RatMatrix> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let rows = doc
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing `rows` array".into()))?;
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing integer `n`".into()))? as usize;
    let n_cols = match doc.get("n_cols") {
        None => n,
        Some(v) => v
            .as_u64()
            .ok_or_else(|| Error::Json("`n_cols` must be an integer".into()))? as usize,
    };
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    if rows.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rows.len(),
        });
    }
    let mut entries = Vec::with_capacity(n * n_cols);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Json(format!("row {i} is not an array")))?;
        if row.len() != n_cols {
            return Err(Error::RaggedRows {
                line: i + 1,
                expected: n_cols,
                found: row.len(),
            });
        }
        for value in row {
            entries.push(json_token(value, i)?);
        }
    }
    RatMatrix::from_entries(n, n_cols, entries)
}

/// Lowest-terms fractions; integers print without a denominator.
pub fn serialize_matrix(x: &RatMatrix, format: Format) -> String {
    match format {
        Format::Plain => x.to_string(),
        Format::Json => matrix_to_json(x).to_string(),
    }
}

/// The JSON form of a matrix. Non-square matrices carry `n_cols` as well.
pub fn matrix_to_json(x: &RatMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..x.n_rows())
        .map(|i| x.row(i).iter().map(ToString::to_string).collect())
        .collect();
    if x.is_square() {
        json!({ "n": x.n_rows(), "rows": rows })
    } else {
        json!({ "n": x.n_rows(), "n_cols": x.n_cols(), "rows": rows })
    }
}

pub fn rationals_to_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn parse_pattern(text: &str) -> Result<Pattern> {
    let mut n_cols = None;
    let mut n_rows = 0;
    let mut bits = Vec::new();
    for (line, content) in content_lines(text) {
        let mut row = Vec::new();
        for ch in content.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                other => {
                    return Err(Error::MalformedToken {
                        line,
                        token: other.to_string(),
                    })
                }
            }
        }
        let expected = *n_cols.get_or_insert(row.len());
        if row.len() != expected {
            return Err(Error::RaggedRows {
                line,
                expected,
                found: row.len(),
            });
        }
        bits.extend(row);
        n_rows += 1;
    }
    match n_cols {
        None => Err(Error::EmptyInput),
        Some(n_cols) => Pattern::from_bits(n_rows, n_cols, bits),
    }
}

pub fn serialize_pattern(a: &Pattern) -> String {
    a.to_string()
}

pub fn pattern_to_json(a: &Pattern) -> Value {
    Value::Array(
        (0..a.n_rows())
            .map(|i| {
                Value::String(a.row(i).iter().map(|&b| if b { '1' } else { '0' }).collect())
            })
            .collect(),
    )
}
