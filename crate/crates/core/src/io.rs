//! Plain-text code and point-set files.
//!
//! Code file: a header line `q k n`, then `k` rows of `n` integers in
//! `[0, q)`. Point file: a header `q k m`, then `m` rows of `k` integers.
//! Lines starting with `#` and blank lines are ignored. Only prime `q` is
//! accepted.

use crate::blocking::PGPointSet;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{is_prime, Field};
use crate::matrix::Matrix;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| Error::Parse { line, msg: format!("`{t}` is not a non-negative integer") }))
        .collect()
}

/// Header plus rows with entries below `q`. `count_first` tells whether the
/// header gives the row count before the row width.
fn parse_table(text: &str, what: &str, count_first: bool) -> Result<(Field, usize, usize, Vec<Vec<u32>>)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let h = parse_ints(hl, header)?;
    let [q, a, b] = h[..] else {
        return Err(Error::Parse { line: hl, msg: format!("header must be `q {what}`") });
    };
    if !is_prime(q) {
        return Err(Error::Parse { line: hl, msg: format!("q = {q} must be prime") });
    }
    let field = Field::prime(q)?;
    let (count, width) = if count_first { (a as usize, b as usize) } else { (b as usize, a as usize) };
    let mut rows = Vec::with_capacity(count);
    for (ln, l) in lines {
        if rows.len() == count {
            return Err(Error::Parse { line: ln, msg: format!("more than {count} rows") });
        }
        let r = parse_ints(ln, l)?;
        if r.len() != width {
            return Err(Error::Parse { line: ln, msg: format!("expected {width} entries, found {}", r.len()) });
        }
        if let Some(&x) = r.iter().find(|&&x| x >= q) {
            return Err(Error::Parse { line: ln, msg: format!("entry {x} is not in [0, {q})") });
        }
        rows.push(r);
    }
    if rows.len() != count {
        return Err(Error::Parse { line: 0, msg: format!("expected {count} rows, found {}", rows.len()) });
    }
    Ok((field, count, width, rows))
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let (field, k, n, rows) = parse_table(text, "k n", true)?;
    if k == 0 || n == 0 {
        return Err(Error::Parse { line: 1, msg: "a code needs k >= 1 and n >= 1".into() });
    }
    LinearCode::from_generator(&Matrix::from_rows(&field, &rows)?)
}

/// Canonical code file for the input matrix of `code` (reduced generator if
/// the input rows were dependent).
pub fn emit_code(code: &LinearCode) -> String {
    let m = if code.had_dependent_rows() { code.generator() } else { code.original() };
    emit_matrix_with_header(m)
}

fn emit_matrix_with_header(m: &Matrix) -> String {
    let mut out = format!("{} {} {}\n", m.field().q(), m.rows(), m.cols());
    out.push_str(&emit_matrix(m));
    out
}

/// Rows of `m`, single-space separated.
pub fn emit_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_points(text: &str) -> Result<PGPointSet> {
    let (field, _, k, rows) = parse_table(text, "k m", false)?;
    if k == 0 {
        return Err(Error::Parse { line: 1, msg: "k must be positive".into() });
    }
    let pts: Vec<Vec<u16>> = rows.iter().map(|r| r.iter().map(|&x| x as u16).collect()).collect();
    PGPointSet::new(&field, k, &pts)
}

pub fn emit_points(b: &PGPointSet) -> String {
    let mut out = format!("{} {} {}\n", b.field().q(), b.k(), b.len());
    for p in b.points() {
        let row: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
