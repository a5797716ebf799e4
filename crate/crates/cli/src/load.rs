use std::path::Path;

use gfcodes::constructions::{paper_example, EXAMPLE_NAMES};
use gfcodes::io::{parse_code, parse_points};
use gfcodes::{LinearCode, PGPointSet, SubspaceBasis};

use crate::{CliResult, Failure};

fn read(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// A code file, or the name of a built-in example if no such file exists.
pub fn code(spec: &str) -> CliResult<LinearCode> {
    if !Path::new(spec).exists() && EXAMPLE_NAMES.contains(&spec) {
        return Ok(paper_example(spec)?);
    }
    let text = read(spec)?;
    parse_code(&text).map_err(|e| Failure::Input(format!("{spec}: {e}")))
}

pub fn points(path: &str) -> CliResult<PGPointSet> {
    let text = read(path)?;
    parse_points(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// Comma-separated list of non-negative integers.
#[derive(Clone, Debug, Default)]
pub struct List(pub Vec<usize>);

impl std::str::FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim().is_empty() {
            return Ok(List(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer")))
            .collect::<Result<_, _>>()
            .map(List)
    }
}

pub fn basis(v: &SubspaceBasis) -> String {
    let rows: Vec<String> = (0..v.dim())
        .map(|i| v.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}
