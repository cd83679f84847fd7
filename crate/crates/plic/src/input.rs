use std::fs;
use std::path::Path;

use pattern_catalog::Pattern;
use planar_core::{parse_graph, Graph};
use solver::Digraph;

use crate::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn parse_error(path: &Path, msg: impl ToString) -> CliError {
    CliError::Parse(path.display().to_string(), msg.to_string())
}

pub fn graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map(|t| t.graph).map_err(|e| parse_error(path, e))
}

pub fn pattern(path: &Path) -> Result<Pattern, CliError> {
    Pattern::from_graph(&graph(path)?).map_err(|e| parse_error(path, e))
}

/// Header `n m`, then `m` arc lines `u v` meaning `u -> v`; `#` starts a comment.
pub fn digraph(path: &Path) -> Result<Digraph, CliError> {
    let text = read(path)?;
    let mut rows = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });
    let mut pair = |what: &str| -> Result<(usize, usize), CliError> {
        let (ln, line) = rows.next().ok_or_else(|| parse_error(path, format!("missing {what}")))?;
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| parse_error(path, format!("line {ln}: {e}")))?;
        match nums[..] {
            [a, b] => Ok((a, b)),
            _ => Err(parse_error(path, format!("line {ln}: expected two numbers"))),
        }
    };
    let (n, m) = pair("header")?;
    let arcs = (0..m).map(|_| pair("arc")).collect::<Result<Vec<_>, _>>()?;
    Digraph::new(n, &arcs).map_err(|e| parse_error(path, e))
}
