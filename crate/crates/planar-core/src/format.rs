//! Graph text format: `n m`, then `m` lines `u v` (`u < v`), then optionally a line
//! `embedding` followed by `n` rotation lines. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::plane::PlaneGraph;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed graph with its optional rotation system.
#[derive(Clone, Debug)]
pub struct GraphText {
    pub graph: Graph,
    pub rotation: Option<Vec<Vec<usize>>>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| ParseError::Syntax { line: line_no, msg: format!("not a vertex index: {tok:?}") })
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<GraphText, ParseError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| ParseError::Truncated("missing header".into()))?;
    let head = numbers(ln, header)?;
    let [n, m] = head[..] else {
        return Err(ParseError::Syntax { line: ln, msg: "header must be `n m`".into() });
    };
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines.next().ok_or_else(|| ParseError::Truncated(format!("expected {m} edges")))?;
        let nums = numbers(ln, line)?;
        let [u, v] = nums[..] else {
            return Err(ParseError::Syntax { line: ln, msg: "edge line must be `u v`".into() });
        };
        if u >= v || v >= n {
            return Err(ParseError::Syntax { line: ln, msg: format!("edge {u} {v} needs 0 <= u < v < {n}") });
        }
        edges.push((u, v));
    }
    let graph = Graph::from_edges(n, &edges)?;
    let rotation = match lines.next() {
        None => None,
        Some((_, "embedding")) => {
            let mut rot = Vec::with_capacity(n);
            for v in 0..n {
                let (ln, line) = lines.next().ok_or_else(|| ParseError::Truncated(format!("rotation of vertex {v}")))?;
                rot.push(numbers(ln, line)?);
            }
            if let Some((ln, _)) = lines.next() {
                return Err(ParseError::Syntax { line: ln, msg: "trailing content".into() });
            }
            Some(rot)
        }
        Some((ln, _)) => return Err(ParseError::Syntax { line: ln, msg: "expected `embedding` or end".into() }),
    };
    Ok(GraphText { graph, rotation })
}

/// Writes a graph, with its rotation system when given.
pub fn write_graph(g: &Graph, rotation: Option<&PlaneGraph>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(pg) = rotation {
        out.push_str("embedding\n");
        for v in 0..pg.n() {
            let row: Vec<String> = pg.rotation(v).iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}
