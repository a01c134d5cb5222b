//! Text formats: the edge-list format (`n m` header then one `u v` line per
//! edge) and the orientation format (edge-list header followed by one
//! `i tail head` line per edge index). Parse errors carry line numbers.

use crate::graph::Graph;
use crate::toric::OrientedGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("unexpected end of input: {0}")]
    Truncated(String),
}

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn parse_usize(tok: &str, lineno: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::Line(lineno, format!("bad {what}: {tok:?}")))
}

/// Lines of the input with their 1-based numbers, comments (#) and blanks
/// removed.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Edge-list format: first line `n m`, then m lines `u v` with 0-based
/// endpoints. Duplicate and loop lines are rejected with their line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let lines = content_lines(text);
    let Some(&(l0, header)) = lines.first() else {
        return Err(ParseError::Truncated("missing `n m` header".into()));
    };
    let toks = tokens(header);
    if toks.len() != 2 {
        return Err(ParseError::Line(l0, "header must be `n m`".into()));
    }
    let n = parse_usize(toks[0], l0, "vertex count")?;
    let m = parse_usize(toks[1], l0, "edge count")?;
    if lines.len() != 1 + m {
        return Err(ParseError::Truncated(format!(
            "expected {m} edge lines, found {}",
            lines.len() - 1
        )));
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for &(ln, line) in &lines[1..] {
        let toks = tokens(line);
        if toks.len() != 2 {
            return Err(ParseError::Line(ln, "edge line must be `u v`".into()));
        }
        let u = parse_usize(toks[0], ln, "endpoint")?;
        let v = parse_usize(toks[1], ln, "endpoint")?;
        if u == v {
            return Err(ParseError::Line(ln, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(ParseError::Line(ln, format!("endpoint out of range 0..{n}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::Line(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges).map_err(|e| ParseError::Line(l0, e.to_string()))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Orientation format: the base edge-list header and edges, then one line
/// `i tail head` per edge index i (each index exactly once, any order).
pub fn parse_orientation(text: &str) -> Result<OrientedGraph, ParseError> {
    let lines = content_lines(text);
    let Some(&(l0, header)) = lines.first() else {
        return Err(ParseError::Truncated("missing `n m` header".into()));
    };
    let toks = tokens(header);
    if toks.len() != 2 {
        return Err(ParseError::Line(l0, "header must be `n m`".into()));
    }
    let m = parse_usize(toks[1], l0, "edge count")?;
    if lines.len() != 1 + 2 * m {
        return Err(ParseError::Truncated(format!(
            "expected {m} edge lines and {m} orientation lines"
        )));
    }
    let base_text: String = lines[..1 + m]
        .iter()
        .map(|&(_, l)| format!("{l}\n"))
        .collect();
    let base = parse_edge_list(&base_text)?;
    let mut dirs: Vec<Option<(usize, usize)>> = vec![None; m];
    for &(ln, line) in &lines[1 + m..] {
        let toks = tokens(line);
        if toks.len() != 3 {
            return Err(ParseError::Line(ln, "orientation line must be `i tail head`".into()));
        }
        let i = parse_usize(toks[0], ln, "edge index")?;
        let t = parse_usize(toks[1], ln, "tail")?;
        let h = parse_usize(toks[2], ln, "head")?;
        if i >= m {
            return Err(ParseError::Line(ln, format!("edge index {i} out of range 0..{m}")));
        }
        if dirs[i].is_some() {
            return Err(ParseError::Line(ln, format!("edge index {i} given twice")));
        }
        let (u, v) = base.edges()[i];
        if (t, h) != (u, v) && (t, h) != (v, u) {
            return Err(ParseError::Line(
                ln,
                format!("edge {i} is {{{u}, {v}}}, cannot be oriented {t} -> {h}"),
            ));
        }
        dirs[i] = Some((t, h));
    }
    let directions: Vec<(usize, usize)> = dirs
        .into_iter()
        .map(|d| d.expect("each index appears once by counting"))
        .collect();
    OrientedGraph::new(base, &directions)
        .map_err(|e| ParseError::Line(l0, e.to_string()))
}

pub fn format_orientation(d: &OrientedGraph) -> String {
    let mut out = format_edge_list(d.base());
    for (i, (t, h)) in d.directions().into_iter().enumerate() {
        out.push_str(&format!("{i} {t} {h}\n"));
    }
    out
}
