//! Line-based graph text format.
//!
//! ```text
//! # comment
//! p <n> <m>          header; m counts the `e` lines
//! e <u> <v> [mult]   non-loop edge, multiplicity defaults to 1
//! l <v> <count>      loops at v
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn num(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| perr(line, format!("expected non-negative integer for {what}, found `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    let mut edge_lines = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(&kind) = toks.first() else { continue };
        match kind {
            "p" => {
                if graph.is_some() {
                    return Err(perr(line, "duplicate header"));
                }
                if toks.len() != 3 {
                    return Err(perr(line, "malformed header, expected `p <n> <m>`"));
                }
                let n = num(toks[1], line, "vertex count")?;
                declared_edges = num(toks[2], line, "edge count")?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph.as_mut().ok_or_else(|| perr(line, "edge before header"))?;
                if toks.len() != 3 && toks.len() != 4 {
                    return Err(perr(line, "malformed edge, expected `e <u> <v> [mult]`"));
                }
                let u = num(toks[1], line, "endpoint")?;
                let v = num(toks[2], line, "endpoint")?;
                let mult = match toks.get(3) {
                    Some(t) => num(t, line, "multiplicity")?,
                    None => 1,
                };
                if u >= g.n() || v >= g.n() {
                    return Err(perr(line, format!("vertex id out of range 0..{}", g.n())));
                }
                if u == v {
                    return Err(perr(line, "edge endpoints coincide; use `l <v> <count>` for loops"));
                }
                if mult == 0 {
                    return Err(perr(line, "edge multiplicity must be at least 1"));
                }
                g.add_edge_mult(u, v, mult).map_err(|e| perr(line, e.to_string()))?;
                edge_lines += 1;
            }
            "l" => {
                let g = graph.as_mut().ok_or_else(|| perr(line, "loop before header"))?;
                if toks.len() != 3 {
                    return Err(perr(line, "malformed loop, expected `l <v> <count>`"));
                }
                let v = num(toks[1], line, "vertex")?;
                let count = num(toks[2], line, "loop count")?;
                if v >= g.n() {
                    return Err(perr(line, format!("vertex id out of range 0..{}", g.n())));
                }
                g.add_loops(v, count).map_err(|e| perr(line, e.to_string()))?;
            }
            other => return Err(perr(line, format!("unknown line type `{other}`"))),
        }
    }

    let graph = graph.ok_or_else(|| perr(last_line.max(1), "missing header `p <n> <m>`"))?;
    if edge_lines != declared_edges {
        return Err(perr(
            last_line.max(1),
            format!("header declares {declared_edges} edge lines, found {edge_lines}"),
        ));
    }
    Ok(graph)
}

/// Canonical text: edges sorted by `(min id, max id)`, then loops by id.
pub fn serialize_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.n(), edges.len());
    for (u, v, m) in edges {
        if m == 1 {
            let _ = writeln!(out, "e {u} {v}");
        } else {
            let _ = writeln!(out, "e {u} {v} {m}");
        }
    }
    for (v, c) in g.loop_entries() {
        let _ = writeln!(out, "l {v} {c}");
    }
    out
}
