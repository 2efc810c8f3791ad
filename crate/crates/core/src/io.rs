//! Plain-text `.bg` and `.hg` formats.
//!
//! `.bg`: first line `n m`, then `n` lines with the sorted Y-indices of each
//! X-vertex (a line may be empty). `.hg`: first line `n m`, then `m` lines
//! with the sorted vertex indices of each edge. ASCII, LF line endings.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::hypergraph::Hypergraph;

fn body_lines(text: &str) -> Vec<&str> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    if text.ends_with('\n') {
        lines.pop();
    }
    lines
}

fn parse_header(line: Option<&&str>) -> Result<(usize, usize)> {
    let line = line.ok_or_else(|| Error::Parse("missing header line".into()))?;
    let nums = parse_indices(line)?;
    match nums.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::Parse(format!("header must be two counts, got {line:?}"))),
    }
}

fn parse_indices(line: &str) -> Result<Vec<usize>> {
    line.split_ascii_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad index {t:?}"))))
        .collect()
}

fn write_list(out: &mut String, items: &[usize]) {
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

pub fn format_bg(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for row in g.rows() {
        write_list(&mut out, row);
    }
    out
}

pub fn parse_bg(text: &str) -> Result<BipartiteGraph> {
    let lines = body_lines(text);
    let (n, m) = parse_header(lines.first())?;
    if lines.len() != n + 1 {
        return Err(Error::Parse(format!("expected {n} row lines, found {}", lines.len().saturating_sub(1))));
    }
    let rows = lines[1..].iter().map(|l| parse_indices(l)).collect::<Result<Vec<_>>>()?;
    BipartiteGraph::from_rows(n, m, rows)
}

pub fn format_hg(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        write_list(&mut out, e);
    }
    out
}

pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    let lines = body_lines(text);
    let (n, m) = parse_header(lines.first())?;
    if lines.len() != m + 1 {
        return Err(Error::Parse(format!("expected {m} edge lines, found {}", lines.len().saturating_sub(1))));
    }
    let edges = lines[1..].iter().map(|l| parse_indices(l)).collect::<Result<Vec<_>>>()?;
    Hypergraph::new(n, edges)
}

pub fn read_bg(path: impl AsRef<Path>) -> Result<BipartiteGraph> {
    parse_bg(&fs::read_to_string(path)?)
}

pub fn read_hg(path: impl AsRef<Path>) -> Result<Hypergraph> {
    parse_hg(&fs::read_to_string(path)?)
}

pub fn write_bg(path: impl AsRef<Path>, g: &BipartiteGraph) -> Result<()> {
    Ok(fs::write(path, format_bg(g))?)
}

pub fn write_hg(path: impl AsRef<Path>, h: &Hypergraph) -> Result<()> {
    Ok(fs::write(path, format_hg(h))?)
}
