//! Bipartite graphs with parts `X` and `Y` stored as dense per-part indices.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cycle::AltCycle;
use crate::error::{Error, Result};

/// A vertex reference. `X` and `Y` are disjoint index spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl Vertex {
    pub fn is_x(self) -> bool {
        matches!(self, Vertex::X(_))
    }

    pub fn is_y(self) -> bool {
        matches!(self, Vertex::Y(_))
    }

    pub fn index(self) -> usize {
        match self {
            Vertex::X(i) | Vertex::Y(i) => i,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::X(i) => write!(f, "x{i}"),
            Vertex::Y(i) => write!(f, "y{i}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad vertex token {s:?}"));
        let (head, tail) = s.split_at(s.len().min(1));
        let idx: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "x" | "X" => Ok(Vertex::X(idx)),
            "y" | "Y" => Ok(Vertex::Y(idx)),
            _ => Err(bad()),
        }
    }
}

/// One broken invariant found by [`BipartiteGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RowCount { expected: usize, found: usize },
    OutOfRange { x: usize, y: usize },
    Duplicate { x: usize, y: usize },
    Unsorted { x: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowCount { expected, found } => {
                write!(f, "expected {expected} X-rows, found {found}")
            }
            Violation::OutOfRange { x, y } => write!(f, "x{x} lists out-of-range neighbor y{y}"),
            Violation::Duplicate { x, y } => write!(f, "x{x} lists y{y} more than once"),
            Violation::Unsorted { x } => write!(f, "row of x{x} is not sorted"),
        }
    }
}

/// A bipartite graph with `n` X-vertices and `m` Y-vertices.
///
/// Values are immutable once built; every constructor produces a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph({}x{}; {:?})", self.n, self.m, self.rows)
    }
}

impl BipartiteGraph {
    /// Builds a graph from per-X neighbor lists, rejecting anything that
    /// fails [`validate`](Self::validate).
    pub fn from_rows(n: usize, m: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let g = Self::from_rows_unchecked(n, m, rows);
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(Error::InvalidGraph(violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))
        }
    }

    /// Stores the rows as given. Out-of-range entries are kept in the rows
    /// (so `validate` can report them) but ignored by adjacency queries.
    pub fn from_rows_unchecked(n: usize, m: usize, rows: Vec<Vec<usize>>) -> Self {
        let mut cols = vec![Vec::new(); m];
        let mut matrix = vec![false; n * m];
        for (x, row) in rows.iter().enumerate().take(n) {
            for &y in row {
                if y < m && !matrix[x * m + y] {
                    matrix[x * m + y] = true;
                    cols[y].push(x);
                }
            }
        }
        Self { n, m, rows, cols, matrix }
    }

    /// Normalizing constructor: sorts rows and drops duplicate edges.
    pub fn from_edges(n: usize, m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![Vec::new(); n];
        for (x, y) in edges {
            if x >= n || y >= m {
                return Err(Error::InvalidGraph(format!("edge (x{x}, y{y}) out of range for {n}x{m}")));
            }
            rows[x].push(y);
        }
        for row in &mut rows {
            row.sort_unstable();
            row.dedup();
        }
        Self::from_rows(n, m, rows)
    }

    pub fn complete(n: usize, m: usize) -> Self {
        Self::from_rows_unchecked(n, m, vec![(0..m).collect(); n])
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.rows.len() != self.n {
            out.push(Violation::RowCount { expected: self.n, found: self.rows.len() });
        }
        for (x, row) in self.rows.iter().enumerate() {
            let mut sorted = true;
            for (i, &y) in row.iter().enumerate() {
                if y >= self.m {
                    out.push(Violation::OutOfRange { x, y });
                }
                if row[..i].contains(&y) {
                    out.push(Violation::Duplicate { x, y });
                } else if i > 0 && row[i - 1] > y {
                    sorted = false;
                }
            }
            if !sorted {
                out.push(Violation::Unsorted { x });
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n + self.m
    }

    pub fn edge_count(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Y-neighbors of an X-vertex, sorted.
    pub fn x_neighbors(&self, x: usize) -> &[usize] {
        &self.rows[x]
    }

    /// X-neighbors of a Y-vertex, sorted.
    pub fn y_neighbors(&self, y: usize) -> &[usize] {
        &self.cols[y]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.n && y < self.m && self.matrix[x * self.m + y]
    }

    /// Adjacency between two vertex references; same-part pairs are never adjacent.
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        match (a, b) {
            (Vertex::X(x), Vertex::Y(y)) | (Vertex::Y(y), Vertex::X(x)) => self.has_edge(x, y),
            _ => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match v {
            Vertex::X(x) => x < self.n,
            Vertex::Y(y) => y < self.m,
        }
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let (xs, ys): (&[usize], &[usize]) = match v {
            Vertex::X(x) => (&[], &self.rows[x]),
            Vertex::Y(y) => (&self.cols[y], &[]),
        };
        xs.iter().map(|&x| Vertex::X(x)).chain(ys.iter().map(|&y| Vertex::Y(y)))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::X(x) => self.rows[x].len(),
            Vertex::Y(y) => self.cols[y].len(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.n).map(Vertex::X).chain((0..self.m).map(Vertex::Y))
    }

    /// Dense id: X-vertices first, then Y-vertices.
    pub fn vertex_id(&self, v: Vertex) -> usize {
        match v {
            Vertex::X(x) => x,
            Vertex::Y(y) => self.n + y,
        }
    }

    pub fn vertex_from_id(&self, id: usize) -> Vertex {
        if id < self.n {
            Vertex::X(id)
        } else {
            Vertex::Y(id - self.n)
        }
    }

    /// Common Y-neighbors of two X-vertices.
    pub fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        let (ra, rb) = (&self.rows[a], &self.rows[b]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < ra.len() && j < rb.len() {
            match ra[i].cmp(&rb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(ra[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Returns a copy with the extra edge `x`–`y`.
    pub fn with_edge(&self, x: usize, y: usize) -> Result<Self> {
        let edges = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |&b| (a, b)))
            .chain(std::iter::once((x, y)));
        Self::from_edges(self.n, self.m, edges)
    }

    /// Graph with the given vertices removed, re-indexed densely per part.
    /// Also returns the surviving original vertices in new-index order.
    pub fn without(&self, removed: &[Vertex]) -> (Self, Vec<usize>, Vec<usize>) {
        let keep_x: Vec<usize> = (0..self.n).filter(|&x| !removed.contains(&Vertex::X(x))).collect();
        let keep_y: Vec<usize> = (0..self.m).filter(|&y| !removed.contains(&Vertex::Y(y))).collect();
        let mut new_y = vec![usize::MAX; self.m];
        for (i, &y) in keep_y.iter().enumerate() {
            new_y[y] = i;
        }
        let rows = keep_x
            .iter()
            .map(|&x| self.rows[x].iter().filter(|&&y| new_y[y] != usize::MAX).map(|&y| new_y[y]).collect())
            .collect();
        (Self::from_rows_unchecked(keep_x.len(), keep_y.len(), rows), keep_x, keep_y)
    }

    /// Connected components of the subgraph induced on vertices for which
    /// `keep` is true. Components are listed by smallest dense id.
    pub fn components_where(&self, keep: impl Fn(Vertex) -> bool) -> Vec<Vec<Vertex>> {
        let total = self.vertex_count();
        let mut seen = vec![false; total];
        let mut out = Vec::new();
        for start in 0..total {
            let sv = self.vertex_from_id(start);
            if seen[start] || !keep(sv) {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![sv];
            let mut queue = VecDeque::from([sv]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    let id = self.vertex_id(w);
                    if !seen[id] && keep(w) {
                        seen[id] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_where(|_| true).len() <= 1
    }
}

/// Degree statistics of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub x_degrees: Vec<usize>,
    pub y_degrees: Vec<usize>,
    /// Minimum over X only; this is the `δ` of the class `G(n, m, δ)`.
    pub min_x_degree: usize,
    pub min_degree: usize,
}

impl DegreeProfile {
    /// Both parts count every edge once.
    pub fn is_consistent(&self) -> bool {
        self.x_degrees.iter().sum::<usize>() == self.y_degrees.iter().sum::<usize>()
    }
}

pub fn degree_profile(g: &BipartiteGraph) -> DegreeProfile {
    let x_degrees: Vec<usize> = (0..g.n()).map(|x| g.x_neighbors(x).len()).collect();
    let y_degrees: Vec<usize> = (0..g.m()).map(|y| g.y_neighbors(y).len()).collect();
    let min_x_degree = x_degrees.iter().copied().min().unwrap_or(0);
    let min_degree = x_degrees.iter().chain(&y_degrees).copied().min().unwrap_or(0);
    DegreeProfile { x_degrees, y_degrees, min_x_degree, min_degree }
}

/// Components of `G - V(C)`.
pub fn components_off_cycle(g: &BipartiteGraph, c: &AltCycle) -> Result<Vec<Vec<Vertex>>> {
    c.check_in(g)?;
    Ok(g.components_where(|v| !c.contains(v)))
}
