//! Hypergraphs and the incidence transform to bipartite graphs.

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// A hypergraph on `vertex_count` vertices. Edges are sorted vertex sets;
/// empty edges and repeated equal edges are both allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidHypergraph(format!("edge {i} contains vertex {v} >= {vertex_count}")));
            }
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidHypergraph(format!("edge {i} is not a sorted set")));
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edge multiset equality, ignoring edge order.
    pub fn same_edges_as(&self, other: &Hypergraph) -> bool {
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort();
        b.sort();
        self.vertex_count == other.vertex_count && a == b
    }
}

/// `X` = vertices of `h`, `Y` = edges of `h`, adjacency is containment.
pub fn incidence_graph(h: &Hypergraph) -> BipartiteGraph {
    let mut rows = vec![Vec::new(); h.vertex_count];
    for (j, e) in h.edges.iter().enumerate() {
        for &v in e {
            rows[v].push(j);
        }
    }
    BipartiteGraph::from_rows_unchecked(h.vertex_count, h.edges.len(), rows)
}

/// Inverse of [`incidence_graph`]: every Y-vertex becomes the edge of its
/// X-neighbors. Y-vertices without neighbors become empty edges.
pub fn to_hypergraph(g: &BipartiteGraph) -> Hypergraph {
    let edges = (0..g.m()).map(|y| g.y_neighbors(y).to_vec()).collect();
    Hypergraph { vertex_count: g.n(), edges }
}
