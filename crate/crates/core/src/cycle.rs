//! Even cycles in bipartite graphs and Berge cycles in hypergraphs.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};
use crate::hypergraph::Hypergraph;

const ABSENT: u32 = u32::MAX;

/// A cycle stored as `x_0, y_0, x_1, y_1, ...`; list order is the
/// clockwise direction.
#[derive(Clone)]
pub struct AltCycle {
    seq: Vec<Vertex>,
    pos_x: Vec<u32>,
    pos_y: Vec<u32>,
}

impl PartialEq for AltCycle {
    fn eq(&self, other: &Self) -> bool {
        self.seq == other.seq
    }
}

impl Eq for AltCycle {}

impl Hash for AltCycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.seq.hash(state);
    }
}

/// Serialized as its text form.
impl Serialize for AltCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AltCycle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for AltCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltCycle({self})")
    }
}

impl fmt::Display for AltCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Cycle text is the whitespace-separated vertex list, e.g. `x0 y0 x1 y1`.
/// Parsing checks shape only; use [`AltCycle::check_in`] against a graph.
impl FromStr for AltCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let seq = s.split_whitespace().map(str::parse).collect::<Result<Vec<Vertex>>>()?;
        Self::from_sequence(seq)
    }
}

impl AltCycle {
    /// Builds and checks a cycle of `g`. A sequence starting on a Y-vertex
    /// is rotated by one so that it starts on X.
    pub fn new(g: &BipartiteGraph, seq: Vec<Vertex>) -> Result<Self> {
        let c = Self::from_sequence(seq)?;
        c.check_in(g)?;
        Ok(c)
    }

    /// Shape checks only: even length >= 4, strict alternation, distinct vertices.
    pub fn from_sequence(mut seq: Vec<Vertex>) -> Result<Self> {
        if seq.len() < 4 || seq.len() % 2 == 1 {
            return Err(Error::InvalidCycle(format!("length {} is not an even number >= 4", seq.len())));
        }
        if seq[0].is_y() {
            seq.rotate_left(1);
        }
        for (i, v) in seq.iter().enumerate() {
            if v.is_x() != (i % 2 == 0) {
                return Err(Error::InvalidCycle(format!("position {i} breaks X/Y alternation")));
            }
        }
        let max_x = seq.iter().filter(|v| v.is_x()).map(|v| v.index()).max().unwrap_or(0);
        let max_y = seq.iter().filter(|v| v.is_y()).map(|v| v.index()).max().unwrap_or(0);
        let mut pos_x = vec![ABSENT; max_x + 1];
        let mut pos_y = vec![ABSENT; max_y + 1];
        for (i, v) in seq.iter().enumerate() {
            let slot = match v {
                Vertex::X(x) => &mut pos_x[*x],
                Vertex::Y(y) => &mut pos_y[*y],
            };
            if *slot != ABSENT {
                return Err(Error::InvalidCycle(format!("{v} repeats")));
            }
            *slot = i as u32;
        }
        Ok(Self { seq, pos_x, pos_y })
    }

    /// Builds a cycle from alternating X and Y lists: `x_i y_i x_{i+1}`.
    pub fn from_parts(g: &BipartiteGraph, xs: &[usize], ys: &[usize]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidCycle("X and Y lists differ in length".into()));
        }
        let seq = xs.iter().zip(ys).flat_map(|(&x, &y)| [Vertex::X(x), Vertex::Y(y)]).collect();
        Self::new(g, seq)
    }

    /// Checks that every vertex exists in `g` and consecutive vertices are adjacent.
    pub fn check_in(&self, g: &BipartiteGraph) -> Result<()> {
        if let Some(v) = self.seq.iter().find(|v| !g.contains(**v)) {
            return Err(Error::InvalidCycle(format!("{v} is not a vertex of the graph")));
        }
        let k = self.seq.len();
        for i in 0..k {
            let (a, b) = (self.seq[i], self.seq[(i + 1) % k]);
            if !g.adjacent(a, b) {
                return Err(Error::InvalidCycle(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.seq
    }

    /// Number of vertices, `2ℓ`.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `ℓ`: the number of X-vertices (equivalently Y-vertices) on the cycle.
    pub fn half_len(&self) -> usize {
        self.seq.len() / 2
    }

    pub fn xs(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().step_by(2).map(|v| v.index())
    }

    pub fn ys(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().skip(1).step_by(2).map(|v| v.index())
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        let p = match v {
            Vertex::X(x) => self.pos_x.get(x),
            Vertex::Y(y) => self.pos_y.get(y),
        };
        p.copied().filter(|&p| p != ABSENT).map(|p| p as usize)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position(v).is_some()
    }

    /// Vertex `steps` places clockwise from position `p` (negative: counterclockwise).
    pub fn at(&self, p: usize, steps: isize) -> Vertex {
        let k = self.seq.len() as isize;
        self.seq[((p as isize + steps).rem_euclid(k)) as usize]
    }

    /// Clockwise distance from `a` to `b` (0 when equal).
    pub fn forward_distance(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let (pa, pb) = (self.position(a)?, self.position(b)?);
        Some((pb + self.len() - pa) % self.len())
    }

    /// `C[a, b]`: the clockwise path from `a` to `b`, both included.
    pub fn arc(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let pa = self.position(a).expect("arc endpoint on cycle");
        let d = self.forward_distance(a, b).expect("arc endpoint on cycle");
        (0..=d).map(|i| self.at(pa, i as isize)).collect()
    }

    /// `C^-[a, b]`: the counterclockwise path from `a` to `b`, both included.
    pub fn arc_back(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let mut v = self.arc(b, a);
        v.reverse();
        v
    }

    /// Same cycle traversed in the opposite direction, still starting on X.
    pub fn reversed(&self) -> AltCycle {
        let mut seq = self.seq.clone();
        seq[1..].reverse();
        Self::rearranged(seq)
    }

    fn rearranged(seq: Vec<Vertex>) -> AltCycle {
        AltCycle::from_sequence(seq).expect("rearranging a valid cycle keeps it valid")
    }

    /// Rotated to start at the smallest X index, in whichever direction
    /// gives the lexicographically smaller list. Two cycles are the same
    /// subgraph iff their normalized forms are equal.
    pub fn normalized(&self) -> AltCycle {
        let mut best: Option<Vec<Vertex>> = None;
        for cand in [self.seq.clone(), self.reversed().seq] {
            let p = cand.iter().position(|v| *v == Vertex::X(self.xs().min().unwrap())).unwrap();
            let mut s = cand;
            s.rotate_left(p);
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
        Self::rearranged(best.unwrap())
    }

    /// Number of vertices of the cycle adjacent to `v` in `g`.
    pub fn degree_of(&self, g: &BipartiteGraph, v: Vertex) -> usize {
        g.neighbors(v).filter(|w| self.contains(*w)).count()
    }
}

/// Base vertices `v_1..v_ℓ` and distinct edges `e_1..e_ℓ` with
/// `v_i, v_{i+1} ∈ e_i` cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeCycle {
    pub base_vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl BergeCycle {
    pub fn len(&self) -> usize {
        self.base_vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base_vertices.is_empty()
    }

    pub fn check_in(&self, h: &Hypergraph) -> Result<()> {
        let l = self.base_vertices.len();
        if l < 2 || self.edges.len() != l {
            return Err(Error::InvalidCycle("a Berge cycle needs ℓ >= 2 vertices and ℓ edges".into()));
        }
        let mut vs = self.base_vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != l || es.len() != l {
            return Err(Error::InvalidCycle("base vertices and edges must be distinct".into()));
        }
        for i in 0..l {
            let e =
                h.edges().get(self.edges[i]).ok_or_else(|| Error::InvalidCycle("edge index out of range".into()))?;
            let (a, b) = (self.base_vertices[i], self.base_vertices[(i + 1) % l]);
            if e.binary_search(&a).is_err() || e.binary_search(&b).is_err() {
                return Err(Error::InvalidCycle(format!("edge {} does not contain {a} and {b}", self.edges[i])));
            }
        }
        Ok(())
    }

    /// The corresponding `2ℓ`-cycle of the incidence graph.
    pub fn to_incidence_cycle(&self, h: &Hypergraph) -> Result<AltCycle> {
        self.check_in(h)?;
        let g = crate::hypergraph::incidence_graph(h);
        AltCycle::from_parts(&g, &self.base_vertices, &self.edges)
    }
}

/// Reads a Berge cycle off a cycle of `I(h)`: X entries are base vertices,
/// Y entries are edges.
pub fn berge_from_incidence_cycle(h: &Hypergraph, c: &AltCycle) -> Result<BergeCycle> {
    let g = crate::hypergraph::incidence_graph(h);
    c.check_in(&g)?;
    let b = BergeCycle { base_vertices: c.xs().collect(), edges: c.ys().collect() };
    b.check_in(h)?;
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> (BipartiteGraph, AltCycle) {
        let g = BipartiteGraph::complete(2, 2);
        let c = AltCycle::from_parts(&g, &[0, 1], &[0, 1]).unwrap();
        (g, c)
    }

    #[test]
    fn parse_and_display() {
        let (g, c) = square();
        assert_eq!(c.to_string(), "x0 y0 x1 y1");
        let d: AltCycle = "y1 x0 y0 x1".parse().unwrap();
        d.check_in(&g).unwrap();
        assert_eq!(d.vertices()[0], Vertex::X(0));
    }

    #[test]
    fn rejects_bad_shapes() {
        let g = BipartiteGraph::complete(3, 3);
        assert!("x0 y0".parse::<AltCycle>().is_err());
        assert!("x0 y0 y1 x1".parse::<AltCycle>().is_err());
        assert!("x0 y0 x0 y1".parse::<AltCycle>().is_err());
        let p = BipartiteGraph::from_rows(2, 2, vec![vec![0], vec![0, 1]]).unwrap();
        assert!(AltCycle::from_parts(&p, &[0, 1], &[0, 1]).is_err());
        assert!(AltCycle::from_parts(&g, &[0, 5], &[0, 1]).is_err());
    }

    #[test]
    fn arcs() {
        let g = BipartiteGraph::complete(3, 3);
        let c = AltCycle::from_parts(&g, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(c.arc(Vertex::X(1), Vertex::X(0)).len(), 5);
        assert_eq!(c.arc_back(Vertex::X(1), Vertex::X(0)), vec![Vertex::X(1), Vertex::Y(0), Vertex::X(0)]);
        assert_eq!(c.arc(Vertex::Y(2), Vertex::Y(2)), vec![Vertex::Y(2)]);
    }

    #[test]
    fn reversal_and_normal_form() {
        let g = BipartiteGraph::complete(3, 3);
        let c = AltCycle::from_parts(&g, &[1, 2, 0], &[2, 0, 1]).unwrap();
        let r = c.reversed();
        r.check_in(&g).unwrap();
        assert_eq!(c.normalized(), r.normalized());
        assert_eq!(c.normalized().vertices()[0], Vertex::X(0));
    }

    #[test]
    fn berge_from_square() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let c = AltCycle::from_parts(&crate::hypergraph::incidence_graph(&h), &[0, 1], &[0, 1]).unwrap();
        let b = berge_from_incidence_cycle(&h, &c).unwrap();
        assert_eq!(b, BergeCycle { base_vertices: vec![0, 1], edges: vec![0, 1] });
        assert_eq!(b.to_incidence_cycle(&h).unwrap(), c);
    }

    #[test]
    fn berge_rejects_repeated_edge() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let b = BergeCycle { base_vertices: vec![0, 1], edges: vec![0, 0] };
        assert!(b.check_in(&h).is_err());
    }
}
