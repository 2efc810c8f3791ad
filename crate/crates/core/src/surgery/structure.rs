use serde::{Deserialize, Serialize};

use super::{y_minus, y_plus};
use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};

/// Every `x3` on `c` crossed by `x1` and `x2`: either `x3` lies on the
/// clockwise arc from `x1` to `x2` with `x1 ~ y⁺(x3)` and `x2 ~ y⁻(x3)`,
/// or on the arc from `x2` to `x1` with `x1 ~ y⁻(x3)` and `x2 ~ y⁺(x3)`.
pub fn crossings(g: &BipartiteGraph, c: &AltCycle, x1: usize, x2: usize) -> Vec<usize> {
    let (v1, v2) = (Vertex::X(x1), Vertex::X(x2));
    let Some(span) = c.forward_distance(v1, v2) else {
        return Vec::new();
    };
    if x1 == x2 || !c.contains(v2) {
        return Vec::new();
    }
    c.xs()
        .filter(|&x3| x3 != x1 && x3 != x2)
        .filter(|&x3| {
            let v3 = Vertex::X(x3);
            let (yp, ym) = (y_plus(c, v3), y_minus(c, v3));
            if c.forward_distance(v1, v3).unwrap() < span {
                g.adjacent(v1, yp) && g.adjacent(v2, ym)
            } else {
                g.adjacent(v1, ym) && g.adjacent(v2, yp)
            }
        })
        .collect()
}

/// Common neighbours of X-vertices `u` and `v` that lie off the cycle.
pub fn common_outside_neighbors(g: &BipartiteGraph, c: &AltCycle, u: usize, v: usize) -> Vec<usize> {
    g.common_neighbors(u, v).into_iter().filter(|&y| !c.contains(Vertex::Y(y))).collect()
}

fn has_con(g: &BipartiteGraph, c: &AltCycle, u: usize, v: usize) -> bool {
    !common_outside_neighbors(g, c, u, v).is_empty()
}

/// The first clause a candidate good set violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodSetWitness {
    /// `d_C(x) > |W|`.
    ApexDegree { degree: usize, size: usize },
    /// Two members of `{x} ∪ W` share an outside neighbour `y`.
    CommonNeighbor { a: usize, b: usize, y: usize },
    /// Two vertices of one block cross at more than one vertex.
    Crossings { a: usize, b: usize, at: Vec<usize> },
    /// The blocks do not partition `W` into sets of size at least two.
    Partition(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSetVerdict {
    pub good: bool,
    pub witness: Option<GoodSetWitness>,
}

impl GoodSetVerdict {
    fn fail(w: GoodSetWitness) -> Self {
        Self { good: false, witness: Some(w) }
    }
}

pub fn is_good_set(
    g: &BipartiteGraph,
    c: &AltCycle,
    x: usize,
    w: &[usize],
    partition: &[Vec<usize>],
) -> GoodSetVerdict {
    let degree = c.degree_of(g, Vertex::X(x));
    if degree > w.len() {
        return GoodSetVerdict::fail(GoodSetWitness::ApexDegree { degree, size: w.len() });
    }
    let mut all = vec![x];
    all.extend_from_slice(w);
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            if let Some(&y) = common_outside_neighbors(g, c, a, b).first() {
                return GoodSetVerdict::fail(GoodSetWitness::CommonNeighbor { a, b, y });
            }
        }
    }
    let mut covered: Vec<usize> = partition.iter().flatten().copied().collect();
    covered.sort_unstable();
    let mut members = w.to_vec();
    members.sort_unstable();
    if covered != members {
        return GoodSetVerdict::fail(GoodSetWitness::Partition("blocks do not partition W".into()));
    }
    if let Some(block) = partition.iter().find(|b| b.len() < 2) {
        return GoodSetVerdict::fail(GoodSetWitness::Partition(format!("block {block:?} has fewer than two vertices")));
    }
    for block in partition {
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                let at = crossings(g, c, a, b);
                if at.len() > 1 {
                    return GoodSetVerdict::fail(GoodSetWitness::Crossings { a, b, at });
                }
            }
        }
    }
    GoodSetVerdict { good: true, witness: None }
}

/// The cycle cut at three connectors `u_1, u_2, u_3`, listed clockwise
/// with `u_1` the earliest in cycle order. Indices wrap modulo 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentView {
    pub connectors: [Vertex; 3],
    /// `U_1, U_2, U_3`: the open arcs from `u_i` to `u_{i+1}`.
    pub segments: [Vec<Vertex>; 3],
}

impl SegmentView {
    pub fn new(c: &AltCycle, t_tilde: &[Vertex]) -> Result<Self> {
        if t_tilde.len() != 3 {
            return Err(Error::NotThreeConnectors(t_tilde.len()));
        }
        let mut u: Vec<Vertex> = t_tilde.to_vec();
        for &v in &u {
            c.position(v).ok_or(Error::NotOnCycle(v))?;
        }
        u.sort_by_key(|&v| c.position(v));
        let connectors = [u[0], u[1], u[2]];
        let segments = std::array::from_fn(|i| {
            let arc = c.arc(connectors[i], connectors[(i + 1) % 3]);
            arc[1..arc.len() - 1].to_vec()
        });
        Ok(Self { connectors, segments })
    }

    fn slot(i: isize) -> usize {
        (i - 1).rem_euclid(3) as usize
    }

    /// `u_i` for any integer `i`.
    pub fn u(&self, i: isize) -> Vertex {
        self.connectors[Self::slot(i)]
    }

    /// `X_i` in clockwise order.
    pub fn xs(&self, i: isize) -> Vec<usize> {
        self.segments[Self::slot(i)].iter().filter(|v| v.is_x()).map(|v| v.index()).collect()
    }

    pub fn ys(&self, i: isize) -> Vec<usize> {
        self.segments[Self::slot(i)].iter().filter(|v| v.is_y()).map(|v| v.index()).collect()
    }

    fn pick(list: Vec<usize>, back: Vec<usize>, j: isize) -> Option<usize> {
        match j {
            0 => None,
            j if j > 0 => list.get(j as usize - 1).copied(),
            j => back.len().checked_sub(j.unsigned_abs()).map(|k| back[k]),
        }
    }

    /// `x_{i,j}`: for `j > 0` the `j`-th X-vertex of `U_i` clockwise, for
    /// `j < 0` the `|j|`-th of `U_{i-1}` counterclockwise.
    pub fn x(&self, i: isize, j: isize) -> Option<usize> {
        Self::pick(self.xs(i), self.xs(i - 1), j)
    }

    pub fn y(&self, i: isize, j: isize) -> Option<usize> {
        Self::pick(self.ys(i), self.ys(i - 1), j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigType {
    /// `x_{i,-1}` and `x_{i,1}` share an outside neighbour.
    Short,
    /// `x_{i,1}` and `x_{i+1,-1}`.
    Medium,
    /// `x_{i,-1}` and `x_{i+1,1}`.
    Long,
}

impl ConfigType {
    pub const ALL: [ConfigType; 3] = [ConfigType::Short, ConfigType::Medium, ConfigType::Long];

    /// The `(i, j)` index pairs whose X-vertices define this type at `i`.
    fn endpoints(self, i: isize) -> [(isize, isize); 2] {
        match self {
            ConfigType::Short => [(i, -1), (i, 1)],
            ConfigType::Medium => [(i, 1), (i + 1, -1)],
            ConfigType::Long => [(i, -1), (i + 1, 1)],
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigReport {
    /// `(i, type)` for every type present, `i` in `1..=3`.
    pub types: Vec<(usize, ConfigType)>,
    /// Pairs whose two endpoints are missing or coincide; not classified.
    pub degenerate: Vec<(usize, ConfigType)>,
}

pub fn classify_config_types(g: &BipartiteGraph, c: &AltCycle, seg: &SegmentView) -> ConfigReport {
    let mut r = ConfigReport::default();
    for i in 1..=3isize {
        for ty in ConfigType::ALL {
            let [(i1, j1), (i2, j2)] = ty.endpoints(i);
            match (seg.x(i1, j1), seg.x(i2, j2)) {
                (Some(a), Some(b)) if a != b => {
                    if has_con(g, c, a, b) {
                        r.types.push((i as usize, ty));
                    }
                }
                _ => r.degenerate.push((i as usize, ty)),
            }
        }
    }
    r
}

/// Whether every `x_{i,2}, ..., x_{i+1,-2}` has an outside neighbour in
/// common with `x_{i,1}` and one with `x_{i+1,-1}`. Vacuously true when
/// `X_i` has at most two vertices.
pub fn is_abundant(g: &BipartiteGraph, c: &AltCycle, seg: &SegmentView, i: isize) -> bool {
    let xs = seg.xs(i);
    if xs.len() <= 2 {
        return true;
    }
    let (first, last) = (xs[0], xs[xs.len() - 1]);
    xs[1..xs.len() - 1].iter().all(|&v| has_con(g, c, v, first) && has_con(g, c, v, last))
}
