//! Vertex connectivity and maximum `x, V(C)`-fans via vertex-split flows.

use serde::{Deserialize, Serialize};

use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::flow::{Network, INF};
use crate::graph::{BipartiteGraph, Vertex};

fn split_in(id: usize) -> usize {
    2 * id
}

fn split_out(id: usize) -> usize {
    2 * id + 1
}

/// Network where every vertex is an in/out pair joined by a unit edge.
fn split_network(g: &BipartiteGraph) -> Network {
    let total = g.vertex_count();
    let mut net = Network::new(2 * total);
    for id in 0..total {
        net.add_edge(split_in(id), split_out(id), 1, 0);
    }
    for x in 0..g.n() {
        for &y in g.x_neighbors(x) {
            let (a, b) = (g.vertex_id(Vertex::X(x)), g.vertex_id(Vertex::Y(y)));
            net.add_edge(split_out(a), split_in(b), INF, 0);
            net.add_edge(split_out(b), split_in(a), INF, 0);
        }
    }
    net
}

/// Number of internally vertex-disjoint `s,t`-paths, capped at `limit`.
/// `s` and `t` must be distinct and non-adjacent.
pub fn local_connectivity(g: &BipartiteGraph, s: Vertex, t: Vertex, limit: usize) -> usize {
    let mut net = split_network(g);
    net.max_flow(split_out(g.vertex_id(s)), split_in(g.vertex_id(t)), limit.min(INF as usize) as i32) as usize
}

/// Minimum size of a vertex cut. Graphs without a non-adjacent pair
/// (at most `K_{1,1}`) report `min(n, m)`.
pub fn vertex_connectivity(g: &BipartiteGraph) -> usize {
    connectivity_capped(g, usize::MAX)
}

/// `min(κ(G), cap)`, using Even's scheme: only sources among the first
/// `κ + 1` vertices need to be tried.
fn connectivity_capped(g: &BipartiteGraph, cap: usize) -> usize {
    let total = g.vertex_count();
    if total <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let ids: Vec<Vertex> = g.vertices().collect();
    let min_degree = ids.iter().map(|&v| g.degree(v)).min().unwrap_or(0);
    let mut best = cap.min(min_degree);
    let mut any_pair = false;
    let mut i = 0;
    while i < total && i <= best {
        for j in (i + 1)..total {
            let (a, b) = (ids[i], ids[j]);
            if g.adjacent(a, b) {
                continue;
            }
            any_pair = true;
            if best == 0 {
                return 0;
            }
            best = best.min(local_connectivity(g, a, b, best));
        }
        i += 1;
    }
    if !any_pair && i >= total {
        return cap.min(g.n().min(g.m()));
    }
    best
}

/// True iff the graph has more than `k` vertices and no vertex cut of size below `k`.
pub fn is_k_connected(g: &BipartiteGraph, k: usize) -> bool {
    if g.vertex_count() <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    connectivity_capped(g, k) >= k
}

/// A set of paths from `apex` to distinct cycle vertices that pairwise
/// meet only at `apex` and touch the cycle only at their last vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub apex: usize,
    /// Each path starts at `X(apex)` and ends at its target on the cycle.
    pub paths: Vec<Vec<Vertex>>,
}

impl Fan {
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    /// `T`: the path endpoints on the cycle.
    pub fn targets(&self) -> Vec<Vertex> {
        self.paths.iter().map(|p| *p.last().unwrap()).collect()
    }

    /// `|V(F)|`, apex included.
    pub fn vertex_count(&self) -> usize {
        1 + self.paths.iter().map(|p| p.len() - 1).sum::<usize>()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = vec![Vertex::X(self.apex)];
        for p in &self.paths {
            out.extend_from_slice(&p[1..]);
        }
        out
    }

    /// Path of the fan ending at `target`.
    pub fn path_to(&self, target: Vertex) -> Option<&[Vertex]> {
        self.paths.iter().find(|p| p.last() == Some(&target)).map(Vec::as_slice)
    }

    /// `F[a, b]` for two targets: `a` back to the apex, then out to `b`.
    pub fn path_between(&self, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
        let mut out: Vec<Vertex> = self.path_to(a)?.iter().rev().copied().collect();
        out.extend_from_slice(&self.path_to(b)?[1..]);
        Some(out)
    }

    pub fn check(&self, g: &BipartiteGraph, c: &AltCycle) -> Result<()> {
        let apex = Vertex::X(self.apex);
        if c.contains(apex) {
            return Err(Error::OnCycle(apex));
        }
        let mut seen = vec![false; g.vertex_count()];
        for p in &self.paths {
            if p.len() < 2 || p[0] != apex {
                return Err(Error::InvalidParams("fan path must leave the apex".into()));
            }
            for w in p.windows(2) {
                if !g.adjacent(w[0], w[1]) {
                    return Err(Error::InvalidParams(format!("fan uses non-edge {}-{}", w[0], w[1])));
                }
            }
            for (i, &v) in p.iter().enumerate().skip(1) {
                let id = g.vertex_id(v);
                if seen[id] {
                    return Err(Error::InvalidParams(format!("fan paths share {v}")));
                }
                seen[id] = true;
                if c.contains(v) != (i == p.len() - 1) {
                    return Err(Error::InvalidParams(format!("fan path meets the cycle away from its end at {v}")));
                }
            }
        }
        Ok(())
    }
}

/// A largest `x, V(C)`-fan. Among largest fans, one with the most
/// Y-targets is chosen, and among those one with the fewest vertices.
pub fn max_fan(g: &BipartiteGraph, x: usize, c: &AltCycle) -> Result<Fan> {
    let apex = Vertex::X(x);
    if c.contains(apex) {
        return Err(Error::OnCycle(apex));
    }
    let total = g.vertex_count();
    let sink = 2 * total;
    let mut net = Network::new(2 * total + 1);
    // Prefer Y targets over X targets, then fewer internal vertices.
    let x_target_cost = total as i64 + 1;
    for v in g.vertices() {
        let id = g.vertex_id(v);
        if c.contains(v) {
            net.add_edge(split_in(id), sink, 1, if v.is_x() { x_target_cost } else { 0 });
        } else if v != apex {
            net.add_edge(split_in(id), split_out(id), 1, 1);
        }
    }
    for v in g.vertices() {
        if c.contains(v) {
            continue;
        }
        for w in g.neighbors(v) {
            if w != apex {
                net.add_edge(split_out(g.vertex_id(v)), split_in(g.vertex_id(w)), 1, 0);
            }
        }
    }
    let source = split_out(g.vertex_id(apex));
    net.min_cost_max_flow(source, sink);

    let mut used = vec![0i32; net.edge_slots()];
    let mut paths = Vec::new();
    for &e0 in net.out_edges(source) {
        if e0 % 2 == 1 || net.flow_on(e0) - used[e0] <= 0 {
            continue;
        }
        used[e0] += 1;
        let mut path = vec![apex];
        let mut node = net.head(e0);
        loop {
            let v = g.vertex_from_id(node / 2);
            path.push(v);
            if c.contains(v) {
                break;
            }
            // in -> out of the same vertex, then the next edge carrying flow.
            node = split_out(node / 2);
            let next = net
                .out_edges(node)
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && net.flow_on(e) - used[e] > 0)
                .expect("flow conservation");
            used[next] += 1;
            node = net.head(next);
        }
        paths.push(path);
    }
    paths.sort_by_key(|p| *p.last().unwrap());
    Ok(Fan { apex: x, paths })
}
