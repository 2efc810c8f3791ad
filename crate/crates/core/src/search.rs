//! Exact cycle solvers and component path finding.
//!
//! A cycle of a bipartite graph is a cyclic sequence of X-vertices
//! `x_0 .. x_{ℓ-1}` together with distinct Y-connectors, the connector of
//! `(x_i, x_{i+1})` being a common neighbour. The solvers backtrack over
//! X-sequences and keep a maximum matching of consecutive pairs to
//! connectors, extended by one augmenting path per step; a step whose pair
//! cannot be matched is pruned. X-vertices with identical neighbourhoods
//! are interchangeable, so within such a twin class only index-ordered
//! prefixes are explored.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};

/// Default node-expansion budget for the exact solvers.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest component searched exhaustively by [`path_through_component`].
pub const EXACT_PATH_THRESHOLD: usize = 10;

const HEURISTIC_PATH_NODES: u64 = 20_000;
const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
}

struct CycleSearch<'g> {
    n: usize,
    common: Vec<Vec<usize>>,
    twin_prev: Vec<usize>,
    budget: u64,
    nodes: u64,
    seq: Vec<usize>,
    used: Vec<bool>,
    remaining: usize,
    pairs: Vec<(usize, usize)>,
    pair_y: Vec<usize>,
    y_pair: Vec<usize>,
    visit: Vec<u32>,
    stamp: u32,
    best: Option<(Vec<usize>, Vec<usize>)>,
    best_len: usize,
    target: usize,
    spanning: bool,
    g: &'g BipartiteGraph,
}

impl<'g> CycleSearch<'g> {
    fn new(g: &'g BipartiteGraph, budget: u64, target: usize, spanning: bool) -> Self {
        let n = g.n();
        let mut common = vec![Vec::new(); n * n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    common[a * n + b] = g.common_neighbors(a, b);
                }
            }
        }
        let twin_prev =
            (0..n).map(|v| (0..v).rev().find(|&u| g.x_neighbors(u) == g.x_neighbors(v)).unwrap_or(NONE)).collect();
        Self {
            n,
            common,
            twin_prev,
            budget,
            nodes: 0,
            seq: Vec::new(),
            used: vec![false; n],
            remaining: 0,
            pairs: Vec::new(),
            pair_y: Vec::new(),
            y_pair: vec![NONE; g.m()],
            visit: vec![0; g.m()],
            stamp: 0,
            best: None,
            best_len: 0,
            target,
            spanning,
            g,
        }
    }

    fn try_assign(&mut self, p: usize) -> bool {
        let (a, b) = self.pairs[p];
        let idx = a * self.n + b;
        for i in 0..self.common[idx].len() {
            let y = self.common[idx][i];
            if self.visit[y] == self.stamp {
                continue;
            }
            self.visit[y] = self.stamp;
            if self.y_pair[y] == NONE || self.try_assign(self.y_pair[y]) {
                self.y_pair[y] = p;
                self.pair_y[p] = y;
                return true;
            }
        }
        false
    }

    fn push_pair(&mut self, a: usize, b: usize) -> bool {
        if self.common[a * self.n + b].is_empty() {
            return false;
        }
        let p = self.pairs.len();
        self.pairs.push((a, b));
        self.pair_y.push(NONE);
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.visit.iter_mut().for_each(|v| *v = 0);
            self.stamp = 1;
        }
        if self.try_assign(p) {
            true
        } else {
            self.pairs.pop();
            self.pair_y.pop();
            false
        }
    }

    fn pop_pair(&mut self) {
        self.pairs.pop();
        let y = self.pair_y.pop().unwrap();
        self.y_pair[y] = NONE;
    }

    fn has_partner(&self, v: usize, w: usize) -> bool {
        !self.common[v * self.n + w].is_empty()
    }

    /// Every unplaced vertex still needs two sequence neighbours.
    fn spanning_dead_end(&self) -> bool {
        if self.seq.len() < 2 {
            return false;
        }
        let (first, last) = (self.seq[0], *self.seq.last().unwrap());
        (0..self.n).any(|v| {
            if self.used[v] {
                return false;
            }
            let mut options = usize::from(self.has_partner(v, first)) + usize::from(self.has_partner(v, last));
            for w in 0..self.n {
                if options >= 2 {
                    break;
                }
                if w != v && !self.used[w] && self.has_partner(v, w) {
                    options += 1;
                }
            }
            options < 2
        })
    }

    /// Returns `Ok(true)` once the target length has been reached.
    fn extend(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let d = self.seq.len();
        let (start, last) = (self.seq[0], self.seq[d - 1]);
        let may_close = if self.spanning { d == self.n } else { d >= 2 && d > self.best_len };
        if may_close && self.push_pair(last, start) {
            self.best_len = d;
            self.best = Some((self.seq.clone(), self.pair_y.clone()));
            self.pop_pair();
            if d >= self.target {
                return Ok(true);
            }
        }
        if d + self.remaining <= self.best_len || d >= self.target {
            return Ok(false);
        }
        if self.spanning && self.spanning_dead_end() {
            return Ok(false);
        }
        for v in (start + 1)..self.n {
            if self.used[v] || (self.twin_prev[v] != NONE && !self.used[self.twin_prev[v]]) {
                continue;
            }
            if !self.push_pair(last, v) {
                continue;
            }
            self.used[v] = true;
            self.seq.push(v);
            self.remaining -= 1;
            let done = self.extend();
            self.remaining += 1;
            self.seq.pop();
            self.used[v] = false;
            self.pop_pair();
            if done? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn run(&mut self, starts: impl Iterator<Item = usize>) -> Result<()> {
        for s in starts {
            if self.twin_prev[s] != NONE {
                continue;
            }
            if self.n - s <= self.best_len {
                break;
            }
            self.used[s] = true;
            self.seq = vec![s];
            self.remaining = self.n - s - 1;
            let done = self.extend();
            self.used[s] = false;
            self.seq.clear();
            if done? {
                break;
            }
        }
        Ok(())
    }

    fn into_cycle(self) -> Option<AltCycle> {
        let (xs, ys) = self.best?;
        Some(AltCycle::from_parts(self.g, &xs, &ys).expect("solver output is a cycle"))
    }
}

/// A maximum-length cycle, `None` when the graph is a forest.
pub fn longest_cycle(g: &BipartiteGraph, budget: u64) -> Result<Option<AltCycle>> {
    longest_cycle_with_stats(g, budget).map(|(c, _)| c)
}

pub fn longest_cycle_with_stats(g: &BipartiteGraph, budget: u64) -> Result<(Option<AltCycle>, SearchStats)> {
    let mut s = CycleSearch::new(g, budget, g.n().min(g.m()), false);
    s.run(0..g.n())?;
    let stats = SearchStats { nodes: s.nodes };
    Ok((s.into_cycle(), stats))
}

/// Some cycle through at least `min_half_len` X-vertices, if one exists.
pub fn find_cycle_at_least(g: &BipartiteGraph, min_half_len: usize, budget: u64) -> Result<Option<AltCycle>> {
    find_cycle_at_least_with_stats(g, min_half_len, budget).map(|(c, _)| c)
}

pub fn find_cycle_at_least_with_stats(
    g: &BipartiteGraph,
    min_half_len: usize,
    budget: u64,
) -> Result<(Option<AltCycle>, SearchStats)> {
    let min_half_len = min_half_len.max(2);
    if min_half_len > g.n().min(g.m()) {
        return Ok((None, SearchStats::default()));
    }
    let mut s = CycleSearch::new(g, budget, min_half_len, false);
    s.best_len = min_half_len - 1;
    s.run(0..g.n())?;
    let stats = SearchStats { nodes: s.nodes };
    Ok((s.into_cycle(), stats))
}

/// A cycle through every X-vertex (a `2n`-cycle), if one exists.
pub fn find_x_spanning_cycle(g: &BipartiteGraph, budget: u64) -> Result<Option<AltCycle>> {
    find_x_spanning_cycle_with_stats(g, budget).map(|(c, _)| c)
}

pub fn find_x_spanning_cycle_with_stats(g: &BipartiteGraph, budget: u64) -> Result<(Option<AltCycle>, SearchStats)> {
    let n = g.n();
    if n < 2 || n > g.m() || (0..n).any(|x| g.x_neighbors(x).len() < 2) {
        return Ok((None, SearchStats::default()));
    }
    let mut s = CycleSearch::new(g, budget, n, true);
    s.run(std::iter::once(0))?;
    let stats = SearchStats { nodes: s.nodes };
    Ok((s.into_cycle(), stats))
}

pub fn has_x_spanning_cycle(g: &BipartiteGraph, budget: u64) -> Result<bool> {
    Ok(find_x_spanning_cycle(g, budget)?.is_some())
}

/// Some cycle found by a randomized depth-first search; `None` for forests.
pub fn random_cycle<R: Rng + ?Sized>(g: &BipartiteGraph, rng: &mut R) -> Option<AltCycle> {
    let total = g.vertex_count();
    let mut order: Vec<usize> = (0..total).collect();
    order.shuffle(rng);
    let mut depth = vec![NONE; total];
    let mut done = vec![false; total];
    for &root in &order {
        if done[root] {
            continue;
        }
        let mut path: Vec<Vertex> = vec![g.vertex_from_id(root)];
        let mut pending: Vec<Vec<Vertex>> = vec![shuffled_neighbors(g, g.vertex_from_id(root), rng)];
        depth[root] = 0;
        while let Some(options) = pending.last_mut() {
            let Some(w) = options.pop() else {
                let v = path.pop().unwrap();
                let id = g.vertex_id(v);
                depth[id] = NONE;
                done[id] = true;
                pending.pop();
                continue;
            };
            let wid = g.vertex_id(w);
            if done[wid] {
                continue;
            }
            if depth[wid] != NONE {
                if path.len() - depth[wid] >= 4 {
                    let seq = path[depth[wid]..].to_vec();
                    return Some(AltCycle::new(g, seq).expect("DFS back edge closes a cycle"));
                }
                continue;
            }
            depth[wid] = path.len();
            path.push(w);
            pending.push(shuffled_neighbors(g, w, rng));
        }
    }
    None
}

fn shuffled_neighbors<R: Rng + ?Sized>(g: &BipartiteGraph, v: Vertex, rng: &mut R) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = g.neighbors(v).collect();
    out.shuffle(rng);
    out
}

struct PathSearch<'a> {
    g: &'a BipartiteGraph,
    in_d: Vec<bool>,
    target: Vertex,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    best: Option<(usize, Vec<Vertex>)>,
    nodes: u64,
    limit: u64,
}

impl PathSearch<'_> {
    fn score(&self) -> usize {
        let inner = &self.path[1..];
        2 * inner.iter().filter(|v| v.is_x()).count() + inner.len()
    }

    fn dfs(&mut self) {
        self.nodes += 1;
        if self.nodes > self.limit {
            return;
        }
        let v = *self.path.last().unwrap();
        let mut next: Vec<Vertex> = self.g.neighbors(v).collect();
        // X first, so the heuristic mode meets X-rich paths early.
        next.sort_by_key(|w| (w.is_y(), *w));
        for w in next {
            if w == self.target {
                if self.path.len() >= 2 || self.in_d[self.g.vertex_id(v)] {
                    let score = self.score();
                    if self.best.as_ref().is_none_or(|(b, _)| score > *b) {
                        let mut p = self.path.clone();
                        p.push(w);
                        self.best = Some((score, p));
                    }
                }
                continue;
            }
            let id = self.g.vertex_id(w);
            if !self.in_d[id] || self.on_path[id] {
                continue;
            }
            self.on_path[id] = true;
            self.path.push(w);
            self.dfs();
            self.path.pop();
            self.on_path[id] = false;
        }
    }
}

/// A `u,v`-path whose internal vertices all lie in the off-cycle vertex set
/// `d`. With `prefer_x` the number of internal X-vertices is maximized:
/// exactly when `|d| <= EXACT_PATH_THRESHOLD`, best-effort above it.
/// Without `prefer_x` a shortest such path is returned. Unless `u` or `v`
/// is itself in `d`, the path has at least one internal vertex.
pub fn path_through_component(
    g: &BipartiteGraph,
    c: &AltCycle,
    d: &[Vertex],
    u: Vertex,
    v: Vertex,
    prefer_x: bool,
) -> Result<Vec<Vertex>> {
    if let Some(&w) = d.iter().find(|w| c.contains(**w)) {
        return Err(Error::OnCycle(w));
    }
    if u == v || !g.contains(u) || !g.contains(v) {
        return Err(Error::NoPath);
    }
    let mut in_d = vec![false; g.vertex_count()];
    for &w in d {
        in_d[g.vertex_id(w)] = true;
    }
    in_d[g.vertex_id(u)] = false;
    in_d[g.vertex_id(v)] = false;
    let u_in_d = d.contains(&u);
    if !prefer_x {
        return shortest_through(g, &in_d, u, v, u_in_d || d.contains(&v));
    }
    let mut s = PathSearch {
        g,
        in_d,
        target: v,
        on_path: vec![false; g.vertex_count()],
        path: vec![u],
        best: None,
        nodes: 0,
        limit: if d.len() <= EXACT_PATH_THRESHOLD { u64::MAX } else { HEURISTIC_PATH_NODES },
    };
    if u_in_d || d.contains(&v) {
        // A direct edge is a legal path when an endpoint is inside D.
        s.in_d[g.vertex_id(u)] = true;
        s.on_path[g.vertex_id(u)] = true;
    }
    s.dfs();
    s.best.map(|(_, p)| p).ok_or(Error::NoPath)
}

fn shortest_through(g: &BipartiteGraph, in_d: &[bool], u: Vertex, v: Vertex, direct_ok: bool) -> Result<Vec<Vertex>> {
    if direct_ok && g.adjacent(u, v) {
        return Ok(vec![u, v]);
    }
    let mut parent = vec![NONE; g.vertex_count()];
    let uid = g.vertex_id(u);
    parent[uid] = uid;
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        for b in g.neighbors(a) {
            let bid = g.vertex_id(b);
            if b == v && a != u {
                let mut path = vec![v, a];
                let mut cur = g.vertex_id(a);
                while cur != uid {
                    cur = parent[cur];
                    path.push(g.vertex_from_id(cur));
                }
                path.reverse();
                return Ok(path);
            }
            if parent[bid] == NONE && in_d[bid] {
                parent[bid] = g.vertex_id(a);
                queue.push_back(b);
            }
        }
    }
    Err(Error::NoPath)
}
