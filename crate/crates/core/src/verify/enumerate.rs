use serde::{Deserialize, Serialize};

use crate::canon::{cmp_rows, is_canonical};
use crate::graph::BipartiteGraph;

/// `G(n, m, δ)` restricted to graphs whose every vertex has degree `≥ k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceParams {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub k: usize,
}

impl SpaceParams {
    pub fn new(n: usize, m: usize, delta: usize, k: usize) -> Self {
        SpaceParams { n, m, delta, k }
    }

    fn min_row(&self) -> usize {
        self.delta.max(self.k)
    }

    fn feasible(&self) -> bool {
        self.n > 0 && self.min_row() <= self.m
    }
}

fn subsets_of_size(m: usize, size: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(m: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for y in start..m {
            if m - y < size - cur.len() {
                break;
            }
            cur.push(y);
            rec(m, size, y + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, size, 0, &mut Vec::new(), out);
}

/// Every admissible X-row, in increasing [`cmp_rows`] order. Shard `s`
/// holds the graphs whose first (smallest) row is `candidate_rows(p)[s]`.
pub fn candidate_rows(p: &SpaceParams) -> Vec<Vec<usize>> {
    let mut rows = Vec::new();
    if !p.feasible() {
        return rows;
    }
    for size in p.min_row()..=p.m {
        subsets_of_size(p.m, size, &mut rows);
    }
    rows.sort_by(|a, b| cmp_rows(a, b, p.m));
    rows
}

/// Number of non-decreasing row sequences: an upper bound on the classes,
/// used to decide between exhaustive and sampled runs.
pub fn projected_count(p: &SpaceParams) -> u128 {
    let r = candidate_rows_len(p);
    if r == 0 {
        return 0;
    }
    // C(r + n - 1, n), saturating.
    let mut acc: u128 = 1;
    for i in 0..p.n as u128 {
        acc = acc.saturating_mul(r + i) / (i + 1);
    }
    acc
}

fn candidate_rows_len(p: &SpaceParams) -> u128 {
    if !p.feasible() {
        return 0;
    }
    (p.min_row()..=p.m).map(|s| crate::constructions::binomial(p.m, s) as u128).sum()
}

struct Walker<'a> {
    p: &'a SpaceParams,
    rows: &'a [Vec<usize>],
    chosen: Vec<usize>,
    col_deg: Vec<usize>,
}

impl Walker<'_> {
    fn descend(&mut self, from: usize, visit: &mut dyn FnMut(BipartiteGraph)) {
        let remaining = self.p.n - self.chosen.len();
        if self.col_deg.iter().any(|&d| d + remaining < self.p.k) {
            return;
        }
        if remaining == 0 {
            let rows: Vec<Vec<usize>> = self.chosen.iter().map(|&i| self.rows[i].clone()).collect();
            let g = BipartiteGraph::from_rows_unchecked(self.p.n, self.p.m, rows);
            if is_canonical(&g) {
                visit(g);
            }
            return;
        }
        for i in from..self.rows.len() {
            self.push(i);
            self.descend(i, visit);
            self.pop();
        }
    }

    fn push(&mut self, i: usize) {
        self.chosen.push(i);
        for &y in &self.rows[i] {
            self.col_deg[y] += 1;
        }
    }

    fn pop(&mut self) {
        let i = self.chosen.pop().unwrap();
        for &y in &self.rows[i] {
            self.col_deg[y] -= 1;
        }
    }
}

/// Calls `visit` on each canonical representative in shard `shard`.
pub fn enumerate_shard(p: &SpaceParams, rows: &[Vec<usize>], shard: usize, visit: &mut dyn FnMut(BipartiteGraph)) {
    if shard >= rows.len() {
        return;
    }
    let mut w = Walker { p, rows, chosen: Vec::with_capacity(p.n), col_deg: vec![0; p.m] };
    w.push(shard);
    w.descend(shard, visit);
}

/// One representative per part-preserving isomorphism class of
/// `G(n, m, δ)` with all degrees `≥ k`, shard by shard.
pub fn enumerate_space(n: usize, m: usize, delta: usize, k: usize) -> impl Iterator<Item = BipartiteGraph> {
    let p = SpaceParams::new(n, m, delta, k);
    let rows = candidate_rows(&p);
    (0..rows.len()).flat_map(move |s| {
        let mut out = Vec::new();
        enumerate_shard(&p, &rows, s, &mut |g| out.push(g));
        out
    })
}
