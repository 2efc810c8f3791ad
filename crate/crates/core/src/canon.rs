//! Canonical labeling under part-preserving isomorphism.
//!
//! X and Y are permuted independently. Columns are ordered by iterated
//! colour refinement; where refinement leaves a Y-cell ambiguous, each of
//! its vertices is individualized in turn (one per twin class) and the
//! smallest resulting certificate wins. The certificate is the row-sorted
//! adjacency matrix under the leaf's column order, so the canonical
//! representative always lists its rows in non-decreasing [`row_key`] order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::graph::BipartiteGraph;
use crate::io::format_bg;

/// Canonical `.bg` text; the dedup key used by verification logs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphEncoding {
    pub text: String,
}

/// Packs a row into MSB-first words so that comparing keys compares the
/// row's 0/1 vector lexicographically, column 0 first.
pub fn row_key(row: &[usize], m: usize) -> Vec<u64> {
    let mut words = vec![0u64; m.div_ceil(64).max(1)];
    for &y in row {
        words[y / 64] |= 1u64 << (63 - (y % 64));
    }
    words
}

pub fn cmp_rows(a: &[usize], b: &[usize], m: usize) -> Ordering {
    row_key(a, m).cmp(&row_key(b, m))
}

type Certificate = Vec<Vec<u64>>;

struct Search<'a> {
    g: &'a BipartiteGraph,
    best: Option<(Certificate, Vec<u32>)>,
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<u32> {
    let mut uniq: Vec<T> = sigs.to_vec();
    uniq.sort();
    uniq.dedup();
    sigs.iter().map(|s| uniq.binary_search(s).unwrap() as u32).collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&c| c as usize + 1)
}

impl<'a> Search<'a> {
    fn refine(&self, cx: &mut Vec<u32>, cy: &mut Vec<u32>) {
        let g = self.g;
        loop {
            let (kx, ky) = (cell_count(cx), cell_count(cy));
            let sig_x: Vec<(u32, Vec<u32>)> = (0..g.n())
                .map(|x| {
                    let mut counts = vec![0u32; ky];
                    for &y in g.x_neighbors(x) {
                        counts[cy[y] as usize] += 1;
                    }
                    (cx[x], counts)
                })
                .collect();
            let sig_y: Vec<(u32, Vec<u32>)> = (0..g.m())
                .map(|y| {
                    let mut counts = vec![0u32; kx];
                    for &x in g.y_neighbors(y) {
                        counts[cx[x] as usize] += 1;
                    }
                    (cy[y], counts)
                })
                .collect();
            let nx = rank(&sig_x);
            let ny = rank(&sig_y);
            let stable = cell_count(&nx) == kx && cell_count(&ny) == ky;
            *cx = nx;
            *cy = ny;
            if stable {
                return;
            }
        }
    }

    fn certificate(&self, cy: &[u32]) -> Certificate {
        let m = self.g.m();
        let mut rows: Vec<Vec<u64>> = self
            .g
            .rows()
            .iter()
            .map(|row| {
                let relabeled: Vec<usize> = row.iter().map(|&y| cy[y] as usize).collect();
                row_key(&relabeled, m)
            })
            .collect();
        rows.sort();
        rows
    }

    fn descend(&mut self, mut cx: Vec<u32>, mut cy: Vec<u32>) {
        self.refine(&mut cx, &mut cy);
        let ky = cell_count(&cy);
        if ky == self.g.m() {
            let cert = self.certificate(&cy);
            if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
                self.best = Some((cert, cy));
            }
            return;
        }
        let mut sizes = vec![0usize; ky];
        for &c in &cy {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let mut tried: Vec<usize> = Vec::new();
        for y in 0..self.g.m() {
            if cy[y] != target {
                continue;
            }
            // Twins (equal X-neighbourhoods) give identical subtrees.
            if tried.iter().any(|&t| self.g.y_neighbors(t) == self.g.y_neighbors(y)) {
                continue;
            }
            tried.push(y);
            let mut ny: Vec<u32> = cy.iter().map(|&c| 2 * c + 1).collect();
            ny[y] = 2 * target;
            self.descend(cx.clone(), rank(&ny));
        }
    }
}

/// Column relabeling (old Y index -> new Y index) of the canonical form.
fn canonical_column_order(g: &BipartiteGraph) -> Vec<u32> {
    if g.m() == 0 {
        return Vec::new();
    }
    let mut s = Search { g, best: None };
    s.descend(vec![0; g.n()], vec![0; g.m()]);
    s.best.expect("search always reaches a leaf").1
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &BipartiteGraph) -> BipartiteGraph {
    let order = canonical_column_order(g);
    let m = g.m();
    let mut rows: Vec<Vec<usize>> = g
        .rows()
        .iter()
        .map(|row| {
            let mut r: Vec<usize> = row.iter().map(|&y| order[y] as usize).collect();
            r.sort_unstable();
            r
        })
        .collect();
    rows.sort_by(|a, b| cmp_rows(a, b, m));
    BipartiteGraph::from_rows_unchecked(g.n(), m, rows)
}

pub fn canonical_encode(g: &BipartiteGraph) -> GraphEncoding {
    GraphEncoding { text: format_bg(&canonical_form(g)) }
}

/// True when `g` is its own canonical representative.
pub fn is_canonical(g: &BipartiteGraph) -> bool {
    canonical_form(g).rows() == g.rows()
}
