//! Cycle rewirings around a triple `(C, x, F)`.
//!
//! Each generator checks its pattern on `C`, assembles a closed walk from
//! arcs of `C`, fan paths `F[a, b]`, component paths `P_D[a, b]` and single
//! chords, and keeps the walk only if it is a valid cycle no shorter than
//! `C`. Every result records the X-vertices of `C` it is allowed to drop.
//! Generators are run on the triple and on its mirror image, which covers
//! the counterclockwise variants of each pattern.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::structure::{common_outside_neighbors, crossings, SegmentView};
use super::triple::Triple;
use super::{x_plus, y_minus, y_plus};
use crate::cycle::AltCycle;
use crate::graph::{BipartiteGraph, Vertex};
use crate::search::path_through_component;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// `a F[a,b] b C[b,a] a` for fan targets `a, b`.
    FanSplice,
    /// `a P_D[a,b] b C[b,a] a` for `a, b ∈ T̃`.
    ComponentSplice,
    /// `w C⁻[w,u] u y⁺(w) C[y⁺(w),v] v P_D[v,w] w` with `u = x⁺(v)`.
    ChordSplice,
    /// `x1 y⁺(x3) C[y⁺(x3),u1] u1 P_D[u1,x3] x3 C⁻[x3,x1] x1` with `x1 = x⁺(u1)`.
    CrossSplice,
    /// `x1 C[x1,u2] u2 P_D[u2,u1] u1 C⁻[u1,x2] x2 y x1` for an outside common neighbour `y`.
    ConSplice,
    /// Reroutes around a vertex `x3` crossed by `x⁺(u1)` and `x⁺(u2)`, dropping `x3`.
    DoubleCrossSplice,
    /// The other rerouting around a crossed vertex, also dropping it.
    NoCrossSplice,
    /// Uses an outside common neighbour of `x_{s,-1}` and `x_{s,1}`.
    ShortTypeSplice,
    /// Uses an outside common neighbour of `x_{s,-1}` and `x_{s+1,1}`.
    LongTypeSplice,
    /// Uses two long-type common neighbours at once, dropping only `u_1`.
    TwoLongSplice,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::FanSplice => "fan_splice",
            MoveKind::ComponentSplice => "component_splice",
            MoveKind::ChordSplice => "chord_splice",
            MoveKind::CrossSplice => "cross_splice",
            MoveKind::ConSplice => "con_splice",
            MoveKind::DoubleCrossSplice => "double_cross_splice",
            MoveKind::NoCrossSplice => "no_cross_splice",
            MoveKind::ShortTypeSplice => "short_type_splice",
            MoveKind::LongTypeSplice => "long_type_splice",
            MoveKind::TwoLongSplice => "two_long_splice",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Guarantee {
    StrictlyLonger,
    /// Same length; worth taking only if its best triple is better.
    EqualLength,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveResult {
    pub new_cycle: AltCycle,
    pub kind: MoveKind,
    pub guarantee: Guarantee,
    /// X-vertices of the old cycle the move may leave out.
    pub sacrificed: Vec<usize>,
}

/// A walk under construction; `None` once a piece fails to connect.
struct Walk(Option<Vec<Vertex>>);

impl Walk {
    fn at(v: Vertex) -> Self {
        Walk(Some(vec![v]))
    }

    /// Appends a path that starts at the current end.
    fn path(mut self, p: &[Vertex]) -> Self {
        if let Some(w) = &mut self.0 {
            if p.first() == w.last() {
                w.extend_from_slice(&p[1..]);
            } else {
                self.0 = None;
            }
        }
        self
    }

    fn step(mut self, v: Vertex) -> Self {
        if let Some(w) = &mut self.0 {
            w.push(v);
        }
        self
    }

    fn close(self, g: &BipartiteGraph) -> Option<AltCycle> {
        let mut w = self.0?;
        if w.len() < 2 || w.first() != w.last() {
            return None;
        }
        w.pop();
        AltCycle::new(g, w).ok()
    }
}

/// Memoised `P_D` paths keyed by endpoints.
type PathCache = RefCell<HashMap<(Vertex, Vertex), Option<Vec<Vertex>>>>;

struct Gen<'a> {
    g: &'a BipartiteGraph,
    t: &'a Triple,
    c: &'a AltCycle,
    paths: PathCache,
    out: Vec<MoveResult>,
}

impl<'a> Gen<'a> {
    fn new(g: &'a BipartiteGraph, t: &'a Triple) -> Self {
        Gen { g, t, c: &t.cycle, paths: RefCell::new(HashMap::new()), out: Vec::new() }
    }

    /// `P_D[a, b]`, maximizing internal X-vertices.
    fn pd(&self, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
        if let Some(p) = self.paths.borrow().get(&(a, b)) {
            return p.clone();
        }
        let p = path_through_component(self.g, self.c, &self.t.component, a, b, true).ok();
        let mut rev = p.clone();
        if let Some(r) = &mut rev {
            r.reverse();
        }
        let mut cache = self.paths.borrow_mut();
        cache.insert((a, b), p.clone());
        cache.insert((b, a), rev);
        p
    }

    /// Paths from `a` to `b` through `D`: the fan path if both are targets,
    /// and `P_D[a, b]` when it differs.
    fn links(&self, a: Vertex, b: Vertex) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        if let Some(f) = self.t.fan.path_between(a, b) {
            out.push(f);
        }
        if let Some(p) = self.pd(a, b) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// X-vertices strictly inside the clockwise arc from `a` to `b`.
    fn inner_xs(&self, a: Vertex, b: Vertex) -> Vec<usize> {
        let arc = self.c.arc(a, b);
        arc[1..arc.len() - 1].iter().filter(|v| v.is_x()).map(|v| v.index()).collect()
    }

    fn emit(&mut self, kind: MoveKind, walk: Walk, sacrificed: Vec<usize>) {
        let Some(new_cycle) = walk.close(self.g) else { return };
        let guarantee = match new_cycle.len().cmp(&self.c.len()) {
            std::cmp::Ordering::Greater => Guarantee::StrictlyLonger,
            std::cmp::Ordering::Equal => Guarantee::EqualLength,
            std::cmp::Ordering::Less => return,
        };
        debug_assert!(
            self.c.xs().all(|x| new_cycle.contains(Vertex::X(x)) || sacrificed.contains(&x)),
            "{kind:?} dropped an X-vertex it does not account for"
        );
        self.out.push(MoveResult { new_cycle, kind, guarantee, sacrificed });
    }

    fn fan_splices(&mut self) {
        let targets = self.t.targets.clone();
        for &a in &targets {
            for &b in &targets {
                if a == b {
                    continue;
                }
                let inner = self.inner_xs(a, b);
                if inner.len() > 1 {
                    continue;
                }
                let Some(f) = self.t.fan.path_between(a, b) else { continue };
                let w = Walk::at(a).path(&f).path(&self.c.arc(b, a));
                self.emit(MoveKind::FanSplice, w, inner);
            }
        }
    }

    fn component_splices(&mut self) {
        let tt = self.t.t_tilde.clone();
        for &a in &tt {
            for &b in &tt {
                if a == b {
                    continue;
                }
                let inner = self.inner_xs(a, b);
                if inner.len() > 1 {
                    continue;
                }
                let Some(p) = self.pd(a, b) else { continue };
                let w = Walk::at(a).path(&p).path(&self.c.arc(b, a));
                self.emit(MoveKind::ComponentSplice, w, inner);
            }
        }
    }

    fn chord_splices(&mut self) {
        let tt = self.t.t_tilde.clone();
        for &w in tt.iter().filter(|v| v.is_x()) {
            let yw = y_plus(self.c, w);
            for &v in &tt {
                let u = x_plus(self.c, v);
                if v == w || u == w || !self.g.adjacent(u, yw) {
                    continue;
                }
                let Some(p) = self.pd(v, w) else { continue };
                // `u y⁺(w)` is the chord.
                let walk = Walk::at(w).path(&self.c.arc_back(w, u)).step(yw).path(&self.c.arc(yw, v)).path(&p);
                self.emit(MoveKind::ChordSplice, walk, Vec::new());
            }
        }
    }

    fn cross_splices(&mut self) {
        let tt = self.t.t_tilde.clone();
        for &u1 in &tt {
            let x1 = x_plus(self.c, u1);
            for &x3 in tt.iter().filter(|v| v.is_x()) {
                if x3 == x1 {
                    continue;
                }
                let y3 = y_plus(self.c, x3);
                if !self.g.adjacent(x1, y3) {
                    continue;
                }
                let Some(p) = self.pd(u1, x3) else { continue };
                let walk = Walk::at(x1).step(y3).path(&self.c.arc(y3, u1)).path(&p).path(&self.c.arc_back(x3, x1));
                self.emit(MoveKind::CrossSplice, walk, Vec::new());
            }
        }
    }

    /// Ordered pairs `(u1, u2)` of distinct connectors with distinct `x⁺`.
    fn connector_pairs(&self) -> Vec<(Vertex, Vertex, Vertex, Vertex)> {
        let tt = &self.t.t_tilde;
        let mut out = Vec::new();
        for &u1 in tt {
            for &u2 in tt {
                let (x1, x2) = (x_plus(self.c, u1), x_plus(self.c, u2));
                if u1 != u2 && x1 != x2 {
                    out.push((u1, u2, x1, x2));
                }
            }
        }
        out
    }

    fn con_splices(&mut self) {
        for (u1, u2, x1, x2) in self.connector_pairs() {
            for y in common_outside_neighbors(self.g, self.c, x1.index(), x2.index()) {
                let Some(p) = self.pd(u2, u1) else { break };
                let walk = Walk::at(x1)
                    .path(&self.c.arc(x1, u2))
                    .path(&p)
                    .path(&self.c.arc_back(u1, x2))
                    .step(Vertex::Y(y))
                    .step(x1);
                self.emit(MoveKind::ConSplice, walk, Vec::new());
            }
        }
    }

    fn crossed_vertex_splices(&mut self) {
        for (u1, u2, x1, x2) in self.connector_pairs() {
            let span = self.c.forward_distance(x1, x2).unwrap();
            for x3 in crossings(self.g, self.c, x1.index(), x2.index()) {
                let v3 = Vertex::X(x3);
                // Only the clockwise case; the mirrored one is the swapped pair.
                if self.c.forward_distance(x1, v3).unwrap() > span {
                    continue;
                }
                let (yp, ym) = (y_plus(self.c, v3), y_minus(self.c, v3));
                if let Some(p) = self.pd(u2, u1) {
                    let walk = Walk::at(x1)
                        .step(yp)
                        .path(&self.c.arc(yp, u2))
                        .path(&p)
                        .path(&self.c.arc_back(u1, x2))
                        .step(ym)
                        .path(&self.c.arc_back(ym, x1));
                    self.emit(MoveKind::DoubleCrossSplice, walk, vec![x3]);
                }
                if let Some(p) = self.pd(u1, u2) {
                    let walk = Walk::at(x1)
                        .path(&self.c.arc(x1, ym))
                        .step(x2)
                        .path(&self.c.arc(x2, u1))
                        .path(&p)
                        .path(&self.c.arc_back(u2, yp))
                        .step(x1);
                    self.emit(MoveKind::NoCrossSplice, walk, vec![x3]);
                }
            }
        }
    }

    fn segment_splices(&mut self) {
        let Ok(seg) = SegmentView::new(self.c, &self.t.t_tilde) else { return };
        let x = |i: isize, j: isize| seg.x(i, j).map(Vertex::X);
        for s in 1..=3isize {
            // Everything of X_{s-1} except its last vertex may be dropped.
            let mut dropped = seg.xs(s - 1);
            dropped.pop();
            if let (Some(a), Some(b)) = (x(s, -1), x(s, 1)) {
                for y in common_outside_neighbors(self.g, self.c, a.index(), b.index()) {
                    for link in self.links(seg.u(s - 1), seg.u(s)) {
                        let walk = Walk::at(seg.u(s))
                            .path(&self.c.arc_back(seg.u(s), a))
                            .step(Vertex::Y(y))
                            .path(&self.c.arc(b, seg.u(s - 1)))
                            .path(&link);
                        self.emit(MoveKind::ShortTypeSplice, walk, dropped.clone());
                    }
                }
            }
            if let (Some(a), Some(b)) = (x(s, -1), x(s + 1, 1)) {
                for y in common_outside_neighbors(self.g, self.c, a.index(), b.index()) {
                    for link in self.links(seg.u(s + 1), seg.u(s - 1)) {
                        let walk = Walk::at(a)
                            .path(&self.c.arc(a, seg.u(s + 1)))
                            .path(&link)
                            .path(&self.c.arc_back(seg.u(s - 1), b))
                            .step(Vertex::Y(y))
                            .step(a);
                        self.emit(MoveKind::LongTypeSplice, walk, dropped.clone());
                    }
                }
            }
            self.two_long(&seg, s);
        }
    }

    /// Long type at `r` and at `r + 1` simultaneously (indices relative to `r`).
    fn two_long(&mut self, seg: &SegmentView, r: isize) {
        let x = |i: isize, j: isize| seg.x(r - 1 + i, j).map(Vertex::X);
        let u = |i: isize| seg.u(r - 1 + i);
        let (Some(x3m), Some(x11), Some(x1m), Some(x21)) = (x(3, -1), x(1, 1), x(1, -1), x(2, 1)) else { return };
        let a_set = common_outside_neighbors(self.g, self.c, x3m.index(), x11.index());
        let b_set = common_outside_neighbors(self.g, self.c, x1m.index(), x21.index());
        let sacrificed: Vec<usize> = u(1).is_x().then(|| u(1).index()).into_iter().collect();
        for &a in &a_set {
            for &b in b_set.iter().filter(|&&b| b != a) {
                for link in self.links(u(2), u(3)) {
                    let walk = Walk::at(u(3))
                        .path(&self.c.arc(u(3), x1m))
                        .step(Vertex::Y(b))
                        .path(&self.c.arc(x21, x3m))
                        .step(Vertex::Y(a))
                        .path(&self.c.arc(x11, u(2)))
                        .path(&link);
                    self.emit(MoveKind::TwoLongSplice, walk, sacrificed.clone());
                }
            }
        }
    }

    fn run(mut self) -> Vec<MoveResult> {
        self.fan_splices();
        self.component_splices();
        self.chord_splices();
        self.cross_splices();
        self.con_splices();
        self.crossed_vertex_splices();
        self.segment_splices();
        self.out
    }
}

/// All moves that apply to `t` or to its mirror image, without duplicate
/// cycles. Results are valid cycles no shorter than `t.cycle`.
pub fn propose_moves(g: &BipartiteGraph, t: &Triple) -> Vec<MoveResult> {
    let mirror = t.mirrored();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in Gen::new(g, t).run().into_iter().chain(Gen::new(g, &mirror).run()) {
        if seen.insert(m.new_cycle.normalized()) {
            out.push(m);
        }
    }
    out
}
