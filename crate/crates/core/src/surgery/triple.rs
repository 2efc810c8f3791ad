use std::cmp::{Ordering, Reverse};
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::connectivity::{max_fan, Fan};
use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};

/// The five quantities that order triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleKey {
    /// `|C|`.
    pub cycle_len: usize,
    pub t: usize,
    pub t_y: usize,
    /// `|V(F)|`.
    pub fan_size: usize,
    /// `|V(D)|`.
    pub d_size: usize,
}

impl TripleKey {
    fn rank(&self) -> (usize, usize, usize, Reverse<usize>, Reverse<usize>) {
        (self.cycle_len, self.t, self.t_y, Reverse(self.fan_size), Reverse(self.d_size))
    }
}

/// `Greater` when `a` is better than `b`: longer cycle, then larger fan,
/// then more Y fan ends on the cycle, then fewer fan vertices, then a
/// smaller component.
pub fn triple_compare(a: &TripleKey, b: &TripleKey) -> Ordering {
    a.rank().cmp(&b.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub cycle: AltCycle,
    pub apex: usize,
    pub fan: Fan,
    /// `ℓ = |C| / 2`.
    pub half_len: usize,
    /// `T`, in fan order.
    pub targets: Vec<Vertex>,
    pub t: usize,
    pub t_x: usize,
    pub t_y: usize,
    /// `T̃ = N_C(D)`, in clockwise order from the cycle's first vertex.
    pub t_tilde: Vec<Vertex>,
    pub component: Vec<Vertex>,
    pub fan_size: usize,
}

impl Triple {
    pub fn key(&self) -> TripleKey {
        TripleKey {
            cycle_len: self.cycle.len(),
            t: self.t,
            t_y: self.t_y,
            fan_size: self.fan_size,
            d_size: self.component.len(),
        }
    }

    pub fn t_tilde_len(&self) -> usize {
        self.t_tilde.len()
    }

    /// The same triple seen on the reversed cycle.
    pub fn mirrored(&self) -> Triple {
        let cycle = self.cycle.reversed();
        let mut t_tilde = self.t_tilde.clone();
        t_tilde.sort_by_key(|&v| cycle.position(v));
        Triple { cycle, t_tilde, ..self.clone() }
    }

    pub fn in_component(&self, v: Vertex) -> bool {
        self.component.binary_search(&v).is_ok()
    }
}

/// Vertices of `G - V(C)` reachable from `start`, sorted.
fn component_of(g: &BipartiteGraph, c: &AltCycle, start: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.vertex_count()];
    seen[g.vertex_id(start)] = true;
    let mut out = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            let id = g.vertex_id(w);
            if !seen[id] && !c.contains(w) {
                seen[id] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort();
    out
}

pub fn triple_stats(g: &BipartiteGraph, c: &AltCycle, x: usize, f: &Fan) -> Result<Triple> {
    if f.apex != x {
        return Err(Error::InvalidParams(format!("fan apex x{} differs from x{x}", f.apex)));
    }
    f.check(g, c)?;
    let component = component_of(g, c, Vertex::X(x));
    let mut t_tilde: Vec<Vertex> =
        c.vertices().iter().copied().filter(|&u| g.neighbors(u).any(|w| component.binary_search(&w).is_ok())).collect();
    t_tilde.sort_by_key(|&v| c.position(v));
    let targets = f.targets();
    let t_x = targets.iter().filter(|v| v.is_x()).count();
    Ok(Triple {
        cycle: c.clone(),
        apex: x,
        fan: f.clone(),
        half_len: c.half_len(),
        t: targets.len(),
        t_x,
        t_y: targets.len() - t_x,
        targets,
        t_tilde,
        component,
        fan_size: f.vertex_count(),
    })
}

/// Best triple on a fixed cycle: every off-cycle X-vertex with its largest
/// fan, the smallest index winning ties. `None` when `C` covers X.
pub fn best_triple(g: &BipartiteGraph, c: &AltCycle) -> Result<Option<Triple>> {
    let mut best: Option<Triple> = None;
    for x in 0..g.n() {
        if c.contains(Vertex::X(x)) {
            continue;
        }
        let t = triple_stats(g, c, x, &max_fan(g, x, c)?)?;
        if best.as_ref().is_none_or(|b| triple_compare(&t.key(), &b.key()) == Ordering::Greater) {
            best = Some(t);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gk, GkParams};
    use proptest::prelude::*;

    fn key(c: usize, t: usize, ty: usize, f: usize, d: usize) -> TripleKey {
        TripleKey { cycle_len: c, t, t_y: ty, fan_size: f, d_size: d }
    }

    #[test]
    fn tiers_in_order() {
        assert_eq!(triple_compare(&key(10, 3, 0, 9, 9), &key(8, 5, 5, 1, 1)), Ordering::Greater);
        assert_eq!(triple_compare(&key(8, 4, 0, 9, 9), &key(8, 3, 3, 1, 1)), Ordering::Greater);
        assert_eq!(triple_compare(&key(8, 3, 2, 9, 9), &key(8, 3, 1, 1, 1)), Ordering::Greater);
        assert_eq!(triple_compare(&key(8, 3, 1, 4, 9), &key(8, 3, 1, 5, 1)), Ordering::Greater);
        assert_eq!(triple_compare(&key(8, 3, 1, 4, 2), &key(8, 3, 1, 4, 3)), Ordering::Greater);
        assert_eq!(triple_compare(&key(8, 3, 1, 4, 2), &key(8, 3, 1, 4, 2)), Ordering::Equal);
    }

    #[test]
    fn direct_fan_stats() {
        let g = BipartiteGraph::from_rows(4, 3, vec![vec![0, 1, 2]; 4]).unwrap();
        let c = AltCycle::from_parts(&g, &[0, 1, 2], &[0, 1, 2]).unwrap();
        let t = triple_stats(&g, &c, 3, &max_fan(&g, 3, &c).unwrap()).unwrap();
        assert_eq!((t.t, t.t_x, t.t_y, t.fan_size), (3, 0, 3, 4));
        assert_eq!(t.component, vec![Vertex::X(3)]);
        assert_eq!(t.t_tilde.len(), 3);
    }

    #[test]
    fn x_targets_through_off_cycle_y() {
        // Apex x3 reaches the three cycle X-vertices through y3.
        let g = BipartiteGraph::from_rows(4, 4, vec![vec![0, 2, 3], vec![0, 1, 3], vec![1, 2, 3], vec![3]]).unwrap();
        let c = AltCycle::from_parts(&g, &[0, 1, 2], &[0, 1, 2]).unwrap();
        let t = triple_stats(&g, &c, 3, &max_fan(&g, 3, &c).unwrap()).unwrap();
        assert_eq!((t.t, t.t_x, t.t_y), (1, 1, 0));
        assert_eq!(t.t_tilde.len(), 3);
        assert!(t.t <= t.t_tilde_len());
    }

    #[test]
    fn sharpness_instance_has_three_connectors() {
        let (g, _) = build_gk(&GkParams::new(3, vec![3, 3, 3, 3], 12).unwrap()).unwrap();
        // Cycle through groups 1..3 using connectors a1, a2, a3 between groups.
        let (a1, a2, a3) = (36, 37, 38);
        let c = AltCycle::from_parts(&g, &[0, 1, 2, 3, 4, 5, 6, 7, 8], &[0, 1, a1, 9, 10, a2, 18, 19, a3]).unwrap();
        let t = triple_stats(&g, &c, 9, &max_fan(&g, 9, &c).unwrap()).unwrap();
        assert_eq!(t.t_tilde, vec![Vertex::Y(a1), Vertex::Y(a2), Vertex::Y(a3)]);
        assert_eq!(t.t, 3);
        let best = best_triple(&g, &c).unwrap().unwrap();
        assert_eq!(best.apex, 9);
    }

    proptest! {
        #[test]
        fn compare_is_a_strict_weak_order(
            a in (0usize..4, 0usize..4, 0usize..4, 0usize..4, 0usize..4),
            b in (0usize..4, 0usize..4, 0usize..4, 0usize..4, 0usize..4),
            c in (0usize..4, 0usize..4, 0usize..4, 0usize..4, 0usize..4),
        ) {
            let k = |t: (usize, usize, usize, usize, usize)| key(t.0, t.1, t.2, t.3, t.4);
            let (a, b, c) = (k(a), k(b), k(c));
            prop_assert_eq!(triple_compare(&a, &a), Ordering::Equal);
            prop_assert_eq!(triple_compare(&a, &b), triple_compare(&b, &a).reverse());
            if triple_compare(&a, &b) == Ordering::Greater && triple_compare(&b, &c) == Ordering::Greater {
                prop_assert_eq!(triple_compare(&a, &c), Ordering::Greater);
            }
            if triple_compare(&a, &b) == Ordering::Equal && triple_compare(&b, &c) == Ordering::Equal {
                prop_assert_eq!(triple_compare(&a, &c), Ordering::Equal);
            }
        }
    }
}
