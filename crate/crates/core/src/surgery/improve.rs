use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::moves::{propose_moves, Guarantee, MoveResult};
use super::triple::{best_triple, triple_compare, TripleKey};
use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};
use crate::search::random_cycle;

/// Rounds without a better triple before the search restarts.
pub const STAGNATION_ROUNDS: u64 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImproveConfig {
    /// Maximum number of rounds; each round proposes moves once.
    pub rounds: u64,
    pub seed: u64,
}

impl Default for ImproveConfig {
    fn default() -> Self {
        Self { rounds: 2_000, seed: 0 }
    }
}

/// One accepted step. `kind` is a move name, `sideways` for a random
/// equal-length move, or `restart`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub round: u64,
    pub kind: String,
    pub before: Option<TripleKey>,
    pub after: Option<TripleKey>,
    pub cycle_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImproveOutcome {
    pub best: AltCycle,
    /// The best cycle passes through every X-vertex.
    pub spans_x: bool,
    pub rounds: u64,
    pub restarts: u64,
    pub trace: Vec<TraceRecord>,
}

/// A 4-cycle through a random X-pair with two common neighbours, or any
/// cycle if no such pair exists.
fn seed_cycle(g: &BipartiteGraph, rng: &mut ChaCha8Rng) -> Option<AltCycle> {
    let mut pairs = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if g.common_neighbors(a, b).len() >= 2 {
                pairs.push((a, b));
            }
        }
    }
    if let Some(&(a, b)) = pairs.choose(rng) {
        let mut common = g.common_neighbors(a, b);
        common.shuffle(rng);
        let seq = vec![Vertex::X(a), Vertex::Y(common[0]), Vertex::X(b), Vertex::Y(common[1])];
        return AltCycle::new(g, seq).ok();
    }
    random_cycle(g, rng)
}

/// Local search over cycles: each round takes the best triple on the
/// current cycle, applies its longest strictly longer move, or else an
/// equal-length move whose best triple is better. Without either, a random
/// equal-length move is taken; after [`STAGNATION_ROUNDS`] such rounds, or
/// when no move applies at all, the search restarts from a fresh seed
/// cycle. The longest cycle seen is returned.
pub fn improve_search(g: &BipartiteGraph, config: &ImproveConfig) -> Result<ImproveOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cur = seed_cycle(g, &mut rng).ok_or_else(|| Error::InvalidGraph("graph has no cycle".into()))?;
    let mut best = cur.clone();
    let mut trace: Vec<TraceRecord> = Vec::new();
    let (mut stagnant, mut restarts, mut rounds) = (0, 0, 0);
    while rounds < config.rounds && best.half_len() < g.n() {
        rounds += 1;
        let Some(triple) = best_triple(g, &cur)? else { break };
        let key = triple.key();
        if let Some(last) = trace.last_mut() {
            if last.after.is_none() && last.cycle_len == cur.len() {
                last.after = Some(key);
            }
        }
        let moves = propose_moves(g, &triple);
        let mut record = |kind: &str, after: Option<TripleKey>, len: usize| {
            trace.push(TraceRecord { round: rounds, kind: kind.into(), before: Some(key), after, cycle_len: len });
        };

        let longer =
            moves.iter().filter(|m| m.guarantee == Guarantee::StrictlyLonger).fold(None::<&MoveResult>, |acc, m| {
                match acc {
                    Some(b) if b.new_cycle.len() >= m.new_cycle.len() => Some(b),
                    _ => Some(m),
                }
            });
        if let Some(m) = longer {
            record(m.kind.name(), None, m.new_cycle.len());
            cur = m.new_cycle.clone();
            stagnant = 0;
        } else {
            let equal: Vec<&MoveResult> = moves.iter().filter(|m| m.guarantee == Guarantee::EqualLength).collect();
            let mut better: Option<(TripleKey, &MoveResult)> = None;
            for &m in &equal {
                let Some(t) = best_triple(g, &m.new_cycle)? else { continue };
                let k = t.key();
                let beats_current = triple_compare(&k, &key) == Ordering::Greater;
                if beats_current && better.as_ref().is_none_or(|(b, _)| triple_compare(&k, b) == Ordering::Greater) {
                    better = Some((k, m));
                }
            }
            if let Some((k, m)) = better {
                record(m.kind.name(), Some(k), m.new_cycle.len());
                cur = m.new_cycle.clone();
                stagnant = 0;
            } else if !equal.is_empty() && stagnant < STAGNATION_ROUNDS {
                let m = equal.choose(&mut rng).unwrap();
                record("sideways", None, m.new_cycle.len());
                cur = m.new_cycle.clone();
                stagnant += 1;
            } else {
                cur = seed_cycle(g, &mut rng).expect("graph has a cycle");
                record("restart", None, cur.len());
                restarts += 1;
                stagnant = 0;
            }
        }
        if cur.len() > best.len() {
            best = cur.clone();
        }
    }
    Ok(ImproveOutcome { spans_x: best.half_len() == g.n(), best, rounds, restarts, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gk, GkParams};

    #[test]
    fn dense_graph_spans() {
        let g = BipartiteGraph::complete(4, 4);
        let out = improve_search(&g, &ImproveConfig::default()).unwrap();
        assert!(out.spans_x);
        assert_eq!(out.best.len(), 8);
        out.best.check_in(&g).unwrap();
    }

    #[test]
    fn sharpness_instance_stays_short() {
        let (g, _) = build_gk(&GkParams::new(3, vec![3, 3, 3, 3], 12).unwrap()).unwrap();
        let out = improve_search(&g, &ImproveConfig { rounds: 100, seed: 3 }).unwrap();
        assert!(!out.spans_x);
        assert_eq!(out.best.len(), 18);
    }

    #[test]
    fn same_seed_same_trace() {
        let (g, _) = build_gk(&GkParams::new(2, vec![2, 2, 1], 5).unwrap()).unwrap();
        let cfg = ImproveConfig { rounds: 120, seed: 9 };
        assert_eq!(improve_search(&g, &cfg).unwrap(), improve_search(&g, &cfg).unwrap());
    }

    #[test]
    fn forest_is_rejected() {
        let g = BipartiteGraph::from_rows(2, 2, vec![vec![0], vec![0, 1]]).unwrap();
        assert!(improve_search(&g, &ImproveConfig::default()).is_err());
    }
}
