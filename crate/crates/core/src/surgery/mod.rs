//! Best-triple machinery and cycle surgery.
//!
//! A triple is a cycle `C`, an X-vertex `x` off the cycle and a largest
//! `x, V(C)`-fan. Triples are ordered by [`triple_compare`]; the move
//! generators in [`moves`] rewire `C` through the fan, through the
//! off-cycle component of `x`, or across chords and common outside
//! neighbours, and [`improve_search`] drives them as a local search.

mod improve;
pub mod moves;
mod structure;
mod triple;

use serde::{Deserialize, Serialize};

use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::graph::Vertex;

pub use improve::{improve_search, ImproveConfig, ImproveOutcome, TraceRecord, STAGNATION_ROUNDS};
pub use moves::{propose_moves, Guarantee, MoveKind, MoveResult};
pub use structure::{
    classify_config_types, common_outside_neighbors, crossings, is_abundant, is_good_set, ConfigReport, ConfigType,
    GoodSetVerdict, GoodSetWitness, SegmentView,
};
pub use triple::{best_triple, triple_compare, triple_stats, Triple, TripleKey};

/// Which neighbour along the cycle [`successor`] returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// Nearest X-vertex clockwise, excluding `u`.
    XPlus,
    XMinus,
    YPlus,
    YMinus,
}

/// `x⁺(u)`, `x⁻(u)`, `y⁺(u)` or `y⁻(u)` on `c`.
pub fn successor(c: &AltCycle, u: Vertex, which: Step) -> Result<Vertex> {
    let p = c.position(u).ok_or(Error::NotOnCycle(u))?;
    // From an X-vertex the next X is two steps away; from a Y-vertex, one.
    let same_part = |want_x: bool| u.is_x() == want_x;
    let steps = match which {
        Step::XPlus => {
            if same_part(true) {
                2
            } else {
                1
            }
        }
        Step::XMinus => {
            if same_part(true) {
                -2
            } else {
                -1
            }
        }
        Step::YPlus => {
            if same_part(false) {
                2
            } else {
                1
            }
        }
        Step::YMinus => {
            if same_part(false) {
                -2
            } else {
                -1
            }
        }
    };
    Ok(c.at(p, steps))
}

pub(crate) fn x_plus(c: &AltCycle, u: Vertex) -> Vertex {
    successor(c, u, Step::XPlus).expect("vertex on cycle")
}

pub(crate) fn y_plus(c: &AltCycle, u: Vertex) -> Vertex {
    successor(c, u, Step::YPlus).expect("vertex on cycle")
}

pub(crate) fn y_minus(c: &AltCycle, u: Vertex) -> Vertex {
    successor(c, u, Step::YMinus).expect("vertex on cycle")
}
