//! Predicate checking, isomorph-free enumeration, exhaustive and sampled
//! verification runs, and sharpness reports.
//!
//! A [`PredicateConfig`] names a connectivity requirement, a degree bound
//! on `(n, m, δ)` and a cycle-length target. [`check_graph`] evaluates one
//! graph; [`verify_theorem`] runs it over every isomorphism class of a
//! parameter range, sharded by first row; [`hunt`] samples instead.

mod enumerate;
mod run;
mod sharpness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_encode, GraphEncoding};
use crate::connectivity::is_k_connected;
use crate::cycle::AltCycle;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::search::{find_cycle_at_least_with_stats, find_x_spanning_cycle_with_stats, SearchStats};

pub use enumerate::{candidate_rows, enumerate_shard, enumerate_space, projected_count, SpaceParams};
pub use run::{
    hunt, verify_theorem, Finding, HuntParams, HuntReport, Mode, RunFiles, Totals, VerifyParams, VerifyReport,
    DEFAULT_EXHAUSTIVE_LIMIT,
};
pub use sharpness::{default_parts, sharpness_report, LongestResult, SharpnessReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeBound {
    /// `δ ≥ max{n, (m+5)/3}`.
    TwoConnThird,
    /// `δ ≥ max{n, (m+10)/4}`.
    ThreeConnQuarter,
    /// `δ ≥ n` and `m ≤ (k+1)(δ−k)+k−1`.
    KConnGeneral,
    /// `n > δ` and `m ≤ ⌊2(n−α)/(δ−1−α)⌋(δ−2)+1`, `α = 1` for even `δ`.
    LongCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// A cycle of length `2n`.
    XSpanning,
    /// A cycle of length at least `2 min(n, δ)`.
    TwiceMinNDelta,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PredicateConfig {
    pub name: String,
    pub connectivity_k: usize,
    pub degree_bound: DegreeBound,
    pub target: Target,
}

/// Parity correction used by [`DegreeBound::LongCycle`].
pub fn alpha(delta: usize) -> usize {
    usize::from(delta.is_multiple_of(2))
}

impl PredicateConfig {
    pub fn three_conn_quarter() -> Self {
        Self::build("three_conn_quarter", 3, DegreeBound::ThreeConnQuarter, Target::XSpanning)
    }

    pub fn two_conn_third() -> Self {
        Self::build("two_conn_third", 2, DegreeBound::TwoConnThird, Target::XSpanning)
    }

    pub fn k_conn_general(k: usize) -> Self {
        Self::build("k_conn_general", k, DegreeBound::KConnGeneral, Target::XSpanning)
    }

    pub fn long_cycle() -> Self {
        Self::build("long_cycle", 2, DegreeBound::LongCycle, Target::TwiceMinNDelta)
    }

    fn build(name: &str, k: usize, degree_bound: DegreeBound, target: Target) -> Self {
        PredicateConfig { name: name.into(), connectivity_k: k, degree_bound, target }
    }

    /// Looks a predicate up by name; `k` is required for `k_conn_general`
    /// and must match the fixed connectivity of the others if given.
    pub fn named(name: &str, k: Option<usize>) -> Result<Self> {
        let cfg = match name {
            "three_conn_quarter" => Self::three_conn_quarter(),
            "two_conn_third" => Self::two_conn_third(),
            "long_cycle" => Self::long_cycle(),
            "k_conn_general" => {
                let k = k.ok_or_else(|| Error::InvalidParams("k_conn_general needs k".into()))?;
                return Ok(Self::k_conn_general(k));
            }
            other => return Err(Error::InvalidParams(format!("unknown predicate {other:?}"))),
        };
        match k {
            Some(k) if k != cfg.connectivity_k => {
                Err(Error::InvalidParams(format!("{name} fixes k = {}, got {k}", cfg.connectivity_k)))
            }
            _ => Ok(cfg),
        }
    }

    /// The degree bound at `(n, m, δ)`; `false` where the formula is undefined.
    pub fn bound_holds(&self, n: usize, m: usize, delta: usize) -> bool {
        let k = self.connectivity_k;
        match self.degree_bound {
            DegreeBound::TwoConnThird => delta >= n && 3 * delta >= m + 5,
            DegreeBound::ThreeConnQuarter => delta >= n && 4 * delta >= m + 10,
            DegreeBound::KConnGeneral => delta >= n && delta >= k && m < (k + 1) * (delta - k) + k,
            DegreeBound::LongCycle => {
                let a = alpha(delta);
                if n <= delta || delta < 2 + a || n < a {
                    return false;
                }
                m <= (2 * (n - a)) / (delta - 1 - a) * (delta - 2) + 1
            }
        }
    }

    /// The `δ` under which `g` is judged: its minimum X-degree, or for
    /// [`DegreeBound::LongCycle`] the largest `δ` up to it that satisfies
    /// the bound (the target grows with `δ`). `None` if no `δ` qualifies.
    pub fn effective_delta(&self, g: &BipartiteGraph) -> Option<usize> {
        let min_deg = (0..g.n()).map(|x| g.x_neighbors(x).len()).min()?;
        match self.degree_bound {
            DegreeBound::LongCycle => (0..=min_deg).rev().find(|&d| self.bound_holds(g.n(), g.m(), d)),
            _ => self.bound_holds(g.n(), g.m(), min_deg).then_some(min_deg),
        }
    }

    /// Required number of X-vertices on the target cycle.
    pub fn target_half_len(&self, n: usize, delta: usize) -> usize {
        match self.target {
            Target::XSpanning => n,
            Target::TwiceMinNDelta => n.min(delta),
        }
    }
}

impl fmt::Display for PredicateConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for PredicateConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, k)) => {
                let k = k.parse().map_err(|_| Error::Parse(format!("bad k in {s:?}")))?;
                Self::named(name, Some(k))
            }
            None => Self::named(s, None),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    HypothesesNotMet,
    Pass,
    Fail,
    /// The solver ran out of budget; never counted as a pass.
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HypothesesNotMet => "hypotheses-not-met",
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "undecided",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub verdict: Verdict,
    /// The `δ` the hypotheses were evaluated at, if the bound held.
    pub delta: Option<usize>,
    /// Which hypothesis failed, for [`Verdict::HypothesesNotMet`].
    pub reason: Option<String>,
    /// A target cycle, for [`Verdict::Pass`].
    pub witness: Option<AltCycle>,
    pub stats: SearchStats,
}

impl CheckOutcome {
    fn not_met(delta: Option<usize>, reason: &str) -> Self {
        CheckOutcome {
            verdict: Verdict::HypothesesNotMet,
            delta,
            reason: Some(reason.into()),
            witness: None,
            stats: SearchStats::default(),
        }
    }
}

/// Checks the hypotheses of `config` on `g` and, if they hold, whether `g`
/// has the target cycle. Budget exhaustion yields [`Verdict::Undecided`].
pub fn check_graph(g: &BipartiteGraph, config: &PredicateConfig, budget: u64) -> Result<CheckOutcome> {
    check_graph_at(g, config, None, budget)
}

/// [`check_graph`] with the hypotheses evaluated at a fixed `δ`, as for a
/// member of `G(n, m, δ)`; `g` must then have every X-degree at least `δ`.
pub fn check_graph_at(
    g: &BipartiteGraph,
    config: &PredicateConfig,
    delta: Option<usize>,
    budget: u64,
) -> Result<CheckOutcome> {
    let delta = match delta {
        None => config.effective_delta(g),
        Some(d) => {
            let min_deg = (0..g.n()).map(|x| g.x_neighbors(x).len()).min().unwrap_or(0);
            (min_deg >= d && config.bound_holds(g.n(), g.m(), d)).then_some(d)
        }
    };
    let Some(delta) = delta else {
        return Ok(CheckOutcome::not_met(None, "degree bound"));
    };
    if !is_k_connected(g, config.connectivity_k) {
        return Ok(CheckOutcome::not_met(Some(delta), "connectivity"));
    }
    let found = match config.target {
        Target::XSpanning => find_x_spanning_cycle_with_stats(g, budget),
        Target::TwiceMinNDelta => find_cycle_at_least_with_stats(g, config.target_half_len(g.n(), delta), budget),
    };
    let (verdict, witness, stats) = match found {
        Ok((Some(c), stats)) => (Verdict::Pass, Some(c), stats),
        Ok((None, stats)) => (Verdict::Fail, None, stats),
        Err(Error::BudgetExceeded { budget }) => (Verdict::Undecided, None, SearchStats { nodes: budget }),
        Err(e) => return Err(e),
    };
    Ok(CheckOutcome { verdict, delta: Some(delta), reason: None, witness, stats })
}

/// A failure confirmed with an unlimited budget, or `None` if the
/// unlimited check disagrees.
pub(crate) fn confirm_failure(
    g: &BipartiteGraph,
    config: &PredicateConfig,
    delta: Option<usize>,
) -> Result<Option<CheckOutcome>> {
    let again = check_graph_at(g, config, delta, u64::MAX)?;
    Ok((again.verdict == Verdict::Fail).then_some(again))
}

pub(crate) fn encode(g: &BipartiteGraph) -> GraphEncoding {
    canonical_encode(g)
}
