use serde::{Deserialize, Serialize};

use crate::connectivity::vertex_connectivity;
use crate::constructions::{build_gk, GkParams};
use crate::error::{Error, Result};
use crate::graph::degree_profile;
use crate::search::{has_x_spanning_cycle, longest_cycle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum LongestResult {
    /// Exact length of a longest cycle.
    Exact(usize),
    /// The exact search ran out of budget; only the `2n` decision is known.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub k: usize,
    pub delta: usize,
    pub parts: Vec<usize>,
    pub n: usize,
    pub m: usize,
    /// Largest `m` the bound `(k+1)(δ−k)+k−1` allows.
    pub bound_m: usize,
    pub connectivity: usize,
    pub k_connected: bool,
    pub min_x_degree: usize,
    pub longest: LongestResult,
    pub x_spanning: bool,
    /// `k`-connected, `δ ≥ n`, one edge past the bound, and no `2n`-cycle.
    pub witness: bool,
}

/// `k + 1` parts summing to `δ`, as equal as possible.
pub fn default_parts(k: usize, delta: usize) -> Vec<usize> {
    let q = k + 1;
    (0..q).map(|i| delta / q + usize::from(i < delta % q)).collect()
}

/// Builds `G_k` at `m = (k+1)(δ−k)+k` and reports whether it shows the
/// edge bound cannot be relaxed by one.
pub fn sharpness_report(k: usize, delta: usize, parts: Option<Vec<usize>>, budget: u64) -> Result<SharpnessReport> {
    if delta < k {
        return Err(Error::InvalidParams(format!("δ = {delta} is below k = {k}")));
    }
    let parts = parts.unwrap_or_else(|| default_parts(k, delta));
    let (g, _) = build_gk(&GkParams::new(k, parts.clone(), delta)?)?;
    let connectivity = vertex_connectivity(&g);
    let x_spanning = has_x_spanning_cycle(&g, budget)?;
    let longest = match longest_cycle(&g, budget) {
        Ok(c) => LongestResult::Exact(c.map_or(0, |c| c.len())),
        Err(Error::BudgetExceeded { .. }) => LongestResult::Unknown,
        Err(e) => return Err(e),
    };
    let bound_m = (k + 1) * (delta - k) + k - 1;
    let min_x_degree = degree_profile(&g).min_x_degree;
    let k_connected = connectivity >= k;
    Ok(SharpnessReport {
        k,
        delta,
        n: g.n(),
        m: g.m(),
        parts,
        bound_m,
        connectivity,
        k_connected,
        min_x_degree,
        longest,
        x_spanning,
        witness: k_connected && min_x_degree >= g.n() && g.m() == bound_m + 1 && !x_spanning,
    })
}
