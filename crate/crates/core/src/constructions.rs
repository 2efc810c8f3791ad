//! Extremal families `G_k(n_1, ..., n_{k+1}; δ)` and the hypergraph
//! family without a Hamiltonian Berge cycle, each with a checkable
//! certificate of its claimed properties.

use serde::{Deserialize, Serialize};

use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::{degree_profile, BipartiteGraph, Vertex};
use crate::hypergraph::Hypergraph;
use crate::search::{find_cycle_at_least, find_x_spanning_cycle, longest_cycle};

/// Parameters of `G_k(n_1, ..., n_{k+1}; δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkParams {
    pub k: usize,
    pub parts: Vec<usize>,
    pub delta: usize,
}

impl GkParams {
    pub fn new(k: usize, parts: Vec<usize>, delta: usize) -> Result<Self> {
        let p = Self { k, parts, delta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.k < 2 {
            return bad(format!("k = {} must be at least 2", self.k));
        }
        if self.parts.len() != self.k + 1 {
            return bad(format!("expected {} parts, got {}", self.k + 1, self.parts.len()));
        }
        if self.parts.contains(&0) {
            return bad("every part must be non-empty".into());
        }
        if self.parts.windows(2).any(|w| w[0] < w[1]) {
            return bad("parts must be non-increasing".into());
        }
        if self.delta <= self.k {
            return bad(format!("delta = {} must exceed k = {}", self.delta, self.k));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(k+1)(δ-k)+k`.
    pub fn m(&self) -> usize {
        (self.k + 1) * (self.delta - self.k) + self.k
    }

    /// Y-index of connector `a_i`, `i` in `1..=k`.
    pub fn connector(&self, i: usize) -> usize {
        (self.k + 1) * (self.delta - self.k) + i - 1
    }
}

/// What a construction claims about its longest cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LongestClaim {
    /// Longest cycle has exactly this many vertices.
    Exactly(usize),
    /// No cycle covers every X-vertex.
    NoSpanning,
    Unstated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claimed_n: usize,
    pub claimed_m: usize,
    pub claimed_x_degrees: Vec<usize>,
    pub claimed_min_x_degree: usize,
    pub claimed_longest: LongestClaim,
    /// Size of `cut`, when the construction names one.
    pub claimed_connectivity_ceiling: Option<usize>,
    /// Vertices whose removal disconnects the graph.
    pub cut: Vec<Vertex>,
}

pub fn build_gk(p: &GkParams) -> Result<(BipartiteGraph, Certificate)> {
    p.validate()?;
    let block = p.delta - p.k;
    let connectors: Vec<usize> = (1..=p.k).map(|i| p.connector(i)).collect();
    let mut rows = Vec::with_capacity(p.n());
    for (j, &size) in p.parts.iter().enumerate() {
        let mut row: Vec<usize> = (j * block..(j + 1) * block).collect();
        row.extend_from_slice(&connectors);
        rows.extend(std::iter::repeat_n(row, size));
    }
    let g = BipartiteGraph::from_rows(p.n(), p.m(), rows)?;
    let claimed_longest = match p.k {
        2 | 3 => LongestClaim::Exactly(2 * (p.n() - p.parts[p.k])),
        _ => LongestClaim::Unstated,
    };
    let cert = Certificate {
        claimed_n: p.n(),
        claimed_m: p.m(),
        claimed_x_degrees: vec![p.delta; p.n()],
        claimed_min_x_degree: p.delta,
        claimed_longest,
        claimed_connectivity_ceiling: Some(p.k),
        cut: connectors.into_iter().map(Vertex::Y).collect(),
    };
    Ok((g, cert))
}

/// Part sizes and edge size of the hypergraph family on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Con4Shape {
    pub v1: usize,
    pub v2: usize,
    pub edge_size: usize,
}

impl Con4Shape {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 4")));
        }
        Ok(Self { v1: (n + 3) / 2, v2: (n - 2) / 2, edge_size: n.div_ceil(4) })
    }

    /// Degree of a vertex of `V_1`: `C(|V_2|, s-1) + 1`.
    pub fn v1_degree(&self) -> usize {
        binomial(self.v2, self.edge_size - 1) + 1
    }

    /// Degree of a vertex of `V_2`: `|V_1| C(|V_2|-1, s-2)`.
    pub fn v2_degree(&self) -> usize {
        match (self.v2.checked_sub(1), self.edge_size.checked_sub(2)) {
            (Some(a), Some(b)) => self.v1 * binomial(a, b),
            _ => 0,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.v1 * binomial(self.v2, self.edge_size - 1) + 1
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `items`, each in the order of `items`.
fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    out.extend(subsets(&items[1..], k));
    out
}

/// `V_1 = {0, .., |V_1|-1}`, `V_2` the rest. Edges: every set of the edge
/// size meeting `V_1` in exactly one vertex, then `V_1` itself.
pub fn build_con4(n: usize) -> Result<(Hypergraph, Certificate)> {
    let shape = Con4Shape::new(n)?;
    let v2: Vec<usize> = (shape.v1..n).collect();
    let mut edges = Vec::with_capacity(shape.edge_count());
    for a in 0..shape.v1 {
        for rest in subsets(&v2, shape.edge_size - 1) {
            let mut e = vec![a];
            e.extend(rest);
            edges.push(e);
        }
    }
    edges.push((0..shape.v1).collect());
    let h = Hypergraph::new(n, edges)?;
    let claimed_x_degrees: Vec<usize> =
        (0..n).map(|v| if v < shape.v1 { shape.v1_degree() } else { shape.v2_degree() }).collect();
    let cert = Certificate {
        claimed_n: n,
        claimed_m: shape.edge_count(),
        claimed_min_x_degree: *claimed_x_degrees.iter().min().unwrap(),
        claimed_x_degrees,
        claimed_longest: LongestClaim::NoSpanning,
        claimed_connectivity_ceiling: None,
        cut: Vec::new(),
    };
    Ok((h, cert))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub checks: Vec<ClaimCheck>,
    /// Measured vertex connectivity, reported whether or not a cut is claimed.
    pub connectivity: usize,
    /// Exact longest cycle length, when the search finished within budget.
    pub longest: Option<usize>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, claim: &str, expected: impl ToString, actual: impl ToString, passed: bool) {
        self.checks.push(ClaimCheck {
            claim: claim.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
        });
    }
}

/// Re-derives every claim of `cert` on `g`. Longest-cycle claims are checked
/// exactly when the search fits in `budget`; otherwise only the absence of
/// an X-spanning cycle is decided, and the check fails if that also runs out.
pub fn check_certificate(g: &BipartiteGraph, cert: &Certificate, budget: u64) -> CertificateReport {
    let mut r = CertificateReport::default();
    let profile = degree_profile(g);
    r.push("n", cert.claimed_n, g.n(), cert.claimed_n == g.n());
    r.push("m", cert.claimed_m, g.m(), cert.claimed_m == g.m());
    r.push(
        "x_degrees",
        format!("{:?}", cert.claimed_x_degrees),
        format!("{:?}", profile.x_degrees),
        cert.claimed_x_degrees == profile.x_degrees,
    );
    r.push(
        "min_x_degree",
        cert.claimed_min_x_degree,
        profile.min_x_degree,
        cert.claimed_min_x_degree == profile.min_x_degree,
    );

    r.connectivity = vertex_connectivity(g);
    if let Some(ceiling) = cert.claimed_connectivity_ceiling {
        let in_range = cert.cut.iter().all(|&v| g.contains(v));
        let pieces = if in_range { g.components_where(|v| !cert.cut.contains(&v)).len() } else { 0 };
        let ok = in_range && cert.cut.len() == ceiling && pieces >= 2 && r.connectivity <= ceiling;
        r.push(
            "cut",
            format!("{ceiling} vertices separating the graph"),
            format!("{pieces} components, connectivity {}", r.connectivity),
            ok,
        );
    }

    let exact = longest_cycle(g, budget);
    if let Ok(c) = &exact {
        r.longest = Some(c.as_ref().map_or(0, |c| c.len()));
    }
    match cert.claimed_longest {
        LongestClaim::Unstated => {}
        LongestClaim::Exactly(len) => match r.longest {
            Some(actual) => r.push("longest", len, actual, actual == len),
            None => {
                // Too large for the exact search: decide the two sides of the claim.
                let above = find_cycle_at_least(g, len / 2 + 1, budget);
                let reach = find_cycle_at_least(g, len / 2, budget);
                let ok = matches!(above, Ok(None)) && matches!(reach, Ok(Some(_)));
                let actual = match (&above, &reach) {
                    (Err(_), _) | (_, Err(_)) => "undecided".to_string(),
                    (Ok(a), Ok(b)) => format!("longer cycle: {}, cycle of length {len}: {}", a.is_some(), b.is_some()),
                };
                r.push("longest", len, actual, ok);
            }
        },
        LongestClaim::NoSpanning => {
            let expected = format!("no cycle of length {}", 2 * g.n());
            match r.longest {
                Some(actual) => r.push("longest", expected, actual, actual < 2 * g.n()),
                None => match find_x_spanning_cycle(g, budget) {
                    Ok(None) => r.push("longest", expected, "none found", true),
                    Ok(Some(c)) => r.push("longest", expected, c.len(), false),
                    Err(e) => r.push("longest", expected, e, false),
                },
            }
        }
    }
    r
}
