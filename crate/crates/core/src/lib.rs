//! Extremal bipartite graphs and hypergraphs around Dirac-type conditions
//! for Hamiltonian Berge cycles.
//!
//! The crate covers the bipartite/hypergraph data model and incidence
//! transform ([`graph`], [`hypergraph`], [`canon`], [`io`]), connectivity
//! and fans ([`connectivity`]), the extremal constructions
//! ([`constructions`]), exact cycle solvers ([`search`]), best-triple
//! cycle surgery ([`surgery`]) and exhaustive or sampled verification of
//! the degree conditions ([`verify`]).

pub mod canon;
pub mod connectivity;
pub mod constructions;
pub mod cycle;
pub mod error;
mod flow;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod par;
pub mod search;
pub mod surgery;
pub mod verify;

pub use canon::{canonical_encode, canonical_form, GraphEncoding};
pub use connectivity::{is_k_connected, max_fan, vertex_connectivity, Fan};
pub use cycle::{berge_from_incidence_cycle, AltCycle, BergeCycle};
pub use error::{Error, Result};
pub use graph::{components_off_cycle, degree_profile, BipartiteGraph, DegreeProfile, Vertex};
pub use hypergraph::{incidence_graph, to_hypergraph, Hypergraph};
