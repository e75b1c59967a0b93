//! Exact computation and bound verification for matching-versus-graph size
//! Ramsey numbers.
//!
//! The library is organized around a small immutable [`Graph`] value (at most
//! 64 vertices, one adjacency bitmask per vertex) and pure functions on it:
//!
//! * [`graph`] — graph construction, structural queries, canonical codes,
//!   graph6 serialization, subgraph embedding search;
//! * [`matching`] — exact maximum matchings (general graphs via blossom
//!   contraction) and minimum vertex covers of bipartite graphs;
//! * [`arrowing`] — exact decision procedures for the arrowing relation
//!   `F -> (tK2, G)` with counterexample colorings as certificates;
//! * [`constructions`] — the bundled bipartite graphs `B(l1,..,lk)`, the
//!   arrowing hosts `U_t`, and the constructive star-transplant embedding;
//! * [`bounds`] — closed-form lower/upper bounds, the ratio envelope for the
//!   limit parameter, and the limit-classification family generator;
//! * [`solver`] — exact values by canonical enumeration of host graphs;
//! * [`verify`] — a randomized property suite that machine-checks the
//!   structural laws the other modules rely on.
//!
//! Everything is deterministic: searches traverse in fixed orders, the verify
//! suite derives per-property RNG streams from a single seed, and parallel
//! scans merge results in canonical order.

pub mod arrowing;
pub mod bounds;
pub mod constructions;
mod canon;
mod embed;
mod error;
pub mod graph;
mod graph6;
pub mod matching;
pub mod solver;
pub mod verify;

pub use error::Error;
pub use graph::{Edge, Graph, GraphStats, MAX_VERTICES};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
