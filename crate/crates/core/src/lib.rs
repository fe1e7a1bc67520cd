//! Exact computation of fair domination invariants on small graphs.
//!
//! A fair dominating set is a dominating set whose outside vertices all see
//! the same number of set members among their neighbors; `fd` is the
//! minimum size of one, `outr` the maximum size of an out-regular set, and
//! the two are complementary. This crate provides:
//!
//! - bit-vector graphs capped at 62 vertices ([`graph`]),
//! - bit-exact graph6 plus edge-list/DOT interchange ([`io`]),
//! - generators for the named families and exhaustive corpora of labeled
//!   trees, polygon triangulations and labeled graphs ([`generators`]),
//! - exact classical invariants ([`invariants`]),
//! - exact fair domination solvers and constructive witnesses ([`fairdom`]),
//! - a registry of named checks with machine-readable reports ([`verify`]).
//!
//! All solvers are exact exponential searches with deterministic
//! (cardinality, bit-mask) tie-breaks; every witness re-validates under its
//! defining predicate.

mod combinat;

pub mod error;
pub mod fairdom;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod ratio;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use fairdom::{fd_exact, kfd_exact, outr_exact, Fairness, FdResult, SolveMode};
pub use graph::{disjoint_union, DegreeProfile, Graph, VertexSet, MAX_ORDER};
pub use ratio::Ratio;
