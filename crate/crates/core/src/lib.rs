//! Zero forcing on claw-free cubic graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`graph`]: an immutable simple graph with recognition predicates and
//!   a small-instance isomorphism test ([`iso`]).
//! * [`forcing`]: the color-change rule, chronicles of plays, and exact
//!   subset-search solvers for the zero forcing and total forcing numbers.
//! * [`structure`]: the unique triangle/diamond partition of a connected
//!   claw-free cubic graph, its contraction multigraph and shortest cycles.
//! * [`certify`]: a greedy construction of a forcing set `S` together with an
//!   independent set `I` (`|S| = |I| + 1`) and a matching of forcing edges
//!   (`|M| = |S|`), plus an independent verifier.
//! * [`solvers`]: exact independence and matching numbers and the
//!   consolidated [`solvers::BoundsReport`].
//! * [`generators`]: named graphs, unit-multigraph inflation, seeded random
//!   instances and exhaustive enumeration of small orders.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certify;
pub mod forcing;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod solvers;
pub mod structure;
mod vertex_set;

pub use certify::{build_certificate, verify_certificate, Certificate, CertificateMode};
pub use forcing::{closure, Chronicle, Play, SolverConfig};
pub use graph::{Graph, GraphError};
pub use iso::are_isomorphic;
pub use structure::{triangle_diamond_partition, Unit, UnitKind, UnitMultigraph, UnitPartition};
pub use vertex_set::VertexSet;

/// Vertex identifier; vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;
