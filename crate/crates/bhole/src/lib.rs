//! Bipartite-hole-number and hamiltonicity toolkit for small graphs.
//!
//! The crate provides an immutable bitset graph type with graph6 I/O,
//! exact invariants (σ₂, vertex connectivity, the bipartite-hole-number α̃
//! with certificates), exact Hamilton cycle/path solvers with an
//! independent subset-DP cross-check, rotation closures, and a registry of
//! Ore- and Dirac-type sufficient conditions that can be verified
//! exhaustively over enumerated or ingested graph corpora.

pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod invariants;
pub mod theorems;

pub use error::{Error, Result};
pub use generate::Family;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use hamilton::{HamiltonSequence, SeqKind};
pub use invariants::{CoverageProfile, HoleNumberCertificate, HoleWitness, Sigma2};
pub use theorems::{TheoremId, VerificationReport};
