//! Exact combinatorics and integer lattice algebra for the quasisymmetric
//! Grassmannian: noncrossing partitions, the quasisymmetric Johnson graph,
//! Plücker vanishing charts, quasisymmetric polynomial presentations, GKM
//! flowup classes and moment polytopes.

pub mod combinatorics;
pub mod error;
pub mod gkm;
pub mod graphs;
pub mod lattice;
pub mod noncrossing;
pub mod pluecker;
pub mod polyring;
pub mod polytopes;
pub mod presentations;
pub mod verify;

pub use combinatorics::{Composition, FrobeniusSymbol, Partition, Permutation, RSubset};
pub use error::{Error, Result};
pub use graphs::EdgeLabeledGraph;
pub use noncrossing::{NcPermutation, ZigzagTree};
pub use polyring::IntPolynomial;

/// Default upper bound on `n` for enumerations over `NC_n`.
pub const DEFAULT_MAX_N: usize = 12;

/// The enumeration bound, overridable through `QGRASS_MAX_N`.
pub fn max_n() -> usize {
    std::env::var("QGRASS_MAX_N").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_N)
}
