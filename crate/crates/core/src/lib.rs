//! Diverse solutions for subset-minimization problems.
//!
//! Given a problem whose solutions are subsets of a finite domain (vertex
//! covers, hitting sets, line covers, feedback arc sets), a *diverse* query
//! asks for `r` solutions of size at most `k` whose pairwise Hamming
//! distances sum to at least `d`. This crate answers such queries in two
//! complementary ways:
//!
//! * dynamic programming over rooted tree decompositions, either through the
//!   generic [`engine`] that evaluates any [`engine::DynamicCore`] (and the
//!   product construction in [`cores::DiverseProductCore`] that turns `r` cores into a
//!   core for the diverse problem), or through the hand-written table DP in
//!   [`cores::solve_diverse_vc_direct`];
//! * loss-less kernelization ([`kernels`]), which shrinks an instance while
//!   keeping track of forced and freely-addable elements, so that the diverse
//!   question can be answered on a much smaller instance.
//!
//! [`oracle`] is a brute-force reference solver for small instances, and
//! [`cli`] wires everything into the `diversekit` binary.
//!
//! See the crate's `examples/` directory for one runnable program per
//! capability.

pub mod cli;
pub mod cores;
pub mod decomposition;
pub mod diversity;
pub mod engine;
mod error;
pub mod instances;
pub mod kernels;
pub mod oracle;

pub use error::{Error, Result};

/// Stable identifier of a domain element (vertex, line or arc).
///
/// Ids survive kernelization: an element removed and later recovered keeps
/// the id it had in the input instance.
pub type ElementId = usize;

/// Zero-based vertex index inside a single graph, hypergraph or tournament.
pub type Vertex = usize;
