//! Structure detection, exact oracles and certified colorings for
//! (P7, even-hole)-free graphs.
//!
//! The central claim checked here is that such graphs satisfy
//! `χ(G) <= ⌈5ω(G)/4⌉`. The crate recognizes the class, finds the blowup
//! structures the argument is built on, colors graphs through a traced
//! reduction pipeline, and runs an executable registry of the supporting
//! structural statements against generated instances.

pub mod bitset;
pub mod blowup;
pub mod cliques;
pub mod coloring;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracles;
pub mod recognizers;
pub mod structure;

#[cfg(test)]
pub(crate) mod testutil;

pub use bitset::VertexSet;
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{Graph, InducedSubgraph};
pub use oracles::OracleLimits;

/// The bound `⌈5ω/4⌉`.
pub fn five_quarters(omega: usize) -> usize {
    (5 * omega).div_ceil(4)
}
