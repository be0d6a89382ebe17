//! Covering numbers of graphs, multigraphs and hypergraphs.
//!
//! A *covering class* of a hypergraph is a set of edges meeting every vertex;
//! the *covering number* is the largest `k` such that the edges split into `k`
//! covering classes. This crate provides the data model and verifier,
//! levellings, constructive splitters for graphs and multigraphs, a
//! resampling splitter for uniform hypergraphs, generators for the extremal
//! families, and an exact oracle for small instances.

pub mod error;
pub mod exact;
pub mod format;
pub mod generators;
pub mod graph_cover;
pub mod hypergraph;
pub mod levelling;
pub mod lll;
pub mod partition;
pub mod rng;

pub use error::{Error, Result};
pub use hypergraph::{Edge, EdgeInstance, MultiHypergraph};
pub use levelling::{is_levelling, level, pull_back, trim_to_degree, LevellingMap};
pub use partition::{verify_cover_partition, CoverPartition, Verification};
