//! Matching structure and independence invariants of R-disjoint graphs.

pub mod caps;
pub mod cli;
pub mod error;
pub mod generator;
pub mod graph;
pub mod independence;
pub mod matching;
pub mod spectral;
pub mod structure;
pub mod verifier;

pub use caps::Caps;
pub use error::{Enumeration, Error, Result};
pub use graph::{Graph, VertexSet};
