//! Weakly toll convexity and its relatives on small graphs and graph
//! products.
//!
//! The crate computes walk-based intervals (weakly toll, semi weakly toll,
//! toll, monophonic, geodesic), convex hulls and the exact weakly toll
//! number / hull number, builds lexicographic, Cartesian, strong and
//! corona products, and checks closed-form interval formulas for those
//! products against the direct computation. A literal walk-enumeration
//! oracle backs the interval engine.

pub mod closed_forms;
pub mod convexity;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod intervals;
pub mod io;
pub mod oracle;
pub mod products;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use intervals::IntervalKind;
pub use vertex_set::VertexSet;
