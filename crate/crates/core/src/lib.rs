//! Exact Ramsey arrowing for small graphs.
//!
//! [`arrow::arrows`] decides `G → (F, H)` by exhaustive red/blue search with
//! pruning. [`critical`] builds Ramsey numbers and critical Ramsey numbers on
//! top of it, [`constructions`] gives explicit extremal colorings and
//! [`cert`] reads and writes checkable certificates.

pub mod arrow;
pub mod cert;
pub mod coloring;
pub mod constructions;
pub mod critical;
pub mod detect;
pub mod graph;
pub mod orbits;
pub mod params;

pub use arrow::{
    arrows, find_free_coloring, verify_free, ArrowError, ArrowResult, SearchOptions, Verdict,
};
pub use coloring::{Color, TwoColoring};
pub use detect::Pattern;
pub use graph::{DeletionClass, EdgeId, Graph, GraphError};
