//! Power domination on graphs: the observation process, exhaustive
//! solvers, a linear-time dynamic program for weighted trees, generators
//! for the extremal 4-regular claw-free family, and an experiment harness
//! for the `(n + 1) / 5` bound.

pub mod bound_lab;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod propagation;
pub mod solver;
pub mod tree;
pub mod tree_dp;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use propagation::{closure, closure_trace, is_pds, ObservationState, TraceStep};
pub use solver::{classify_pair, min_pds, min_weight_pds, PdsResult};
pub use tree::{tree_ordering, WeightedTree};
pub use tree_dp::{dp_class_minima, merge_child, wpdt, Class, ClassVector, Cost};
