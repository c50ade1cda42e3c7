//! Kernelization for Independent Set / Vertex Cover parameterized by the
//! size of a c-treedepth modulator, together with the matching
//! hardness-side instance generators and exact solvers that check every
//! transformation on small inputs.

pub mod bitset;
pub mod cnf;
pub mod error;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod modulator;
pub mod reductions;
pub mod solver;
pub mod treedepth;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use treedepth::TdDecomposition;
