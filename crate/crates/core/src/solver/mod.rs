//! Exact solvers used as ground truth for every transformation.

pub mod annotated;
pub mod sat;
pub mod domset;
pub mod mis;
