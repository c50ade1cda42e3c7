//! The kernel for Independent Set parameterized by a c-treedepth modulator.
//!
//! Per level `c`, Rules 1 to 3 are applied exhaustively in that order,
//! then the root of every component of `G[R]` is moved into the modulator
//! and the level drops by one. Once `R` is empty the annotated instance is
//! turned back into a plain Independent Set instance.

mod algorithm;
mod chunks;
mod pipeline;
mod plain;
mod rules;

pub use algorithm::{kernelize, KernelEvent, KernelTrace, LevelSnapshot};
pub use chunks::{chunk_size_limit, enumerate_chunks, Chunks};
pub use pipeline::{annotated_pipeline, full_pipeline, kernel_exponents, ModulatorSource, PipelineOutput, PipelineReport};
pub use plain::annotated_to_plain;
pub use rules::{max_components, lift_roots, lift_roots_unchecked, rule1, rule2, rule3};
