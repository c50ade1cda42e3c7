use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("{what} exceeded its node budget of {budget}")]
    ResourceLimit { what: &'static str, budget: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid modulator: {0}")]
    InvalidModulator(String),

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
