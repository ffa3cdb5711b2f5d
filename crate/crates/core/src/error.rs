use thiserror::Error;

/// Errors raised by the layout, routing, oracle and rendering operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node count {0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("node count 2^{dims} exceeds the supported maximum 2^{max_dims}")]
    TooLarge { dims: u32, max_dims: u32 },

    #[error("dimension {k} is outside 1..={dims}")]
    InvalidDimension { k: u32, dims: u32 },

    #[error("cut position {index} is outside the allowed range {lo}..={hi}")]
    InvalidCut { index: usize, lo: usize, hi: usize },

    #[error("terminal slot {slot} is outside 1..={dims}")]
    InvalidSlot { slot: u32, dims: u32 },

    #[error("operation requires at least 2 nodes, got {0}")]
    Degenerate(usize),

    #[error("terminal order must be a permutation of 1..={dims}")]
    InvalidOrder { dims: u32 },

    #[error("assignment covers {assigned} wires but {expected} were routed")]
    IncompleteAssignment { assigned: usize, expected: usize },

    #[error("exact track search is capped at {cap} wires, got {wires}")]
    InstanceTooLarge { wires: usize, cap: usize },

    #[error("render needs {needed} columns, cap is {cap}")]
    RenderTooLarge { needed: usize, cap: usize },

    #[error("{0}")]
    Usage(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
