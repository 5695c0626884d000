//! Error type shared by the whole library.
//!
//! Errors split into three families the CLI maps to distinct exit codes:
//! input/precondition errors, budget exhaustion, and certificate-hypothesis
//! violations discovered during verification.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("invalid family parameters: {0}")]
    BadFamilyParams(String),

    #[error("list size function must satisfy sum f(i) = m + n: expected {expected}, got {got}")]
    FSumMismatch { expected: u64, got: u64 },

    #[error("list size must be at least 1 (vertex {0})")]
    ZeroListSize(usize),

    #[error("column multiplicities must sum to the row count: rows {rows}, sum {sum}")]
    MultiplicitySum { rows: usize, sum: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("weight scheme does not match orientation out-degrees at vertex {vertex}")]
    WeightShape { vertex: usize },

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("hypergraph edge {index} has {size} vertices, expected {expected}")]
    NonUniformEdge {
        index: usize,
        size: usize,
        expected: usize,
    },

    #[error("cyclotomic order mismatch: {0} vs {1}")]
    MixedOrder(u32, u32),

    #[error("polynomial degree {got} violates the required degree {expected}")]
    DegreeMismatch { expected: u64, got: u64 },

    #[error("line graph requires a simple base graph (parallel edge at index {0})")]
    ParallelEdges(usize),

    #[error("supplied pre-image is not {d}-regular (vertex {vertex} has degree {degree})")]
    PreimageNotRegular { d: u32, vertex: usize, degree: u32 },

    #[error("supplied pre-image is not {d}-edge-colorable")]
    PreimageNotEdgeColorable { d: u32 },

    #[error("supplied pre-image's line graph does not match the input graph")]
    PreimageMismatch,

    #[error("uniqueness of the {k}-coloring was not established: {reason}")]
    UniquenessNotEstablished { k: u32, reason: String },

    #[error("polynomial is nonzero at improper box point {point:?}")]
    ImproperNonzero { point: Vec<u32> },

    #[error("cycle length {0} is not an even number >= 4")]
    OddCycleLength(u32),

    #[error("forbidden-difference set must contain 0")]
    ZeroNotInT,

    #[error("graph must be connected for this operation")]
    NotConnected,

    #[error("graph must be nonempty")]
    EmptyGraph,

    #[error("enumeration budget exceeded: needs {needed} steps, limit {limit}")]
    Budget { needed: u64, limit: u64 },
}

impl Error {
    /// True for budget exhaustion, which the CLI maps to its own exit code.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
