//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by state construction, protocol runs, and experiment I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} = {value} outside [{lo}, {hi}]")]
    Domain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("qubit index {index} out of range for {num_qubits}-qubit state")]
    QubitIndex { index: usize, num_qubits: usize },

    #[error("state corrupted: {0}")]
    StateCorruption(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("n_shots must be at least 1")]
    ZeroShots,

    #[error("sequence too short: need at least {needed} entries, got {got}")]
    SequenceTooShort { needed: usize, got: usize },

    #[error("undefined denominator: {0}")]
    UndefinedDenominator(&'static str),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("divergent target sequence: |y| exceeded {bound} at step {step}")]
    Divergence { step: usize, bound: f64 },

    #[error("empty split segment: {0}")]
    EmptySegment(&'static str),

    #[error("invalid configuration:\n{}", .0.join("\n"))]
    InvalidConfig(Vec<String>),

    #[error("estimated cost {estimate:.1}s exceeds budget {budget:.1}s; rerun with the budget confirmation flag")]
    BudgetExceeded { estimate: f64, budget: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
