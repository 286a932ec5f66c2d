use std::io;

use thiserror::Error;

/// Failures of a command-line run.
#[derive(Debug, Error)]
pub enum RunError {
    /// Invalid combination of options.
    #[error("usage: {0}")]
    Usage(String),
    /// The core pipeline rejected its input.
    #[error(transparent)]
    Core(#[from] quartets_core::Error),
    /// Fast search and brute force disagree.
    #[error("oracle mismatch at d={bound}: {missing} quartets missing from search, {extra} unexpected")]
    OracleMismatch {
        /// oracle domain bound
        bound: u64,
        /// found by the oracle only
        missing: usize,
        /// found by the search only
        extra: usize,
        /// human-readable listing of the differing quartets
        diff: Vec<String>,
    },
    /// A reported quartet failed independent verification.
    #[error("quartet failed verification: {0}")]
    Unverified(String),
    /// Output could not be written.
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    /// CSV encoding failed.
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    /// JSON encoding failed.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl RunError {
    /// Process exit status: 1 for usage errors, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 1,
            _ => 2,
        }
    }
}
