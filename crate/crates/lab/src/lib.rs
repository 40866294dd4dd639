//! Command-line driver for `engel-core`: JSON and text reports, golden
//! files for the worked examples, and a rayon-backed search executor.

pub mod cli;
pub mod golden;
mod pool;
pub mod report;

pub use pool::Pool;
pub use report::{Report, Status, SCHEMA};

/// Exit codes of the `engel-lab` binary.
pub mod exit {
    pub const OK: i32 = 0;
    /// A verified claim did not hold: golden mismatch, failed check or
    /// theorem violation.
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAP_EXCEEDED: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Core(#[from] engel_core::Error),
    #[error(transparent)]
    Parse(#[from] engel_core::ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("golden file {path}: {source}")]
    Golden { path: String, source: std::io::Error },
    #[error("golden file {path} is not valid JSON: {source}")]
    GoldenJson { path: String, source: serde_json::Error },
}

impl LabError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Core(engel_core::Error::CapExceeded { .. } | engel_core::Error::OrderOverflow) => exit::CAP_EXCEEDED,
            Self::Golden { .. } | Self::GoldenJson { .. } => exit::MISMATCH,
            _ => exit::USAGE,
        }
    }
}
