use thiserror::Error;

use crate::partition::{Cell, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cell ({}, {}) is not a box of {partition}", cell.row, cell.col)]
    InvalidCell { cell: Cell, partition: Partition },

    #[error("core parameter t must be at least 2, got {0}")]
    InvalidCoreParameter(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    Domain(String),
}
