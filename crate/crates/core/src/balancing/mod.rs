//! Vector balancing: permutations whose consecutive segments have small
//! discrepancy, chunkings built on them, and the color-balanced divisions
//! that regroup division parts through these chunkings.

mod colored;
mod io;
mod steinitz;
mod two_vector;

pub use colored::{
    color_counts, d_color_division, two_color_division, verify_d_color, verify_two_color, ColorReport,
    DColorDivision, TwoColorDivision,
};
pub use io::ParsePartitionError;
pub use steinitz::{max_prefix_norm, steinitz_order, vector_partition_steinitz};
pub use two_vector::{balance_permutation, chunk_permutation, partition_two_vectors, Chunking, TwoVectorSet};

use thiserror::Error;

use crate::division::DivisionError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BalanceError {
    #[error("vectors do not sum to the required value: {0}")]
    UnbalancedInput(String),
    #[error("vector {index} has infinity norm above 1")]
    NormViolation { index: usize },
    #[error("vector {index} has a negative coordinate")]
    NegativeCoordinate { index: usize },
    #[error("vector {index} lies outside the admissible range: {detail}")]
    OutOfRange { index: usize, detail: String },
    #[error("vector {index} has dimension {found}, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("color class {0} is empty")]
    EmptyColorClass(usize),
    #[error(transparent)]
    Division(#[from] DivisionError),
}

/// A permutation of `0..n` cut into consecutive chunks, with a signed
/// discrepancy certificate per chunk (one entry per dimension).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedPartition<T> {
    pub permutation: Vec<usize>,
    /// `chunks[j]` lists vector indices, in permutation order.
    pub chunks: Vec<Vec<usize>>,
    /// Smaller chunk size for two-vector chunkings.
    pub q_prime: Option<usize>,
    pub certificates: Vec<Vec<T>>,
}

impl<T> BalancedPartition<T> {
    /// Structural check: the permutation is a bijection on `0..n` and the
    /// chunks are its consecutive pieces.
    pub fn check_structure(&self) -> Result<(), String> {
        let n = self.permutation.len();
        let mut seen = vec![false; n];
        for &p in &self.permutation {
            if p >= n || seen[p] {
                return Err(format!("permutation entry {p} is out of range or repeated"));
            }
            seen[p] = true;
        }
        let flat: Vec<usize> = self.chunks.iter().flatten().copied().collect();
        if flat != self.permutation {
            return Err("chunks are not the consecutive pieces of the permutation".into());
        }
        Ok(())
    }
}

/// `floor(3d / 2)`.
pub fn steinitz_bound(d: usize) -> usize {
    3 * d / 2
}
