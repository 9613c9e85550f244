//! Exact dense linear algebra: matrices, canonical subspaces, and
//! exhaustive enumeration over finite fields.

mod enumerate;
mod matrix;
mod subspace;

use thiserror::Error;

pub use enumerate::{
    all_vectors, enumerate_subspaces, gaussian_binomial, pivot_patterns, projective_points, subspace_count,
    subspaces_with_pivots, DEFAULT_ENUMERATION_BUDGET,
};
pub use matrix::Matrix;
pub use subspace::{format_vector, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("row {row} has length {len}, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("cannot multiply {left:?} by {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("enumeration requires a finite field")]
    InfiniteField,
    #[error("{what} budget exceeded: {} > {budget}", count.map_or("more than 2^128".to_string(), |c| c.to_string()))]
    BudgetExceeded { what: &'static str, count: Option<u128>, budget: u64 },
}
