//! Minimal reverse-mode autodiff: exactly the tensor ops the decoder model
//! needs, recorded on a [`Tape`], with a 64-bit shadow evaluator backing the
//! finite-difference gradient oracle.
//!
//! Determinism contract: every kernel uses a fixed summation order (parallel
//! kernels split work per output row, never per reduction), so identical
//! inputs give bit-identical outputs regardless of thread count.

mod kernels;
mod shadow;
mod tape;
mod tensor;

pub mod gradcheck;

pub use tape::{SparseTarget, Tape, TensorId};
pub use tensor::Tensor;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("tape already consumed by a backward pass")]
    TapeReused,
    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),
    #[error("token id {id} out of range for vocab size {vocab}")]
    TokenOutOfRange { id: u32, vocab: usize },
}

pub type Result<T> = std::result::Result<T, NumericsError>;
