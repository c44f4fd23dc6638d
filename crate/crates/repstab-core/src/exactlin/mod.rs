//! Exact linear algebra over the rationals (or a prime field): scalars,
//! sparse matrices with deterministic elimination, and chain complexes.

mod complex;
mod matrix;
mod scalar;

pub use complex::ChainComplex;
pub use matrix::{col_axpy, rank_dense, Matrix, RankData, SparseCol};
pub use scalar::{q, qq, rat_sign, Field, Scalar};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("cannot parse scalar: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("boundary maps do not square to zero at degree {0}")]
    BoundarySquare(i64),
    #[error("singular matrix")]
    Singular,
}
