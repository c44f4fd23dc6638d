//! Truncated FI- and U1-modules: structure, functoriality, shifts,
//! kernels/cokernels, polynomial-degree certification, and JSON I/O.

mod module;
mod poly;
mod schema;

pub use module::{
    constant_module, free_module, injective_words, ker_coker, quotient_basis, shift, zero_module,
    FIModule, U1Module, ValidationReport, Violation,
};
pub use poly::{polynomial_degree, PolyDegree, PolyReport, ShiftTower};
pub use schema::FIModuleRepr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FigError {
    #[error("malformed module data: {0}")]
    Malformed(String),
    #[error("structural validation failed: {0}")]
    Invalid(String),
}
