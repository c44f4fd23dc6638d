//! Twisted group homology H₀, H₁ from finite presentations via free
//! differential calculus, the standard pure braid presentation, and the
//! assembly of H_i(PBr; A) into FI-modules.

mod assemble;
mod complex;
mod pbr;
mod words;

pub use assemble::{sigma_chain_map, sn_action_and_assemble};
pub use complex::{FoxComplex, TwistedHomology};
pub use pbr::{conjugation_table, pbr_presentation, pure_gens, validate_conjugation_table};
pub use words::{
    concat_words, fox_derivative, invert_word, reduce_word, GroupPresentation, GroupRingElement,
    Word,
};

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("relator violation: {0}")]
    Relator(String),
    #[error("chain map check failed: {0}")]
    ChainMap(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("transposition relations fail on homology: {0}")]
    Coxeter(String),
    #[error("conjugation table mismatch: {0}")]
    Table(String),
}
