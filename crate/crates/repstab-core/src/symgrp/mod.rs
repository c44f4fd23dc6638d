//! Symmetric-group combinatorics and representation theory: permutations,
//! partitions, Young-subgroup transversals, induced representations,
//! characters and multiplicities, branching, and uniform multiplicity
//! stability detection.
//!
//! Global convention: 𝔖ₙ embeds in 𝔖ₙ₊₁ acting on the LAST n letters (the
//! new letter is prepended), matching left stabilization everywhere in this
//! crate. Conjugacy classes are ordered by cycle-type partition,
//! largest-first.

mod characters;
mod induce;
mod partition;
mod perm;
mod rep;
mod ums;

pub use characters::{
    character_of, character_tools, class_representative, mn_character, multiplicities,
    CharacterVector,
};
pub use induce::{induce, young_transversal};
pub use partition::{class_size, factorial, multinomial, partitions, Partition};
pub use perm::Permutation;
pub use rep::{
    all_permutations, permutation_rep, regular_rep, sign_rep, trivial_rep, SymRep,
};
pub use ums::{ums_detect, PadRule, UmsReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SymError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("Coxeter relation violated: {0}")]
    Coxeter(String),
    #[error("not a character: {0}")]
    NotACharacter(String),
}
