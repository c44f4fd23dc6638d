//! Braid groups and braid-category modules: the Burau family (reduced and
//! unreduced), stabilization, polynomial degree, orbit generation degree,
//! and restriction to pure braid generators.

mod burau;
mod laurent;
mod module;

pub use burau::{
    check_braid_relations, reduced_burau, reduced_burau_generic, unreduced_burau_generic,
};
pub use laurent::{Laurent, LaurentMatrix};
pub use module::{
    br_generation_degree, burau_ubr_module, pure_generator_word, restrict_to_pure,
    trivial_ubr_module, BraidWord, BurauVariant, GenerationReport, UBrModule,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BraidError {
    #[error("representation relation check failed: {0}")]
    Relation(String),
    #[error("stabilization does not intertwine generator {gen} at rank {rank}")]
    Intertwining { rank: usize, gen: usize },
}
