//! Permutations, symmetric groups, block/diagonal/slot embeddings and coset enumeration.

pub mod classify;
pub mod group;
pub mod perm;
pub mod spec;

pub use classify::{ChoiceWitness, CosetClass, CosetKind, DoubleCosetData};
pub use group::{generated_by_elements, Group, ENUMERATION_LIMIT};
pub use perm::{block_embed, compose, descending_cycle, diag_embed, slot_embed, Perm};
pub use spec::parse_subgroup;

#[cfg(test)]
mod tests;
