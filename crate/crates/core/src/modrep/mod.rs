//! Modules over group algebras of permutation groups and their structure.

mod algebra;
mod decompose;
mod heller;
mod hom;
mod iso;
mod meataxe;
mod module;
mod pims;
mod vertex;

pub use algebra::GroupAlgebraElement;
pub use decompose::{
    decompose, decompose_with_budget, indecomposables_isomorphic, is_projective, projective_free, split_once,
    Decomposition, Piece, Summand, DECOMPOSE_BUDGET,
};
pub use heller::{coheller, heller, omega, projective_cover, radical, socle, top};
pub use hom::{generating_seeds, hom_space, hom_spin, is_hom, spin_operators, HomSpace, Seed};
pub use iso::{is_isomorphic, period, period_certified, Iso, Period};
pub use meataxe::{composition_factors, distinct_factors, is_irreducible, simples_isomorphic, split, Split};
pub use module::{Coords, Module};
pub use pims::{fitting, hom_from_pim, pims, stable_nullity, Pim, Pims};
pub use vertex::{rel_projective, relative_trace, source, summand_of_induced, vertex, InducedWitness};

#[cfg(test)]
mod tests;
