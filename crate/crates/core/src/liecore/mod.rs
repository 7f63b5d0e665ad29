//! Lie modules of symmetric groups and the modules built from them.

mod family;
mod lie;
mod specht;
mod symmetrize;

#[cfg(test)]
mod tests;

pub use crate::modrep::GroupAlgebraElement;
pub use family::{check_pair, LieFamily, Manifest, FAMILY_MAX_DEGREE};
pub use lie::{dsw, klyachko_field, lie_klyachko, lie_klyachko_over, lie_module, LIE_MAX_DEGREE};
pub use specht::{dual_hook_specht, exterior_power, hook_specht, standard_module};
pub use symmetrize::{
    induced_sk_sp, induced_sp_sk, lambda_base, lambda_module, outer_sk_sp, outer_sp_sk,
    symmetrize, tensor_power_wreath,
};
