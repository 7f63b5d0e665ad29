//! Modular representations of symmetric groups: finite-field linear algebra,
//! permutation groups, module decomposition, Heller translates and Lie modules.

pub mod cache;
pub mod error;
pub mod gflin;
pub mod liecore;
pub mod modrep;
pub mod rng;
pub mod symgrp;
pub mod verify;

pub use error::{Error, Result};
pub use gflin::{field_make, FieldCtx, Mat};
