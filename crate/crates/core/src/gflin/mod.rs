//! Exact dense linear algebra over GF(p^d).

pub mod bitmat;
pub mod echelon;
pub mod field;
pub mod mat;
pub mod poly;
pub mod text;

pub use echelon::{spin, spin_echelon, Echelon};
pub use field::{Elem, FieldCtx};
pub use mat::{Mat, Rref};
pub use poly::Poly;

use std::sync::Arc;

use crate::error::Result;

/// Constructs GF(p^d).
pub fn field_make(p: u32, d: u32) -> Result<Arc<FieldCtx>> {
    FieldCtx::new(p, d)
}

#[cfg(test)]
mod tests;
