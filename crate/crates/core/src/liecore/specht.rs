//! Hook Specht modules `S^{(p−j,1^j)}` as exterior powers of the standard module, and their duals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gflin::{FieldCtx, Mat};
use crate::modrep::Module;
use crate::symgrp::Group;

/// The sum-zero submodule of the natural permutation module of `S_n`.
pub fn standard_module(n: usize, field: &Arc<FieldCtx>) -> Result<Module> {
    let g = Group::symmetric(n)?;
    let perm = Module::natural_perm(&g, field);
    let mut basis = Mat::zeros(field, n - 1, n);
    for i in 0..n - 1 {
        basis.set(i, i, 1);
        basis.set(i, n - 1, field.neg(1));
    }
    Ok(perm.submodule(&basis).with_label(format!("S^({},1)", n - 1)))
}

/// `j`-th exterior power of a module (action by `j × j` minors).
pub fn exterior_power(m: &Module, j: usize) -> Result<Module> {
    if j == 0 {
        return Ok(Module::trivial(m.group(), m.field()));
    }
    if j > m.dim() {
        return Err(Error::OutOfRange(format!("exterior power {j} of a {}-dim module", m.dim())));
    }
    let action = m.action().iter().map(|a| a.compound(j)).collect();
    Module::from_parts(m.group(), m.field(), action, format!("L^{j}({})", m.label()))
}

fn hook_label(p: usize, j: usize) -> String {
    if j == 0 {
        format!("({p})")
    } else if j == 1 {
        format!("({},1)", p - j)
    } else {
        format!("({},1^{j})", p - j)
    }
}

/// `S^{(p−j,1^j)}` for the symmetric group `S_p`, `0 ≤ j ≤ p−1`.
pub fn hook_specht(p: usize, j: usize, field: &Arc<FieldCtx>) -> Result<Module> {
    if p == 0 || j >= p {
        return Err(Error::OutOfRange(format!("hook (p-j,1^j) with p = {p}, j = {j}")));
    }
    let m = if j == 0 {
        Module::trivial(&Group::symmetric(p)?, field)
    } else {
        exterior_power(&standard_module(p, field)?, j)?
    };
    Ok(m.with_label(format!("S^{}", hook_label(p, j))))
}

/// `S_{(p−j,1^j)} ≅ (S^{(p−j,1^j)})*`.
pub fn dual_hook_specht(p: usize, j: usize, field: &Arc<FieldCtx>) -> Result<Module> {
    Ok(hook_specht(p, j, field)?
        .dual()
        .with_label(format!("S_{}", hook_label(p, j))))
}
