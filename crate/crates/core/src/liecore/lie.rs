//! The Dynkin–Specht–Wever element, Lie modules and the Klyachko induced model.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gflin::field::mult_order_mod;
use crate::gflin::{field_make, spin, FieldCtx};
use crate::modrep::{spin_operators, GroupAlgebraElement, Module};
use crate::symgrp::perm::descending_cycle;
use crate::symgrp::{Group, Perm};

/// Largest `n` for which `Lie(n)` is built inside the regular module.
pub const LIE_MAX_DEGREE: usize = 7;

/// `w_n = (1 − d_2)(1 − d_3)⋯(1 − d_n)` in `F S_n`, with `d_i = (i, i−1, …, 1)`.
pub fn dsw(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Result<GroupAlgebraElement> {
    let n = group.degree();
    let one = GroupAlgebraElement::one(group, field);
    let mut w = one.clone();
    for i in 2..=n {
        let d = descending_cycle(i, n)?;
        let factor = one.sub(&GroupAlgebraElement::basis_element(group, field, &d));
        w = w.mul(&factor);
    }
    Ok(w)
}

/// `Lie(n)`: the left ideal `F S_n · w_n`, as a right module via `v · g = g⁻¹ v`.
pub fn lie_module(n: usize, field: &Arc<FieldCtx>) -> Result<Module> {
    if n == 0 {
        return Err(Error::BadParams("Lie(0) is undefined".into()));
    }
    if n > LIE_MAX_DEGREE {
        return Err(Error::Budget {
            what: "lie_module degree",
            needed: n,
            limit: LIE_MAX_DEGREE,
        });
    }
    let g = Group::symmetric(n)?;
    let w = dsw(&g, field)?;
    let reg = Module::left_regular(&g, field);
    let basis = spin(&w.to_row(), &spin_operators(&reg))?;
    Ok(reg.submodule(&basis).with_label(format!("Lie({n})/{}", field.name())))
}

/// Field `GF(p^d)` with `d` the multiplicative order of `p` modulo `k`.
pub fn klyachko_field(k: usize, p: u32) -> Result<Arc<FieldCtx>> {
    if (k as u32).is_multiple_of(p) {
        return Err(Error::BadParams(format!("p = {p} divides k = {k}")));
    }
    field_make(p, mult_order_mod(p, k as u32))
}

/// `Ind_{C_k}^{S_k} F_δ` over `GF(p^d)`, `d = ord_k(p)`, for the faithful character sending
/// `(1 2 ⋯ k)` to the least generator power of order `k`.
pub fn lie_klyachko(k: usize, p: u32) -> Result<Module> {
    lie_klyachko_over(k, &klyachko_field(k, p)?)
}

/// `Ind_{C_k}^{S_k} F_δ` over any field containing a primitive `k`-th root of unity.
pub fn lie_klyachko_over(k: usize, field: &Arc<FieldCtx>) -> Result<Module> {
    let sk = Group::symmetric(k)?;
    if k == 1 {
        return Ok(Module::trivial(&sk, field).with_label("Lie(1)".to_string()));
    }
    let pts: Vec<usize> = (1..=k).collect();
    let ck = sk.subgroup(vec![Perm::cycle(k, &pts)?], format!("C{k}"))?;
    let zeta = field
        .root_of_unity(k as u64)
        .ok_or_else(|| Error::BadParams(format!("{} has no root of unity of order {k}", field.name())))?;
    let delta = Module::character(&ck, field, zeta, true)?;
    Ok(delta
        .induce(&sk)?
        .with_label(format!("Ind_C{k}^S{k}(F_delta)/{}", field.name())))
}
