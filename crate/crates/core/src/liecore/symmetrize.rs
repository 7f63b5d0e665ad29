//! Outer tensor products over Young-type subgroups, the symmetrization `S^p(U)` and `Λ_k`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gflin::{Elem, FieldCtx, Mat};
use crate::modrep::Module;
use crate::symgrp::spec::{lambda_subgroup, sk_times_sp, sp_times_sk, wreath};
use crate::symgrp::Group;

fn check_symmetric(m: &Module, n: usize) -> Result<()> {
    let s = Group::symmetric(n)?;
    if m.group().degree() != n || m.group().gens() != s.gens() {
        return Err(Error::ContextMismatch(format!(
            "{} is not a module for S{n} on its Coxeter generators",
            m.label()
        )));
    }
    Ok(())
}

/// `X ⊠ Y` over `H = Δ_b(S_a)·S_b^[a]` given generators diagonal-first; `X` over `S_a`, `Y` over `S_b`.
fn outer(x: &Module, y: &Module, h: &Arc<Group>, label: String) -> Result<Module> {
    if **x.field() != **y.field() {
        return Err(Error::FieldMismatch("outer tensor over different fields".into()));
    }
    let f = x.field();
    let ix = Mat::identity(f, x.dim());
    let iy = Mat::identity(f, y.dim());
    let mut action: Vec<Mat> = x.action().iter().map(|a| a.kron(&iy)).collect();
    action.extend(y.action().iter().map(|b| ix.kron(b)));
    Module::from_parts(h, f, action, label)
}

/// `X ⊠ Y` for `S_p × S_k` identified with `Δ_k(S_p)·S_k^[p]`.
pub fn outer_sp_sk(x: &Module, y: &Module) -> Result<Module> {
    let p = x.group().degree();
    let k = y.group().degree();
    check_symmetric(x, p)?;
    check_symmetric(y, k)?;
    let h = sp_times_sk(p, k)?;
    outer(x, y, &h, format!("{}[x]{}", x.label(), y.label()))
}

/// `Y ⊠ X` for `S_k × S_p` identified with `Δ_p(S_k)·S_p^[k]`.
pub fn outer_sk_sp(y: &Module, x: &Module) -> Result<Module> {
    let k = y.group().degree();
    let p = x.group().degree();
    check_symmetric(y, k)?;
    check_symmetric(x, p)?;
    let h = sk_times_sp(k, p)?;
    outer(y, x, &h, format!("{}[x]{}", y.label(), x.label()))
}

/// `Ind_{S_p × S_k}^{S_pk}(X ⊠ Y)` with `S_p × S_k = Δ_k(S_p)·S_k^[p]`.
pub fn induced_sp_sk(x: &Module, y: &Module) -> Result<Module> {
    let n = x.group().degree() * y.group().degree();
    let m = outer_sp_sk(x, y)?;
    let label = format!("Ind_SpxSk({})", m.label());
    Ok(m.induce(&Group::symmetric(n)?)?.with_label(label))
}

/// `Ind_{S_k × S_p}^{S_pk}(Y ⊠ X)` with `S_k × S_p = Δ_p(S_k)·S_p^[k]`.
pub fn induced_sk_sp(y: &Module, x: &Module) -> Result<Module> {
    let n = x.group().degree() * y.group().degree();
    let m = outer_sk_sp(y, x)?;
    let label = format!("Ind_SkxSp({})", m.label());
    Ok(m.induce(&Group::symmetric(n)?)?.with_label(label))
}

/// Matrix of the place permutation `v_1 ⊗ ⋯ ⊗ v_p ↦ v_{τ(1)} ⊗ ⋯ ⊗ v_{τ(p)}` on `U^{⊗p}`.
fn place_permutation(field: &Arc<FieldCtx>, dim: usize, tau: &[u8]) -> Mat {
    let p = tau.len();
    let total = dim.pow(p as u32);
    let mut img = vec![0usize; total];
    let mut digits = vec![0usize; p];
    for (idx, out) in img.iter_mut().enumerate() {
        let mut rest = idx;
        for slot in (0..p).rev() {
            digits[slot] = rest % dim;
            rest /= dim;
        }
        *out = (0..p).fold(0, |acc, slot| acc * dim + digits[tau[slot] as usize]);
    }
    Mat::permutation(field, &img)
}

/// `U^{⊗p}` as a module for `S_k ≀ S_p = (∏_r S_k[r])·S_p^[k]`: factor-wise base action and
/// place permutation of the top group.
pub fn tensor_power_wreath(u: &Module, p: usize) -> Result<Module> {
    let k = u.group().degree();
    check_symmetric(u, k)?;
    let w = wreath(k, p)?;
    let f = u.field();
    let d = u.dim();
    let mut action = Vec::new();
    for r in 0..p {
        for a in u.action() {
            let left = Mat::identity(f, d.pow(r as u32));
            let right = Mat::identity(f, d.pow((p - 1 - r) as u32));
            action.push(left.kron(a).kron(&right));
        }
    }
    for tau in Group::symmetric(p)?.gens() {
        action.push(place_permutation(f, d, tau.images0()));
    }
    Module::from_parts(&w, f, action, format!("{}^(x){p}", u.label()))
}

/// `S^p(U) = Ind_{S_k ≀ S_p}^{S_pk}(U^{⊗p})`.
pub fn symmetrize(u: &Module, p: usize) -> Result<Module> {
    let k = u.group().degree();
    let t = tensor_power_wreath(u, p)?;
    Ok(t
        .induce(&Group::symmetric(p * k)?)?
        .with_label(format!("S^{p}({})", u.label())))
}

/// `F ⊠ F_δ` over `D = Δ_k(S_p)·C_k^[p]`: trivial on the diagonal, `zeta` on the block cycle.
pub fn lambda_base(p: usize, k: usize, field: &Arc<FieldCtx>, zeta: Elem) -> Result<Module> {
    if field.pow(zeta, k as u64) != 1 || field.order(zeta) != k as u64 {
        return Err(Error::BadParams(format!(
            "{zeta} is not a primitive {k}-th root of unity in {}",
            field.name()
        )));
    }
    let d = lambda_subgroup(p, k)?;
    let diag = Group::symmetric(p)?.gens().len();
    let action = d
        .gens()
        .iter()
        .enumerate()
        .map(|(i, _)| Mat::scalar(field, 1, if i < diag { 1 } else { zeta }))
        .collect();
    Module::new(&d, field, action, "F[x]F_delta")
}

/// `Λ_k = Ind_D^{S_pk}(F ⊠ F_δ)` with the canonical primitive `k`-th root of unity.
pub fn lambda_module(p: usize, k: usize, field: &Arc<FieldCtx>) -> Result<Module> {
    let zeta = field.root_of_unity(k as u64).ok_or_else(|| {
        Error::BadParams(format!("{} lacks a primitive {k}-th root of unity", field.name()))
    })?;
    let base = lambda_base(p, k, field, zeta)?;
    Ok(base
        .induce(&Group::symmetric(p * k)?)?
        .with_label(format!("Lambda_{k}(p={p})")))
}
