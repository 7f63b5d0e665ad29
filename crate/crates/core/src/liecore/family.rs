//! The family of modules attached to a pair `(p, k)` with `p ∤ k`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cache::ModuleCache;
use crate::error::{Error, Result};
use crate::gflin::{field_make, FieldCtx};
use crate::modrep::{decompose, Module};
use crate::rng;
use crate::symgrp::Group;

use super::lie::{klyachko_field, lie_module};
use super::specht::{dual_hook_specht, hook_specht};
use super::symmetrize::{induced_sp_sk, lambda_module, symmetrize};

/// Largest `pk` handled by default (plus the special pair `(5, 1)`).
pub const FAMILY_MAX_DEGREE: usize = 6;

pub struct LieFamily {
    pub p: usize,
    pub k: usize,
    /// Base field `GF(p)`.
    pub field: Arc<FieldCtx>,
    /// Field containing a primitive `k`-th root of unity.
    pub ext_field: Arc<FieldCtx>,
    pub lie_k: Module,
    /// Indecomposable summands `P_1, …, P_{m_k}` of `Lie(k)`.
    pub pieces: Vec<Module>,
    pub lie_pk: Module,
    pub lambda: Module,
    pub sym: Module,
    /// `Ind_{S_p × S_k}^{S_pk}(F ⊠ P_s)`, one per piece.
    pub induced_pieces: Vec<Module>,
    /// `S^{(p−j,1^j)}` for `0 ≤ j ≤ p−1`.
    pub hooks: Vec<Module>,
    pub dual_hooks: Vec<Module>,
}

/// Parameters and member labels of a family, as written next to the module cache.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub p: usize,
    pub k: usize,
    pub d: u32,
    pub seed: u64,
    pub m_k: usize,
    /// Member labels in assembly order.
    pub order: Vec<String>,
    /// Member label to cache hash.
    pub members: BTreeMap<String, String>,
}

impl Manifest {
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_toml(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn check_pair(p: usize, k: usize) -> Result<()> {
    if !crate::gflin::field::is_prime(p as u32) {
        return Err(Error::NotPrime(p as u32));
    }
    if k == 0 || k.is_multiple_of(p) {
        return Err(Error::BadParams(format!("need p ∤ k, got p = {p}, k = {k}")));
    }
    if p * k > FAMILY_MAX_DEGREE && (p, k) != (5, 1) {
        return Err(Error::Budget {
            what: "family degree pk",
            needed: p * k,
            limit: FAMILY_MAX_DEGREE,
        });
    }
    Ok(())
}

impl LieFamily {
    pub fn build(p: usize, k: usize) -> Result<Self> {
        Self::build_with(p, k, None)
    }

    /// Builds the family, reusing and filling `cache` when given.
    pub fn build_with(p: usize, k: usize, cache: Option<&ModuleCache>) -> Result<Self> {
        check_pair(p, k)?;
        if let Some(c) = cache {
            if let Some(fam) = Self::load(p, k, c)? {
                return Ok(fam);
            }
        }
        let field = field_make(p as u32, 1)?;
        let ext_field = klyachko_field(k, p as u32)?;
        let lie_k = lie_module(k, &field)?.with_label(format!("Lie({k})"));
        let pieces: Vec<Module> = decompose(&lie_k)?
            .pieces
            .into_iter()
            .enumerate()
            .map(|(s, piece)| piece.module.with_label(format!("P{}(Lie({k}))", s + 1)))
            .collect();
        let lie_pk = lie_module(p * k, &field)?.with_label(format!("Lie({})", p * k));
        let lambda = lambda_module(p, k, &ext_field)?;
        let sym = symmetrize(&lie_k, p)?;
        let trivial = Module::trivial(&Group::symmetric(p)?, &field).with_label("F");
        let induced_pieces = pieces
            .iter()
            .map(|ps| induced_sp_sk(&trivial, ps))
            .collect::<Result<Vec<_>>>()?;
        let hooks = (0..p)
            .map(|j| hook_specht(p, j, &field))
            .collect::<Result<Vec<_>>>()?;
        let dual_hooks = (0..p)
            .map(|j| dual_hook_specht(p, j, &field))
            .collect::<Result<Vec<_>>>()?;
        let fam = LieFamily {
            p,
            k,
            field,
            ext_field,
            lie_k,
            pieces,
            lie_pk,
            lambda,
            sym,
            induced_pieces,
            hooks,
            dual_hooks,
        };
        if let Some(c) = cache {
            for m in fam.members() {
                c.store(m)?;
            }
            c.store_manifest(&fam.manifest(|m| c.key(m.field(), m.group(), m.label())))?;
        }
        Ok(fam)
    }

    /// Reassembles a family from its cached manifest, if every member is present.
    pub fn load(p: usize, k: usize, cache: &ModuleCache) -> Result<Option<Self>> {
        let Some(man) = cache.load_manifest(p, k)? else {
            return Ok(None);
        };
        let mut mods = Vec::with_capacity(man.order.len());
        for label in &man.order {
            let Some(hash) = man.members.get(label) else {
                return Ok(None);
            };
            match cache.load(hash)? {
                Some(m) => mods.push(m),
                None => return Ok(None),
            }
        }
        let m_k = man.m_k;
        if mods.len() != 4 + 2 * m_k + 2 * p {
            return Err(Error::Parse(format!("manifest {p}-{k} lists {} members", mods.len())));
        }
        let mut it = mods.into_iter();
        let mut take = |n: usize| -> Vec<Module> { it.by_ref().take(n).collect() };
        let head = take(4);
        let pieces = take(m_k);
        let induced_pieces = take(m_k);
        let hooks = take(p);
        let dual_hooks = take(p);
        let [lie_k, lie_pk, lambda, sym]: [Module; 4] = head.try_into().expect("four members");
        Ok(Some(LieFamily {
            p,
            k,
            field: lie_k.field().clone(),
            ext_field: lambda.field().clone(),
            lie_k,
            pieces,
            lie_pk,
            lambda,
            sym,
            induced_pieces,
            hooks,
            dual_hooks,
        }))
    }

    /// `m_k`: the number of indecomposable summands of `Lie(k)`.
    pub fn m_k(&self) -> usize {
        self.pieces.len()
    }

    /// All members with their labels.
    pub fn members(&self) -> Vec<&Module> {
        let mut out = vec![&self.lie_k, &self.lie_pk, &self.lambda, &self.sym];
        out.extend(self.pieces.iter());
        out.extend(self.induced_pieces.iter());
        out.extend(self.hooks.iter());
        out.extend(self.dual_hooks.iter());
        out
    }

    pub fn manifest(&self, hash: impl Fn(&Module) -> String) -> Manifest {
        Manifest {
            p: self.p,
            k: self.k,
            d: self.ext_field.d(),
            seed: rng::global_seed(),
            m_k: self.m_k(),
            order: self.members().iter().map(|m| m.label().to_string()).collect(),
            members: self
                .members()
                .into_iter()
                .map(|m| (m.label().to_string(), hash(m)))
                .collect(),
        }
    }
}
