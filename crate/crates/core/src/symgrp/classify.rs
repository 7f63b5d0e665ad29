//! Classification of the `(Δ, D)` double cosets of `S_pk`, where `Δ = Δ_k(S_p)` and
//! `D = Δ_k(S_p)·C_k^[p]`, by the intersection `xDx⁻¹ ∩ Δ`.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use super::group::{block_subgroup, slots_subgroup, Group};
use super::perm::Perm;
use super::spec::{cyclic_diag, lambda_subgroup, sp_diag};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosetKind {
    /// `xDx⁻¹ ∩ Δ = Δ`.
    Full,
    /// `|xDx⁻¹ ∩ Δ| = p`.
    Cyclic,
    /// `p ∤ |xDx⁻¹ ∩ Δ|`.
    Coprime,
    /// `p` divides the intersection order but neither of the above holds.
    Other,
}

#[derive(Clone, Debug)]
pub struct CosetClass {
    pub rep: Perm,
    pub intersection: Arc<Group>,
    pub kind: CosetKind,
}

pub struct DoubleCosetData {
    pub p: usize,
    pub k: usize,
    pub g: Arc<Group>,
    pub delta: Arc<Group>,
    pub d: Arc<Group>,
    /// `Δ_k(C_p)`.
    pub delta_cyclic: Arc<Group>,
    /// `(∏_r C_p[r])·S_k^[p]`.
    pub centralizer_product: Arc<Group>,
    /// `∏_r C_p[r]`.
    pub slots: Arc<Group>,
    /// `S_k^[p]`.
    pub blocks: Arc<Group>,
    pub classes: Vec<CosetClass>,
}

fn same_elements(a: &Group, b: &Group) -> bool {
    a.order() == b.order() && a.elements().iter().all(|g| b.contains(g))
}

/// `x B x⁻¹ ∩ A`.
pub fn conjugate_intersection(a: &Group, b: &Group, x: &Perm) -> Result<Arc<Group>> {
    let xbx = Group::conjugate(b, x)?;
    a.intersection(&xbx, format!("{}^x n {}", b.name(), a.name()))
}

impl DoubleCosetData {
    pub fn new(p: usize, k: usize) -> Result<Self> {
        if p < 2 || k == 0 {
            return Err(Error::BadParams(format!("need p ≥ 2 and k ≥ 1, got ({p}, {k})")));
        }
        let g = Group::symmetric(p * k)?;
        let delta = sp_diag(p, k)?;
        let d = lambda_subgroup(p, k)?;
        let delta_cyclic = cyclic_diag(p, k)?;
        let cp = Group::cyclic(p)?;
        let sk = Group::symmetric(k)?;
        let slots = Group::generated(p * k, slots_subgroup(&cp, k), format!("C{p}^{k}"))?;
        let blocks = Group::generated(p * k, block_subgroup(&sk, p), format!("S{k}^[{p}]"))?;
        let mut gens = slots.gens().to_vec();
        gens.extend(blocks.gens().iter().cloned());
        let centralizer_product = Group::generated(p * k, gens, format!("C{p}^{k}.S{k}^[{p}]"))?;
        let mut classes = Vec::new();
        for rep in g.double_cosets(&delta, &d)? {
            let intersection = conjugate_intersection(&delta, &d, &rep)?;
            let ord = intersection.order();
            let kind = if ord % p != 0 {
                CosetKind::Coprime
            } else if same_elements(&intersection, &delta) {
                CosetKind::Full
            } else if ord == p {
                CosetKind::Cyclic
            } else {
                CosetKind::Other
            };
            classes.push(CosetClass {
                rep,
                intersection,
                kind,
            });
        }
        Ok(DoubleCosetData {
            p,
            k,
            g,
            delta,
            d,
            delta_cyclic,
            centralizer_product,
            slots,
            blocks,
            classes,
        })
    }

    pub fn count(&self, kind: CosetKind) -> usize {
        self.classes.iter().filter(|c| c.kind == kind).count()
    }

    /// `Σ |ΔxD|` over all representatives.
    pub fn covered(&self) -> usize {
        self.classes
            .iter()
            .map(|c| Group::double_coset_size(&self.delta, &c.rep, &self.d))
            .sum()
    }

    fn double_coset(&self, x: &Perm) -> HashSet<Perm> {
        let mut out = HashSet::new();
        for u in self.delta.elements() {
            let ux = u.then_after(x);
            for v in self.d.elements() {
                out.insert(ux.then_after(v));
            }
        }
        out
    }

    /// Writes `x = y z` with `y ∈ ∏ C_p[r]` and `z ∈ S_k^[p]`.
    pub fn factor(&self, x: &Perm) -> Option<(Perm, Perm)> {
        self.blocks.elements().iter().find_map(|z| {
            let y = x.then_after(&z.inverse());
            self.slots.contains(&y).then(|| (y, z.clone()))
        })
    }

    /// For a representative with `p | |xDx⁻¹ ∩ Δ|`: a replacement `x₀` in the centralizer
    /// product with `Δx₀D = ΔxD`, together with its factorization.
    pub fn centralizing_rep(&self, x: &Perm) -> Option<ChoiceWitness> {
        let coset = self.double_coset(x);
        let x0 = self
            .centralizer_product
            .elements()
            .iter()
            .find(|c| coset.contains(*c))?
            .clone();
        let (y, z) = self.factor(&x0)?;
        Some(ChoiceWitness { x0, y, z })
    }

    /// Checks the intersection formula for `x₀ = y z` in the centralizer product:
    /// `x₀Dx₀⁻¹ ∩ Δ = yΔy⁻¹ ∩ Δ`, equal to `Δ` if `y ∈ Δ_k(C_p)` and to `Δ_k(C_p)` otherwise.
    pub fn check_choice(&self, w: &ChoiceWitness) -> Result<bool> {
        let lhs = conjugate_intersection(&self.delta, &self.d, &w.x0)?;
        let mid = conjugate_intersection(&self.delta, &self.delta, &w.y)?;
        let expected = if self.delta_cyclic.contains(&w.y) {
            &self.delta
        } else {
            &self.delta_cyclic
        };
        Ok(same_elements(&lhs, &mid) && same_elements(&lhs, expected))
    }

    /// Whether `xDx⁻¹ ∩ Δ` is exactly `Δ` or `Δ_k(C_p)`.
    pub fn intersection_is_standard(&self, class: &CosetClass) -> bool {
        same_elements(&class.intersection, &self.delta)
            || same_elements(&class.intersection, &self.delta_cyclic)
    }
}

#[derive(Clone, Debug)]
pub struct ChoiceWitness {
    pub x0: Perm,
    pub y: Perm,
    pub z: Perm,
}
