use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gflin::{Elem, FieldCtx, Mat};
use crate::rng;
use crate::symgrp::{Group, Perm};

/// A right `FG`-module: row vectors, with `g` acting by right multiplication by `action`.
///
/// `action[i]` is the matrix of `group.gens()[i]`, and `ρ(g ∘ h) = ρ(g) ρ(h)`.
#[derive(Clone)]
pub struct Module {
    field: Arc<FieldCtx>,
    group: Arc<Group>,
    dim: usize,
    action: Vec<Mat>,
    label: String,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module[{}] dim {} over {} for {}",
            self.label,
            self.dim,
            self.field.name(),
            self.group.name()
        )
    }
}

/// Coordinates with respect to a fixed basis of a subspace.
pub struct Coords {
    pivots: Vec<usize>,
    echelon: Mat,
    transform: Mat,
}

impl Coords {
    /// `basis` must have independent rows.
    pub fn new(basis: &Mat) -> Self {
        let k = basis.rows();
        let m = basis.cols();
        let aug = basis.hstack(&Mat::identity(basis.field(), k)).rref();
        assert!(
            aug.pivots.iter().take(k).all(|&c| c < m) && aug.pivots.len() >= k,
            "basis rows are dependent"
        );
        Coords {
            pivots: aug.pivots[..k].to_vec(),
            echelon: aug.r.row_range(0, k).col_range(0, m),
            transform: aug.r.row_range(0, k).col_range(m, m + k),
        }
    }

    /// Coordinates of the rows of `v`, which must lie in the span.
    pub fn of(&self, v: &Mat) -> Mat {
        let c = v.select_cols(&self.pivots);
        debug_assert!(c.mul(&self.echelon) == *v, "vector outside the subspace");
        c.mul(&self.transform)
    }

    pub fn try_of(&self, v: &Mat) -> Option<Mat> {
        let c = v.select_cols(&self.pivots);
        (c.mul(&self.echelon) == *v).then(|| c.mul(&self.transform))
    }
}

impl Module {
    /// Builds a module and checks invertibility and the homomorphism property.
    pub fn new(group: &Arc<Group>, field: &Arc<FieldCtx>, action: Vec<Mat>, label: impl Into<String>) -> Result<Self> {
        let m = Module::from_parts(group, field, action, label)?;
        m.validate()?;
        Ok(m)
    }

    /// Like [`Module::new`] with the dimension given explicitly, which matters for groups
    /// without generators.
    pub fn with_dim(
        group: &Arc<Group>,
        field: &Arc<FieldCtx>,
        dim: usize,
        action: Vec<Mat>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if action.is_empty() && group.gens().is_empty() {
            return Ok(Module::raw(group, field, dim, action, label.into()));
        }
        let m = Module::new(group, field, action, label)?;
        if m.dim != dim {
            return Err(Error::InvalidModule(format!("action has dimension {}, expected {dim}", m.dim)));
        }
        Ok(m)
    }

    /// Builds a module checking only shapes.
    pub fn from_parts(group: &Arc<Group>, field: &Arc<FieldCtx>, action: Vec<Mat>, label: impl Into<String>) -> Result<Self> {
        if action.len() != group.gens().len() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} generators",
                action.len(),
                group.gens().len()
            )));
        }
        let dim = action.first().map_or(0, |a| a.rows());
        for a in &action {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
            }
            if **a.field() != **field {
                return Err(Error::FieldMismatch("action matrix over the wrong field".into()));
            }
        }
        Ok(Module {
            field: field.clone(),
            group: group.clone(),
            dim,
            action,
            label: label.into(),
        })
    }

    fn raw(group: &Arc<Group>, field: &Arc<FieldCtx>, dim: usize, action: Vec<Mat>, label: String) -> Self {
        Module {
            field: field.clone(),
            group: group.clone(),
            dim,
            action,
            label,
        }
    }

    /// Zero-dimensional module.
    pub fn zero(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        let action = group.gens().iter().map(|_| Mat::zeros(field, 0, 0)).collect();
        Module::raw(group, field, 0, action, "0".into())
    }

    /// Checks invertibility of the generators and `ρ(gh) = ρ(g)ρ(h)` on 20 seeded random pairs.
    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.action.iter().enumerate() {
            if !a.is_invertible() {
                return Err(Error::InvalidModule(format!("generator {i} acts singularly")));
            }
        }
        if self.dim == 0 || self.group.order() == 1 {
            return Ok(());
        }
        let mut rng = rng::stream(&format!("validate:{}:{}", self.label, self.dim));
        let els = self.group.elements();
        for _ in 0..20 {
            let g = &els[rng.gen_range(0..els.len())];
            let h = &els[rng.gen_range(0..els.len())];
            let v = Mat::random(&self.field, 1, self.dim, &mut rng);
            let lhs = self.apply_element(&v, &g.then_after(h));
            let rhs = self.apply_element(&self.apply_element(&v, g), h);
            if lhs != rhs {
                return Err(Error::InvalidModule(format!(
                    "action is not a homomorphism at ({g}, {h})"
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Mat] {
        &self.action
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn same_context(&self, other: &Module) -> Result<()> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field.name(),
                other.field.name()
            )));
        }
        if *self.group != *other.group {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.group.name(),
                other.group.name()
            )));
        }
        Ok(())
    }

    /// `v · ρ(g)` for row vectors `v`.
    pub fn apply_element(&self, v: &Mat, g: &Perm) -> Mat {
        let w = self.group.word(g).expect("element of the module's group");
        w.iter().fold(v.clone(), |acc, &s| acc.mul(&self.action[s]))
    }

    /// `ρ(g)` for an element of the group.
    pub fn element_matrix(&self, g: &Perm) -> Mat {
        let w = self.group.word(g).expect("element of the module's group");
        let mut it = w.iter();
        match it.next() {
            None => Mat::identity(&self.field, self.dim),
            Some(&s) => it.fold(self.action[s].clone(), |acc, &t| acc.mul(&self.action[t])),
        }
    }

    /// `ρ(g)` for every element, indexed like `group.elements()`.
    pub fn all_element_matrices(&self) -> Vec<Mat> {
        let n = self.group.order();
        let mut out: Vec<Option<Mat>> = vec![None; n];
        for &(e, p, s) in self.group.bfs_tree() {
            let m = if s == usize::MAX {
                Mat::identity(&self.field, self.dim)
            } else {
                self.action[s].mul(out[p].as_ref().expect("parent before child"))
            };
            out[e] = Some(m);
        }
        out.into_iter().map(|m| m.expect("all elements reached")).collect()
    }

    /// `ρ(Σ c_g g)`.
    pub fn algebra_matrix(&self, terms: &[(Perm, Elem)]) -> Mat {
        let mut acc = Mat::zeros(&self.field, self.dim, self.dim);
        for (g, c) in terms {
            acc.add_scaled(*c, &self.element_matrix(g));
        }
        acc
    }

    // ---- constructions ----

    pub fn trivial(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        let action = group.gens().iter().map(|_| Mat::identity(field, 1)).collect();
        Module::raw(group, field, 1, action, "F".into())
    }

    /// One-dimensional module of a cyclic group with one generator acting by `zeta`.
    pub fn character(group: &Arc<Group>, field: &Arc<FieldCtx>, zeta: Elem, faithful: bool) -> Result<Self> {
        if group.gens().len() != 1 {
            return Err(Error::BadParams("character module needs a one-generator group".into()));
        }
        let n = group.order() as u64;
        if zeta == 0 || field.pow(zeta, n) != 1 {
            return Err(Error::BadParams(format!("zeta^{n} != 1")));
        }
        if faithful && field.order(zeta) != n {
            return Err(Error::BadParams(format!("zeta does not have order {n}")));
        }
        Ok(Module::raw(
            group,
            field,
            1,
            vec![Mat::scalar(field, 1, zeta)],
            format!("F_delta({zeta})"),
        ))
    }

    /// One-dimensional module where each generator acts by the given scalar.
    pub fn linear(group: &Arc<Group>, field: &Arc<FieldCtx>, scalars: &[Elem], label: &str) -> Result<Self> {
        let action = scalars.iter().map(|&c| Mat::scalar(field, 1, c)).collect();
        Module::new(group, field, action, label)
    }

    /// Sign module.
    pub fn sign(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        let action = group
            .gens()
            .iter()
            .map(|g| Mat::scalar(field, 1, if g.sign() == 1 { 1 } else { field.neg(1) }))
            .collect();
        Module::raw(group, field, 1, action, "sgn".into())
    }

    /// Right regular module: basis `e_x` for `x ∈ G`, `e_x · g = e_{x ∘ g}`.
    pub fn regular(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        let action = group
            .gens()
            .iter()
            .map(|g| {
                let img: Vec<usize> = group
                    .elements()
                    .iter()
                    .map(|x| group.index_of(&x.then_after(g)).unwrap())
                    .collect();
                Mat::permutation(field, &img)
            })
            .collect();
        Module::raw(group, field, group.order(), action, "FG".into())
    }

    /// The group algebra as a left module, turned into a right module by `v · g = g⁻¹ v`:
    /// `e_x · g = e_{g⁻¹ ∘ x}`.
    pub fn left_regular(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        let action = group
            .gens()
            .iter()
            .map(|g| {
                let gi = g.inverse();
                let img: Vec<usize> = group
                    .elements()
                    .iter()
                    .map(|x| group.index_of(&gi.then_after(x)).unwrap())
                    .collect();
                Mat::permutation(field, &img)
            })
            .collect();
        Module::raw(group, field, group.order(), action, "FG(left)".into())
    }

    /// Natural permutation module on `{1..n}`: `e_i · g = e_{g⁻¹(i)}`.
    pub fn natural_perm(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        let action = group
            .gens()
            .iter()
            .map(|g| {
                let gi = g.inverse();
                let img: Vec<usize> = (0..group.degree()).map(|i| gi.at(i)).collect();
                Mat::permutation(field, &img)
            })
            .collect();
        Module::raw(group, field, group.degree(), action, "F^n".into())
    }

    /// Permutation module on the left cosets `xH`: `e_{xH} · g = e_{g⁻¹xH}`.
    pub fn coset_module(group: &Arc<Group>, h: &Group, field: &Arc<FieldCtx>) -> Result<Self> {
        let reps = group.transversal(h)?;
        let mut coset_of = vec![0usize; group.order()];
        for (j, r) in reps.iter().enumerate() {
            for x in h.elements() {
                coset_of[group.index_of(&r.then_after(x)).unwrap()] = j;
            }
        }
        let action = group
            .gens()
            .iter()
            .map(|g| {
                let gi = g.inverse();
                let img: Vec<usize> = reps
                    .iter()
                    .map(|r| coset_of[group.index_of(&gi.then_after(r)).unwrap()])
                    .collect();
                Mat::permutation(field, &img)
            })
            .collect();
        Ok(Module::raw(
            group,
            field,
            reps.len(),
            action,
            format!("F[{}/{}]", group.name(), h.name()),
        ))
    }

    pub fn dual(&self) -> Module {
        let action = self
            .action
            .iter()
            .map(|a| a.inverse().expect("invertible action").transpose())
            .collect();
        Module::raw(&self.group, &self.field, self.dim, action, format!("({})*", self.label))
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        self.same_context(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(Module::raw(
            &self.group,
            &self.field,
            self.dim + other.dim,
            action,
            format!("{}+{}", self.label, other.label),
        ))
    }

    pub fn direct_sum_all(parts: &[Module], group: &Arc<Group>, field: &Arc<FieldCtx>) -> Result<Module> {
        let mut acc = Module::zero(group, field);
        for p in parts {
            acc = if acc.is_zero() { p.clone() } else { acc.direct_sum(p)? };
        }
        Ok(acc)
    }

    pub fn tensor_inner(&self, other: &Module) -> Result<Module> {
        self.same_context(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.kron(b))
            .collect();
        Ok(Module::raw(
            &self.group,
            &self.field,
            self.dim * other.dim,
            action,
            format!("{}(x){}", self.label, other.label),
        ))
    }

    pub fn restrict(&self, h: &Arc<Group>) -> Result<Module> {
        self.group.check_subgroup(h)?;
        let action = h.gens().iter().map(|g| self.element_matrix(g)).collect();
        Ok(Module::raw(
            h,
            &self.field,
            self.dim,
            action,
            format!("Res_{}({})", h.name(), self.label),
        ))
    }

    /// Induction along right cosets `H t_j` with `t_j` the inverses of the left transversal.
    /// Block `(j, k)` of `g` is `ρ(t_j g t_k⁻¹)` when that lies in `H`.
    pub fn induce(&self, g: &Arc<Group>) -> Result<Module> {
        let h = &self.group;
        g.check_subgroup(h)?;
        let reps: Vec<Perm> = g.transversal(h)?.iter().map(|r| r.inverse()).collect();
        let n = reps.len();
        let mut coset_of = vec![0usize; g.order()];
        for (j, t) in reps.iter().enumerate() {
            for x in h.elements() {
                coset_of[g.index_of(&x.then_after(t)).unwrap()] = j;
            }
        }
        let hmats = self.all_element_matrices();
        let d = self.dim;
        let action = g
            .gens()
            .iter()
            .map(|s| {
                let mut m = Mat::zeros(&self.field, n * d, n * d);
                for (j, t) in reps.iter().enumerate() {
                    let tg = t.then_after(s);
                    let k = coset_of[g.index_of(&tg).unwrap()];
                    let hh = tg.then_after(&reps[k].inverse());
                    let block = &hmats[h.index_of(&hh).expect("coset decomposition")];
                    for r in 0..d {
                        m.row_mut(j * d + r)[k * d..(k + 1) * d].copy_from_slice(block.row(r));
                    }
                }
                m
            })
            .collect();
        Ok(Module::raw(
            g,
            &self.field,
            n * d,
            action,
            format!("Ind^{}({})", g.name(), self.label),
        ))
    }

    /// The submodule spanned by the (independent, invariant) rows of `basis`.
    pub fn submodule(&self, basis: &Mat) -> Module {
        if basis.rows() == 0 {
            return Module::zero(&self.group, &self.field).with_label(format!("0<{}", self.label));
        }
        let c = Coords::new(basis);
        let action = self.action.iter().map(|a| c.of(&basis.mul(a))).collect();
        Module::raw(
            &self.group,
            &self.field,
            basis.rows(),
            action,
            format!("sub({})", self.label),
        )
    }

    /// Quotient by the submodule spanned by `sub` (any spanning rows), with the projection
    /// matrix `M -> M/sub`.
    pub fn quotient(&self, sub: &Mat) -> (Module, Mat) {
        let u = sub.row_space();
        let piv = u.rref().pivots;
        let mut is_piv = vec![false; self.dim];
        for &p in &piv {
            is_piv[p] = true;
        }
        let rest: Vec<usize> = (0..self.dim).filter(|&j| !is_piv[j]).collect();
        let reduce = |v: &Mat| -> Mat {
            if u.rows() == 0 {
                return v.select_cols(&rest);
            }
            let c = v.select_cols(&piv);
            v.sub(&c.mul(&u)).select_cols(&rest)
        };
        let proj = reduce(&Mat::identity(&self.field, self.dim));
        let action = self
            .action
            .iter()
            .map(|a| reduce(&a.select_rows(&rest)))
            .collect();
        (
            Module::raw(
                &self.group,
                &self.field,
                rest.len(),
                action,
                format!("{}/sub", self.label),
            ),
            proj,
        )
    }

    /// Module in a new basis: rows of `b` (invertible) become the basis.
    pub fn change_basis(&self, b: &Mat) -> Module {
        let inv = b.inverse().expect("invertible change of basis");
        let action = self.action.iter().map(|a| b.mul(a).mul(&inv)).collect();
        Module::raw(&self.group, &self.field, self.dim, action, self.label.clone())
    }

    /// Replaces the acting group by an identical copy with another name.
    pub fn relabel_group(&self, g: &Arc<Group>) -> Result<Module> {
        if g.gens() != self.group.gens() {
            return Err(Error::ContextMismatch("generator lists differ".into()));
        }
        Ok(Module::raw(g, &self.field, self.dim, self.action.clone(), self.label.clone()))
    }

    /// Scalar extension to a larger field of the same characteristic.
    pub fn scalar_extend(&self, target: &Arc<FieldCtx>) -> Result<Module> {
        let action = self
            .action
            .iter()
            .map(|a| a.scalar_extend(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Module::raw(&self.group, target, self.dim, action, self.label.clone()))
    }

    /// Whether the rows of `basis` span a submodule.
    pub fn is_invariant(&self, basis: &Mat) -> bool {
        let span = basis.row_space();
        self.action.iter().all(|a| basis.mul(a).rows_in_span(&span))
    }

    /// Matrices of a conjugated module `x M` over `x H x⁻¹` (for `x` in the ambient group).
    pub fn conjugate(&self, x: &Perm, target: &Arc<Group>) -> Result<Module> {
        // target generators are x g x⁻¹ for g in gens of self.group, possibly in another order
        let mut cache: HashMap<Perm, Mat> = HashMap::new();
        let xi = x.inverse();
        let action = target
            .gens()
            .iter()
            .map(|g| {
                let h = g.conjugate_by(&xi);
                if !self.group.contains(&h) {
                    return Err(Error::NotSubgroup(format!("{g} not in the conjugate group")));
                }
                Ok(cache
                    .entry(h.clone())
                    .or_insert_with(|| self.element_matrix(&h))
                    .clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Module::raw(
            target,
            &self.field,
            self.dim,
            action,
            format!("{}^{}", self.label, x),
        ))
    }
}
