//! Elements of the group algebra `F G`, stored densely over the group's element order.

use std::sync::Arc;

use rand::Rng;

use crate::gflin::{Elem, FieldCtx, Mat};
use crate::symgrp::{Group, Perm};

use super::module::Module;

#[derive(Clone, Debug)]
pub struct GroupAlgebraElement {
    group: Arc<Group>,
    field: Arc<FieldCtx>,
    coeffs: Vec<Elem>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.coeffs == other.coeffs
    }
}

impl GroupAlgebraElement {
    pub fn zero(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            field: field.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn basis_element(group: &Arc<Group>, field: &Arc<FieldCtx>, g: &Perm) -> Self {
        let mut a = Self::zero(group, field);
        a.add_term(g, 1);
        a
    }

    pub fn one(group: &Arc<Group>, field: &Arc<FieldCtx>) -> Self {
        Self::basis_element(group, field, &Perm::identity(group.degree()))
    }

    pub fn from_terms(group: &Arc<Group>, field: &Arc<FieldCtx>, terms: &[(Perm, Elem)]) -> Self {
        let mut a = Self::zero(group, field);
        for (g, c) in terms {
            a.add_term(g, *c);
        }
        a
    }

    /// A random element supported on `support` random group elements.
    pub fn random<R: Rng + ?Sized>(group: &Arc<Group>, field: &Arc<FieldCtx>, support: usize, rng: &mut R) -> Self {
        let mut a = Self::zero(group, field);
        for _ in 0..support {
            let i = rng.gen_range(0..group.order());
            let c = rng.gen_range(1..field.q()) as Elem;
            a.coeffs[i] = field.add(a.coeffs[i], c);
        }
        a
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, g: &Perm) -> Elem {
        self.group.index_of(g).map_or(0, |i| self.coeffs[i])
    }

    pub fn add_term(&mut self, g: &Perm, c: Elem) {
        let i = self.group.index_of(g).expect("element of the group");
        self.coeffs[i] = self.field.add(self.coeffs[i], c);
    }

    pub fn terms(&self) -> Vec<(Perm, Elem)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.group.element(i).clone(), c))
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let f = &self.field;
        let mut r = self.clone();
        for (a, &b) in r.coeffs.iter_mut().zip(&o.coeffs) {
            *a = f.add(*a, b);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let f = &self.field;
        let mut r = self.clone();
        for (a, &b) in r.coeffs.iter_mut().zip(&o.coeffs) {
            *a = f.sub(*a, b);
        }
        r
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        let mut r = self.clone();
        for a in r.coeffs.iter_mut() {
            *a = f.mul(*a, c);
        }
        r
    }

    /// Product in `F G`, with `g · h` the composite `g ∘ h`.
    pub fn mul(&self, o: &Self) -> Self {
        let f = &self.field;
        let n = self.group.order();
        let table = self.group.mult_table();
        let mut out = vec![0; n];
        let right: Vec<(usize, Elem)> = o
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
            .collect();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &table[i * n..(i + 1) * n];
            for &(j, b) in &right {
                let k = row[j] as usize;
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            field: self.field.clone(),
            coeffs: out,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.group, &self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The anti-involution `g ↦ g⁻¹`.
    pub fn antipode(&self) -> Self {
        let inv = self.group.inverse_index();
        let mut out = vec![0; self.coeffs.len()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[inv[i]] = c;
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            field: self.field.clone(),
            coeffs: out,
        }
    }

    /// Coordinates as a row vector of the right regular module.
    pub fn to_row(&self) -> Mat {
        Mat::row_vector(&self.field, self.coeffs.clone())
    }

    pub fn from_row(group: &Arc<Group>, field: &Arc<FieldCtx>, row: &[Elem]) -> Self {
        assert_eq!(row.len(), group.order());
        GroupAlgebraElement {
            group: group.clone(),
            field: field.clone(),
            coeffs: row.to_vec(),
        }
    }

    /// `ρ_M(self)`.
    pub fn matrix_on(&self, m: &Module) -> Mat {
        if self.support_size() * 4 > self.group.order() {
            let mats = m.all_element_matrices();
            let mut acc = Mat::zeros(m.field(), m.dim(), m.dim());
            for (i, &c) in self.coeffs.iter().enumerate() {
                if c != 0 {
                    acc.add_scaled(c, &mats[i]);
                }
            }
            acc
        } else {
            m.algebra_matrix(&self.terms())
        }
    }

    /// Matrix of right multiplication `x ↦ x · self` on the regular module.
    pub fn right_mult_matrix(&self) -> Mat {
        let n = self.group.order();
        let mut out = Mat::zeros(&self.field, n, n);
        let table = self.group.mult_table();
        for i in 0..n {
            for (j, &c) in self.coeffs.iter().enumerate() {
                if c != 0 {
                    out.set(i, table[i * n + j] as usize, c);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `x ↦ self · x` on the regular module.
    pub fn left_mult_matrix(&self) -> Mat {
        let n = self.group.order();
        let mut out = Mat::zeros(&self.field, n, n);
        let table = self.group.mult_table();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                for i in 0..n {
                    out.set(i, table[j * n + i] as usize, c);
                }
            }
        }
        out
    }
}
